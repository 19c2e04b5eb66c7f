// harness.hpp
//
// Experiment orchestration: config parsing, seeded trial batches, aggregate
// statistics, and the two sweep tables (rounds vs |H|, rounds vs epsilon).
#pragma once
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "arbitrary.hpp"
#include "concept.hpp"
#include "datagen.hpp"
#include "instrumentation.hpp"
#include "io.hpp"
#include "majority.hpp"
#include "randomized.hpp"
#include "teacher.hpp"

namespace lrc {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Algorithm { majority, randomized, arbitrary };

inline std::string to_string(Algorithm a) {
    switch (a) {
    case Algorithm::majority: return "majority";
    case Algorithm::randomized: return "randomized";
    case Algorithm::arbitrary: return "arbitrary";
    }
    return "?";
}

inline Algorithm parse_algorithm(const std::string& s) {
    if (s == "majority") return Algorithm::majority;
    if (s == "randomized") return Algorithm::randomized;
    if (s == "arbitrary") return Algorithm::arbitrary;
    throw ConfigError("unknown algorithm '" + s + "'");
}

namespace detail {

template <class T>
T parse_unsigned_key(const KeyValues& kv, const std::string& key, T fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        const std::int64_t v = parse_integer(it->second);
        if (v < 0) throw ConfigError(key + " must be non-negative");
        return static_cast<T>(v);
    } catch (const FormatError& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

inline double parse_real_key(const KeyValues& kv, const std::string& key, double fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    try {
        return parse_real(it->second);
    } catch (const FormatError& e) {
        throw ConfigError(key + ": " + e.what());
    }
}

inline std::string string_key(const KeyValues& kv, const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
}

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    if (trim(text).empty()) return out;
    for (auto cell : split_commas(text)) {
        try {
            if constexpr (std::is_floating_point_v<T>) out.push_back(parse_real(cell));
            else {
                const auto v = parse_integer(cell);
                if (v <= 0) throw ConfigError(key + " entries must be positive");
                out.push_back(static_cast<T>(v));
            }
        } catch (const FormatError& e) {
            throw ConfigError(key + ": " + e.what());
        }
    }
    return out;
}

inline void reject_unknown_keys(const KeyValues& kv, const std::set<std::string>& known) {
    for (const auto& [k, v] : kv)
        if (!known.contains(k)) throw ConfigError("unknown config key '" + k + "'");
}

template <class Seq>
std::string join(const Seq& seq) {
    std::string s;
    for (const auto& v : seq) {
        if (!s.empty()) s += ',';
        if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) s += format_real(v);
        else if constexpr (std::is_arithmetic_v<std::decay_t<decltype(v)>>) s += std::to_string(v);
        else s += v;
    }
    return s;
}

} // namespace detail

// Where the concept class comes from.
struct DatasetSpec {
    std::string kind{"random"};  // clustered | random | identity | tight | file
    std::size_t rows{64};
    std::size_t cols{32};
    std::size_t clusters{10};
    std::size_t flips{20};
    value_t alphabet{2};
    std::uint64_t seed{1};
    std::size_t tight_n{2};
    std::string path;

    static inline const std::set<std::string> keys{"dataset", "rows", "cols", "clusters", "flips",
                                                   "alphabet", "dataset_seed", "tight_n", "dataset_path"};

    static DatasetSpec from_key_values(const KeyValues& kv) {
        using namespace detail;
        DatasetSpec d;
        d.kind = string_key(kv, "dataset", d.kind);
        d.rows = parse_unsigned_key(kv, "rows", d.rows);
        d.cols = parse_unsigned_key(kv, "cols", d.cols);
        d.clusters = parse_unsigned_key(kv, "clusters", d.clusters);
        d.flips = parse_unsigned_key(kv, "flips", d.flips);
        d.alphabet = parse_unsigned_key(kv, "alphabet", d.alphabet);
        d.seed = parse_unsigned_key(kv, "dataset_seed", d.seed);
        d.tight_n = parse_unsigned_key(kv, "tight_n", d.tight_n);
        d.path = string_key(kv, "dataset_path", d.path);
        static const std::set<std::string> kinds{"clustered", "random", "identity", "tight", "file"};
        if (!kinds.contains(d.kind)) throw ConfigError("unknown dataset kind '" + d.kind + "'");
        if (d.kind == "file" && d.path.empty()) throw ConfigError("dataset = file needs dataset_path");
        return d;
    }

    void to_key_values(KeyValues& kv) const {
        kv["dataset"] = kind;
        if (kind == "file") {
            kv["dataset_path"] = path;
            return;
        }
        if (kind == "tight") {
            kv["tight_n"] = std::to_string(tight_n);
            return;
        }
        kv["rows"] = std::to_string(rows);
        if (kind == "identity") return;
        kv["cols"] = std::to_string(cols);
        kv["alphabet"] = std::to_string(alphabet);
        kv["dataset_seed"] = std::to_string(seed);
        if (kind == "clustered") {
            kv["clusters"] = std::to_string(clusters);
            kv["flips"] = std::to_string(flips);
        }
    }

    ClusterConfig cluster_config() const {
        return ClusterConfig{cols, rows, clusters, flips, alphabet, seed};
    }
};

// A generated or loaded matrix plus whatever the generator knows about it.
struct Dataset {
    HypothesisMatrix matrix;
    KeyValues metadata;
};

namespace detail {

inline Dataset build_dataset_unchecked(const DatasetSpec& spec) {
    KeyValues meta;
    spec.to_key_values(meta);
    if (spec.kind == "clustered") {
        auto cd = generate_clustered(spec.cluster_config());
        meta["row_regenerations"] = std::to_string(cd.row_regenerations);
        meta["column_repairs"] = std::to_string(cd.column_repairs);
        meta["cluster_assignment"] = "round_robin";
        meta["cluster_of_row"] = join(cd.cluster_of_row);
        return {std::move(cd.matrix), std::move(meta)};
    }
    if (spec.kind == "random") return {generate_random(spec.rows, spec.cols, spec.alphabet, spec.seed), meta};
    if (spec.kind == "identity") return {generate_identity(spec.rows), meta};
    if (spec.kind == "tight") {
        auto tb = generate_tight_bound(spec.tight_n);
        meta["modified_row"] = std::to_string(tb.modified_row);
        meta["tight_target"] = std::to_string(tb.target);
        return {std::move(tb.matrix), std::move(meta)};
    }
    HypothesisMatrix H = read_matrix(spec.path);
    if (auto v = validate(H)) throw ConfigError("dataset " + spec.path + ": " + v->describe());
    return {std::move(H), meta};
}

} // namespace detail

// Bad parameters, unreadable files and malformed matrices surface as ConfigError.
inline Dataset build_dataset(const DatasetSpec& spec) {
    try {
        return detail::build_dataset_unchecked(spec);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const FormatError& e) {
        throw ConfigError(e.what());
    } catch (const std::ios_base::failure& e) {
        throw ConfigError(e.what());
    }
}

struct ExperimentConfig {
    Algorithm algorithm{Algorithm::majority};
    DatasetSpec dataset;
    std::string p_spec{"uniform"};  // uniform | path to a line of reals
    std::string q_spec{"uniform"};
    double epsilon{0.1};
    double delta{0.1};
    SelectionStrategy strategy;
    std::size_t trials{10};
    std::uint64_t seed{0};
    std::size_t threads{1};
    std::size_t max_rounds{0};

    static inline const std::set<std::string> own_keys{"algorithm", "p", "q", "epsilon", "delta", "strategy",
                                                       "trials", "seed", "threads", "max_rounds",
                                                       "target_draw"};

    static ExperimentConfig from_key_values(const KeyValues& kv) {
        using namespace detail;
        std::set<std::string> known = own_keys;
        known.insert(DatasetSpec::keys.begin(), DatasetSpec::keys.end());
        reject_unknown_keys(kv, known);
        if (!kv.contains("algorithm")) throw ConfigError("config is missing 'algorithm'");
        ExperimentConfig c;
        c.algorithm = parse_algorithm(kv.at("algorithm"));
        c.dataset = DatasetSpec::from_key_values(kv);
        c.p_spec = string_key(kv, "p", c.p_spec);
        c.q_spec = string_key(kv, "q", c.q_spec);
        if (c.algorithm == Algorithm::arbitrary && (!kv.contains("epsilon") || !kv.contains("delta")))
            throw ConfigError("arbitrary learner needs epsilon and delta");
        c.epsilon = parse_real_key(kv, "epsilon", c.epsilon);
        c.delta = parse_real_key(kv, "delta", c.delta);
        if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
        if (!(c.delta > 0.0 && c.delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
        try {
            c.strategy = SelectionStrategy::parse(string_key(kv, "strategy", "first"));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        c.trials = parse_unsigned_key(kv, "trials", c.trials);
        if (c.trials == 0) throw ConfigError("trials must be >= 1");
        c.seed = parse_unsigned_key(kv, "seed", c.seed);
        c.threads = std::max<std::size_t>(1, parse_unsigned_key(kv, "threads", c.threads));
        c.max_rounds = parse_unsigned_key(kv, "max_rounds", c.max_rounds);
        if (!kv.contains("dataset_seed")) c.dataset.seed = c.seed;
        // Informational only, but a resolved config must agree with itself.
        if (kv.contains("target_draw") && kv.at("target_draw") != c.target_draw())
            throw ConfigError("target_draw for " + to_string(c.algorithm) + " is '" + c.target_draw() + "'");
        return c;
    }

    // Majority and arbitrary runs draw targets uniformly over rows; randomized runs draw from Q.
    std::string target_draw() const { return algorithm == Algorithm::randomized ? "prior" : "uniform"; }

    static ExperimentConfig load(const std::string& path) {
        try {
            return from_key_values(read_key_values(path));
        } catch (const std::ios_base::failure& e) {
            throw ConfigError(e.what());
        } catch (const FormatError& e) {
            throw ConfigError(e.what());
        }
    }

    // Fully resolved config; threads is omitted since it never changes results.
    KeyValues to_key_values() const {
        KeyValues kv;
        kv["algorithm"] = to_string(algorithm);
        dataset.to_key_values(kv);
        kv["p"] = p_spec;
        if (algorithm == Algorithm::randomized) kv["q"] = q_spec;
        kv["epsilon"] = format_real(epsilon);
        kv["delta"] = format_real(delta);
        if (algorithm == Algorithm::arbitrary) kv["strategy"] = strategy.name();
        kv["trials"] = std::to_string(trials);
        kv["seed"] = std::to_string(seed);
        kv["max_rounds"] = std::to_string(max_rounds);
        kv["target_draw"] = target_draw();
        return kv;
    }
};

struct Instance {
    Dataset dataset;
    ExampleDistribution P;
    TargetPrior Q;

    const HypothesisMatrix& H() const { return dataset.matrix; }
};

inline Instance build_instance(const ExperimentConfig& cfg) {
    Dataset ds = build_dataset(cfg.dataset);
    const std::size_t n = ds.matrix.rows();
    const std::size_t m = ds.matrix.cols();
    auto load = [](const std::string& spec, std::size_t expected, const char* what) {
        std::vector<double> v = read_reals(spec);
        if (v.size() != expected)
            throw ConfigError(std::string(what) + " has " + std::to_string(v.size()) + " entries, expected " +
                              std::to_string(expected));
        return v;
    };
    try {
        ExampleDistribution P = cfg.p_spec == "uniform" ? ExampleDistribution::uniform(m)
                                                        : ExampleDistribution(load(cfg.p_spec, m, "P"));
        TargetPrior Q = cfg.q_spec == "uniform" ? TargetPrior::uniform(n) : TargetPrior(load(cfg.q_spec, n, "Q"));
        return {std::move(ds), std::move(P), std::move(Q)};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    } catch (const FormatError& e) {
        throw ConfigError(e.what());
    } catch (const std::ios_base::failure& e) {
        throw ConfigError(e.what());
    }
}

struct TrialResult {
    std::size_t trial{0};
    std::uint64_t seed{0};
    row_t target{0};
    std::size_t counter_examples{0};
    std::size_t queries{0};
    row_t output{0};
    double error_mass{0.0};
    Termination termination{Termination::accepted};
    std::size_t numerical_warnings{0};
    double wall_seconds{0.0};
};

struct Summary {
    double mean{0.0};
    double stddev{0.0};  // sample standard deviation; 0 for a single trial
    double max{0.0};
};

inline Summary summarize(const std::vector<double>& xs) {
    Summary s;
    if (xs.empty()) return s;
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
        s.max = std::max(s.max, x);
    }
    s.mean = sum / static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

struct RunResult {
    ExperimentConfig config;
    std::size_t hypotheses{0};
    std::size_t columns{0};
    std::vector<TrialResult> trials;
    Summary counter_examples;
    Bounds bounds{};
    double wall_seconds{0.0};

    std::vector<double> counter_example_counts() const {
        std::vector<double> v;
        v.reserve(trials.size());
        for (const auto& t : trials) v.push_back(static_cast<double>(t.counter_examples));
        return v;
    }
};

inline TrialResult run_trial(const Instance& inst, const ExperimentConfig& cfg, std::size_t trial) {
    const auto start = std::chrono::steady_clock::now();
    TrialResult r;
    r.trial = trial;
    r.seed = cfg.seed + trial;
    RngStream rng(r.seed);
    const HypothesisMatrix& H = inst.H();
    Transcript t;
    switch (cfg.algorithm) {
    case Algorithm::majority: {
        const row_t target = rng.uniform_index(H.rows());
        t = run_majority(H, inst.P, TeacherConfig::exact(target), rng, cfg.max_rounds);
        break;
    }
    case Algorithm::randomized:
        t = run_randomized(H, inst.P, inst.Q, rng, cfg.max_rounds);
        break;
    case Algorithm::arbitrary: {
        const row_t target = rng.uniform_index(H.rows());
        t = run_arbitrary(H, inst.P, TeacherConfig::approximate(target, cfg.epsilon, cfg.delta), cfg.strategy,
                          rng, cfg.max_rounds);
        break;
    }
    }
    r.target = t.target;
    r.counter_examples = t.counter_examples();
    r.queries = t.rounds.size();
    r.output = t.output;
    r.error_mass = disagreement_mass(H, inst.P, t.output, t.target);
    r.termination = t.termination;
    r.numerical_warnings = t.numerical_warnings;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// Trials are independent; with threads > 1 they run concurrently and are
// stored by trial index, so output does not depend on scheduling.
inline RunResult run_experiment(const ExperimentConfig& cfg, const Instance& inst) {
    const auto start = std::chrono::steady_clock::now();
    RunResult res;
    res.config = cfg;
    res.hypotheses = inst.H().rows();
    res.columns = inst.H().cols();
    res.trials.resize(cfg.trials);

    const std::size_t workers = std::min(cfg.threads, cfg.trials);
    if (workers <= 1) {
        for (std::size_t t = 0; t < cfg.trials; ++t) res.trials[t] = run_trial(inst, cfg, t);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t t; (t = next.fetch_add(1)) < cfg.trials;) {
                    try {
                        res.trials[t] = run_trial(inst, cfg, t);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }
    res.counter_examples = summarize(res.counter_example_counts());
    res.bounds = bounds(res.hypotheses, cfg.epsilon, cfg.delta);
    res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

inline RunResult run_experiment(const ExperimentConfig& cfg) {
    return run_experiment(cfg, build_instance(cfg));
}

inline std::string to_string(Termination t) {
    return t == Termination::accepted ? "accepted" : "no_bad_hypothesis";
}

// Per-trial rows. Wall time is left out so repeated runs are byte-identical.
inline void write_trials_csv(std::ostream& out, const RunResult& res) {
    out << "trial,seed,target,counter_examples,queries,output,error_mass,termination,numerical_warnings\n";
    for (const auto& t : res.trials)
        out << t.trial << ',' << t.seed << ',' << t.target << ',' << t.counter_examples << ',' << t.queries << ','
            << t.output << ',' << format_real(t.error_mass) << ',' << to_string(t.termination) << ','
            << t.numerical_warnings << '\n';
}

inline nlohmann::ordered_json bounds_json(const Bounds& b) {
    return {{"majority_log43", b.majority},   {"majority_hp_log43", b.majority_hp},
            {"majority_log2", b.majority_log2}, {"randomized_log2", b.randomized},
            {"arbitrary_log2", b.arbitrary},  {"arbitrary_ln", b.arbitrary_ln},
            {"pac_log2", b.pac},              {"pac_ln", b.pac_ln}};
}

// Summary plus every trial row; includes wall times.
inline nlohmann::ordered_json run_json(const RunResult& res) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cfg;
    for (const auto& [k, v] : res.config.to_key_values()) cfg[k] = v;
    j["config"] = cfg;
    j["hypotheses"] = res.hypotheses;
    j["columns"] = res.columns;
    j["counter_examples"] = {{"mean", res.counter_examples.mean},
                             {"std", res.counter_examples.stddev},
                             {"max", res.counter_examples.max}};
    j["bounds"] = bounds_json(res.bounds);
    j["wall_seconds"] = res.wall_seconds;
    auto& rows = j["trials"] = nlohmann::ordered_json::array();
    for (const auto& t : res.trials)
        rows.push_back({{"trial", t.trial},
                        {"seed", t.seed},
                        {"target", t.target},
                        {"counter_examples", t.counter_examples},
                        {"queries", t.queries},
                        {"output", t.output},
                        {"error_mass", t.error_mass},
                        {"termination", to_string(t.termination)},
                        {"numerical_warnings", t.numerical_warnings},
                        {"wall_seconds", t.wall_seconds}});
    return j;
}

// Resolved config and aggregates, written next to a CSV.
inline KeyValues run_metadata(const RunResult& res) {
    KeyValues kv = res.config.to_key_values();
    kv["hypotheses"] = std::to_string(res.hypotheses);
    kv["columns"] = std::to_string(res.columns);
    kv["mean_counter_examples"] = format_real(res.counter_examples.mean);
    kv["std_counter_examples"] = format_real(res.counter_examples.stddev);
    kv["max_counter_examples"] = format_real(res.counter_examples.max);
    const auto b = bounds_json(res.bounds);
    for (const auto& [k, v] : b.items()) kv["bound_" + k] = format_real(v.get<double>());
    return kv;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

// Learner label: "majority", "randomized" or "arbitrary:<strategy>".
struct LearnerSpec {
    Algorithm algorithm;
    SelectionStrategy strategy;

    static LearnerSpec parse(const std::string& s) {
        if (s.starts_with("arbitrary:")) {
            try {
                return {Algorithm::arbitrary, SelectionStrategy::parse(s.substr(10))};
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        return {parse_algorithm(s), SelectionStrategy::first()};
    }

    std::string label() const {
        return algorithm == Algorithm::arbitrary ? "arbitrary:" + strategy.name() : to_string(algorithm);
    }
};

struct SweepCommon {
    DatasetSpec dataset;
    std::size_t trials{10};
    std::uint64_t seed{0};
    std::size_t threads{1};
    double delta{0.1};

    static inline const std::set<std::string> keys{"trials", "seed", "threads", "delta"};

    void load(const KeyValues& kv) {
        using namespace detail;
        dataset = DatasetSpec::from_key_values(kv);
        trials = parse_unsigned_key(kv, "trials", trials);
        if (trials == 0) throw ConfigError("trials must be >= 1");
        seed = parse_unsigned_key(kv, "seed", seed);
        threads = std::max<std::size_t>(1, parse_unsigned_key(kv, "threads", threads));
        delta = parse_real_key(kv, "delta", delta);
        if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
        if (!kv.contains("dataset_seed")) dataset.seed = seed;
    }

    ExperimentConfig experiment(std::size_t hypotheses, const LearnerSpec& learner, double epsilon) const {
        ExperimentConfig c;
        c.algorithm = learner.algorithm;
        c.strategy = learner.strategy;
        c.dataset = dataset;
        c.dataset.rows = hypotheses;
        c.epsilon = epsilon;
        c.delta = delta;
        c.trials = trials;
        c.seed = seed;
        c.threads = threads;
        return c;
    }
};

struct Figure1Config {
    std::vector<std::size_t> grid;
    std::vector<LearnerSpec> learners{LearnerSpec::parse("majority"), LearnerSpec::parse("arbitrary:first"),
                                      LearnerSpec::parse("arbitrary:middle"), LearnerSpec::parse("arbitrary:last")};
    double epsilon{0.01};
    SweepCommon common;

    static Figure1Config from_key_values(const KeyValues& kv) {
        std::set<std::string> known{"grid", "learners", "epsilon"};
        known.insert(SweepCommon::keys.begin(), SweepCommon::keys.end());
        known.insert(DatasetSpec::keys.begin(), DatasetSpec::keys.end());
        detail::reject_unknown_keys(kv, known);
        Figure1Config c;
        c.grid = detail::parse_list<std::size_t>("grid", detail::string_key(kv, "grid", ""));
        if (kv.contains("learners")) {
            c.learners.clear();
            for (auto l : detail::split_commas(kv.at("learners"))) c.learners.push_back(LearnerSpec::parse(std::string(l)));
        }
        c.epsilon = detail::parse_real_key(kv, "epsilon", c.epsilon);
        if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ConfigError("epsilon must lie in (0, 1)");
        c.common.load(kv);
        return c;
    }
};

struct Figure1Row {
    std::string learner;
    std::size_t hypotheses;
    std::size_t trials;
    Summary rounds;
    double bound_majority_log43;
    double bound_majority_log2;
    double bound_arbitrary;
};

inline std::vector<Figure1Row> sweep_figure1(const Figure1Config& cfg) {
    if (cfg.grid.empty()) throw ConfigError("rounds-vs-|H| sweep needs a non-empty |H| grid");
    if (cfg.learners.empty()) throw ConfigError("rounds-vs-|H| sweep needs at least one learner");
    // One dataset per grid point, shared by every learner; rows grouped by learner.
    std::vector<std::vector<Figure1Row>> by_learner(cfg.learners.size());
    for (std::size_t h : cfg.grid) {
        std::optional<Instance> inst;
        for (std::size_t l = 0; l < cfg.learners.size(); ++l) {
            const ExperimentConfig ec = cfg.common.experiment(h, cfg.learners[l], cfg.epsilon);
            if (!inst) inst.emplace(build_instance(ec));
            const RunResult res = run_experiment(ec, *inst);
            by_learner[l].push_back({cfg.learners[l].label(), res.hypotheses, res.trials.size(),
                                     res.counter_examples, res.bounds.majority, res.bounds.majority_log2,
                                     res.bounds.arbitrary});
        }
    }
    std::vector<Figure1Row> rows;
    for (auto& group : by_learner) rows.insert(rows.end(), group.begin(), group.end());
    return rows;
}

inline void write_figure1_csv(std::ostream& out, const std::vector<Figure1Row>& rows) {
    out << "algorithm,hypotheses,trials,mean_rounds,std_rounds,max_rounds,"
           "bound_majority_log43,bound_majority_log2,bound_arbitrary\n";
    for (const auto& r : rows)
        out << r.learner << ',' << r.hypotheses << ',' << r.trials << ',' << format_real(r.rounds.mean) << ','
            << format_real(r.rounds.stddev) << ',' << format_real(r.rounds.max) << ','
            << format_real(r.bound_majority_log43) << ',' << format_real(r.bound_majority_log2) << ','
            << format_real(r.bound_arbitrary) << '\n';
}

struct Figure2Config {
    std::vector<double> epsilons;
    std::vector<std::size_t> hypotheses;
    std::vector<SelectionStrategy> strategies{SelectionStrategy::first(), SelectionStrategy::middle(),
                                              SelectionStrategy::last()};
    SweepCommon common;

    static Figure2Config from_key_values(const KeyValues& kv) {
        std::set<std::string> known{"epsilons", "hsizes", "strategies"};
        known.insert(SweepCommon::keys.begin(), SweepCommon::keys.end());
        known.insert(DatasetSpec::keys.begin(), DatasetSpec::keys.end());
        detail::reject_unknown_keys(kv, known);
        Figure2Config c;
        c.epsilons = detail::parse_list<double>("epsilons", detail::string_key(kv, "epsilons", ""));
        c.hypotheses = detail::parse_list<std::size_t>("hsizes", detail::string_key(kv, "hsizes", ""));
        if (kv.contains("strategies")) {
            c.strategies.clear();
            try {
                for (auto s : detail::split_commas(kv.at("strategies"))) c.strategies.push_back(SelectionStrategy::parse(s));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
        c.common.load(kv);
        return c;
    }
};

struct Figure2Row {
    std::size_t hypotheses;
    double epsilon;
    double delta;
    std::size_t runs;  // trials x strategies
    Summary rounds;
    double pac_bound;        // (1/epsilon) log2(|H|/delta)
    double arbitrary_bound;  // (4 log2(|H|/delta) + 2)/epsilon + 1
};

// Arbitrary learner rounds pooled over the configured strategies, per (|H|, epsilon).
inline std::vector<Figure2Row> sweep_figure2(const Figure2Config& cfg) {
    if (cfg.epsilons.empty()) throw ConfigError("rounds-vs-epsilon sweep needs a non-empty epsilon grid");
    if (cfg.hypotheses.empty()) throw ConfigError("rounds-vs-epsilon sweep needs at least one |H|");
    if (cfg.strategies.empty()) throw ConfigError("rounds-vs-epsilon sweep needs at least one strategy");
    for (double e : cfg.epsilons)
        if (!(e > 0.0 && e < 1.0)) throw ConfigError("every epsilon must lie in (0, 1)");
    std::vector<Figure2Row> rows;
    for (std::size_t h : cfg.hypotheses) {
        ExperimentConfig base = cfg.common.experiment(h, {Algorithm::arbitrary, SelectionStrategy::first()}, 0.5);
        const Instance inst = build_instance(base);
        for (double eps : cfg.epsilons) {
            std::vector<double> pooled;
            for (const auto& s : cfg.strategies) {
                ExperimentConfig ec = base;
                ec.epsilon = eps;
                ec.strategy = s;
                const auto counts = run_experiment(ec, inst).counter_example_counts();
                pooled.insert(pooled.end(), counts.begin(), counts.end());
            }
            const Bounds b = bounds(inst.H().rows(), eps, cfg.common.delta);
            rows.push_back({inst.H().rows(), eps, cfg.common.delta, pooled.size(), summarize(pooled), b.pac, b.arbitrary});
        }
    }
    return rows;
}

inline void write_figure2_csv(std::ostream& out, const std::vector<Figure2Row>& rows) {
    out << "hypotheses,epsilon,delta,runs,mean_rounds_arbitrary,std_rounds_arbitrary,max_rounds_arbitrary,"
           "pac_bound,arbitrary_bound\n";
    for (const auto& r : rows)
        out << r.hypotheses << ',' << format_real(r.epsilon) << ',' << format_real(r.delta) << ',' << r.runs << ','
            << format_real(r.rounds.mean) << ',' << format_real(r.rounds.stddev) << ','
            << format_real(r.rounds.max) << ',' << format_real(r.pac_bound) << ','
            << format_real(r.arbitrary_bound) << '\n';
}

} // namespace lrc
