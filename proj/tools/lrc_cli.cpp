// lrc: command-line front end for the learning-from-random-counter-examples harness.
//
//   lrc generate --dataset clustered --rows 1000 --cols 500 --out h.csv
//   lrc run      --config run.cfg [--seed S] [--out path] [--format csv|json]
//   lrc fig1     --config fig1.cfg [--grid 64,128,256]
//   lrc fig2     --config fig2.cfg [--epsilons 0.01,0.1] [--hsizes 1000]
//   lrc bounds   --hsize 1000 [--epsilon 0.1] [--delta 0.1]
//
// Exit status: 0 success, 1 usage or config error, 2 runtime error.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lrc/lrc.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> threads;
    std::string out;
    std::string format{"csv"};
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config, "key = value config file");
    cmd->add_option("--seed", c.seed, "base seed (trial t uses seed + t)");
    cmd->add_option("--trials", c.trials, "number of trials");
    cmd->add_option("--threads", c.threads, "worker threads for trials");
    cmd->add_option("--out", c.out, "output path (default: standard output)");
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
}

lrc::KeyValues load_config(const Common& c) {
    lrc::KeyValues kv;
    if (!c.config.empty()) {
        try {
            kv = lrc::read_key_values(c.config);
        } catch (const std::exception& e) {
            throw lrc::ConfigError(e.what());
        }
    }
    if (c.seed) kv["seed"] = std::to_string(*c.seed);
    if (c.trials) kv["trials"] = std::to_string(*c.trials);
    if (c.threads) kv["threads"] = std::to_string(*c.threads);
    return kv;
}

// Writes to --out when given, else standard output.
template <class Fn>
void emit(const std::string& out_path, Fn&& write) {
    if (out_path.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + out_path + "' for writing");
    write(out);
}

nlohmann::ordered_json summary_json(const lrc::Summary& s) {
    return {{"mean", s.mean}, {"std", s.stddev}, {"max", s.max}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interactive learning from random counter-examples: learners, oracles and benchmarks"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a generated dataset (matrix CSV + .meta sidecar)");
    std::string gen_config, gen_out;
    std::string g_kind;
    std::optional<std::size_t> g_rows, g_cols, g_clusters, g_flips, g_alphabet, g_tight;
    std::optional<std::uint64_t> g_seed;
    gen->add_option("--config", gen_config, "key = value dataset config");
    gen->add_option("--dataset", g_kind, "clustered | random | identity | tight");
    gen->add_option("--rows", g_rows, "number of hypotheses");
    gen->add_option("--cols", g_cols, "number of examples");
    gen->add_option("--clusters", g_clusters, "clusters (clustered)");
    gen->add_option("--flips", g_flips, "max flips per member (clustered)");
    gen->add_option("--alphabet", g_alphabet, "value alphabet size");
    gen->add_option("--tight-n", g_tight, "n for the tight-bound instance");
    gen->add_option("--seed", g_seed, "generator seed");
    gen->add_option("--out", gen_out, "matrix output path")->required();

    // run
    auto* run = app.add_subcommand("run", "run one experiment");
    Common run_opts;
    add_common(run, run_opts);

    // fig1
    auto* fig1 = app.add_subcommand("fig1", "rounds vs |H| sweep");
    Common fig1_opts;
    std::string fig1_grid;
    add_common(fig1, fig1_opts);
    fig1->add_option("--grid", fig1_grid, "comma-separated |H| values");

    // fig2
    auto* fig2 = app.add_subcommand("fig2", "arbitrary-learner rounds vs epsilon sweep");
    Common fig2_opts;
    std::string fig2_eps, fig2_h;
    add_common(fig2, fig2_opts);
    fig2->add_option("--epsilons", fig2_eps, "comma-separated epsilon values");
    fig2->add_option("--hsizes", fig2_h, "comma-separated |H| values");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "print the closed-form round bounds");
    std::size_t b_h = 0;
    double b_eps = 0.1, b_delta = 0.1;
    std::string b_format = "csv";
    bnd->add_option("--hsize", b_h, "|H|")->required();
    bnd->add_option("--epsilon", b_eps, "epsilon");
    bnd->add_option("--delta", b_delta, "delta");
    bnd->add_option("--format", b_format, "output format")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*gen) {
            lrc::KeyValues kv;
            if (!gen_config.empty()) {
                try {
                    kv = lrc::read_key_values(gen_config);
                } catch (const std::exception& e) {
                    throw lrc::ConfigError(e.what());
                }
            }
            if (!g_kind.empty()) kv["dataset"] = g_kind;
            if (g_rows) kv["rows"] = std::to_string(*g_rows);
            if (g_cols) kv["cols"] = std::to_string(*g_cols);
            if (g_clusters) kv["clusters"] = std::to_string(*g_clusters);
            if (g_flips) kv["flips"] = std::to_string(*g_flips);
            if (g_alphabet) kv["alphabet"] = std::to_string(*g_alphabet);
            if (g_tight) kv["tight_n"] = std::to_string(*g_tight);
            if (g_seed) kv["dataset_seed"] = std::to_string(*g_seed);
            for (const auto& [k, v] : kv)
                if (!lrc::DatasetSpec::keys.contains(k)) throw lrc::ConfigError("unknown dataset key '" + k + "'");
            const auto spec = lrc::DatasetSpec::from_key_values(kv);
            if (spec.kind == "file") throw lrc::ConfigError("generate cannot use dataset = file");
            const auto ds = lrc::build_dataset(spec);
            lrc::write_matrix(gen_out, ds.matrix);
            lrc::write_key_values(gen_out + ".meta", ds.metadata);
            return 0;
        }

        if (*run) {
            if (run_opts.config.empty()) throw lrc::ConfigError("run needs --config");
            const auto cfg = lrc::ExperimentConfig::from_key_values(load_config(run_opts));
            const auto res = lrc::run_experiment(cfg);
            if (run_opts.format == "json") {
                emit(run_opts.out, [&](std::ostream& os) { os << lrc::run_json(res).dump(2) << '\n'; });
            } else {
                emit(run_opts.out, [&](std::ostream& os) { lrc::write_trials_csv(os, res); });
                if (!run_opts.out.empty()) lrc::write_key_values(run_opts.out + ".meta", lrc::run_metadata(res));
            }
            return 0;
        }

        if (*fig1) {
            auto kv = load_config(fig1_opts);
            if (!fig1_grid.empty()) kv["grid"] = fig1_grid;
            const auto cfg = lrc::Figure1Config::from_key_values(kv);
            const auto rows = lrc::sweep_figure1(cfg);
            emit(fig1_opts.out, [&](std::ostream& os) {
                if (fig1_opts.format == "csv") return lrc::write_figure1_csv(os, rows);
                auto j = nlohmann::ordered_json::array();
                for (const auto& r : rows)
                    j.push_back({{"algorithm", r.learner}, {"hypotheses", r.hypotheses}, {"trials", r.trials},
                                 {"rounds", summary_json(r.rounds)},
                                 {"bound_majority_log43", r.bound_majority_log43},
                                 {"bound_majority_log2", r.bound_majority_log2},
                                 {"bound_arbitrary", r.bound_arbitrary}});
                os << j.dump(2) << '\n';
            });
            return 0;
        }

        if (*fig2) {
            auto kv = load_config(fig2_opts);
            if (!fig2_eps.empty()) kv["epsilons"] = fig2_eps;
            if (!fig2_h.empty()) kv["hsizes"] = fig2_h;
            const auto cfg = lrc::Figure2Config::from_key_values(kv);
            const auto rows = lrc::sweep_figure2(cfg);
            emit(fig2_opts.out, [&](std::ostream& os) {
                if (fig2_opts.format == "csv") return lrc::write_figure2_csv(os, rows);
                auto j = nlohmann::ordered_json::array();
                for (const auto& r : rows)
                    j.push_back({{"hypotheses", r.hypotheses}, {"epsilon", r.epsilon}, {"delta", r.delta},
                                 {"runs", r.runs}, {"rounds", summary_json(r.rounds)},
                                 {"pac_bound", r.pac_bound}, {"arbitrary_bound", r.arbitrary_bound}});
                os << j.dump(2) << '\n';
            });
            return 0;
        }

        if (*bnd) {
            lrc::Bounds b;
            try {
                b = lrc::bounds(b_h, b_eps, b_delta);
            } catch (const std::invalid_argument& e) {
                throw lrc::ConfigError(e.what());
            }
            const auto j = lrc::bounds_json(b);
            if (b_format == "json") {
                std::cout << j.dump(2) << '\n';
            } else {
                std::cout << "bound,value\n";
                for (const auto& [k, v] : j.items()) std::cout << k << ',' << lrc::format_real(v.get<double>()) << '\n';
            }
            return 0;
        }
    } catch (const lrc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
