// instrumentation.hpp
//
// Analysis-side machinery. Everything here may look at the target, which the
// learners never do: per-column weight bookkeeping for PAC runs, exact
// expected-elimination oracles, a direct Bayes posterior, exact expected
// round counts for tiny instances, and the closed-form round bounds.
#pragma once
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "concept.hpp"
#include "majority.hpp"
#include "randomized.hpp"
#include "teacher.hpp"

namespace lrc {

// ---------------------------------------------------------------------------
// Weight bookkeeping
// ---------------------------------------------------------------------------

// W(x): accumulated conditional counter-example mass per column. Each
// recorded round adds the whole distribution P(. | h_i != h*), not the
// realized draw, so the bookkeeping is deterministic given the queries.
class WeightTracker {
public:
    explicit WeightTracker(std::size_t columns) : weights_(columns, 0.0) {}

    void record_round(const HypothesisMatrix& H, const ExampleDistribution& P,
                      row_t learner_h, row_t target) {
        if (learner_h == target)
            throw std::invalid_argument("cannot record a round in which the learner queried the target");
        const auto diff = difference_set(H, learner_h, target);
        for (const auto& [c, p] : conditional_distribution(P, diff)) weights_[c] += p;
        ++rounds_;
    }

    const std::vector<double>& weights() const { return weights_; }
    double operator()(col_t c) const { return weights_[c]; }
    std::size_t rounds() const { return rounds_; }

    double total() const {
        double s = 0.0;
        for (double w : weights_) s += w;
        return s;
    }

private:
    std::vector<double> weights_;
    std::size_t rounds_{0};
};

// W(D(h, target)).
inline double hypothesis_weight(const WeightTracker& W, const HypothesisMatrix& H, row_t h, row_t target) {
    double s = 0.0;
    for (col_t c : difference_set(H, h, target)) s += W(c);
    return s;
}

// theta*(x) = ln(|H| / delta) * 2 P(x) / epsilon.
struct ThresholdTable {
    std::vector<double> theta_star;
    double epsilon;
    double delta;
    std::size_t hypotheses;

    static ThresholdTable build(const ExampleDistribution& P, std::size_t hypotheses,
                                double epsilon, double delta) {
        if (!(epsilon > 0.0) || !(delta > 0.0 && delta < 1.0) || hypotheses == 0)
            throw std::invalid_argument("threshold table needs epsilon > 0, 0 < delta < 1, |H| >= 1");
        ThresholdTable t{std::vector<double>(P.size()), epsilon, delta, hypotheses};
        const double log_term = std::log(static_cast<double>(hypotheses) / delta);
        for (col_t c = 0; c < P.size(); ++c) t.theta_star[c] = log_term * 2.0 * P(c) / epsilon;
        return t;
    }
};

struct ColumnPartition {
    std::vector<col_t> light;
    std::vector<col_t> heavy;
};

// Light iff W(x) <= theta*(x).
inline ColumnPartition light_heavy(const WeightTracker& W, const ThresholdTable& thresholds) {
    ColumnPartition part;
    for (col_t c = 0; c < thresholds.theta_star.size(); ++c)
        (W(c) <= thresholds.theta_star[c] ? part.light : part.heavy).push_back(c);
    return part;
}

// E_i(h) = P[h(x) != h*(x) | h_i(x) != h*(x)], the chance round i eliminates h.
inline double elimination_probability(const HypothesisMatrix& H, const ExampleDistribution& P,
                                      row_t h, row_t learner_h, row_t target) {
    double joint = 0.0;
    double cond = 0.0;
    for (col_t c = 0; c < H.cols(); ++c) {
        if (H(learner_h, c) == H(target, c)) continue;
        cond += P(c);
        if (H(h, c) != H(target, c)) joint += P(c);
    }
    if (cond == 0.0) throw std::invalid_argument("learner hypothesis equals the target");
    return joint / cond;
}

// Replay of a PAC-LRC transcript against the weight bookkeeping.
struct PacRoundAudit {
    row_t query;
    bool epsilon_bad;
    double query_weight;      // W_i(h_i) at the start of the round
    double light_weight_gain; // W_{i+1}(L_i) - W_i(L_i)
    double total_weight_gain; // W_{i+1}(X) - W_i(X)
    std::size_t heavy_reverted; // columns heavy before the round, light after
};

inline std::vector<PacRoundAudit> audit_pac_run(const HypothesisMatrix& H, const ExampleDistribution& P,
                                                const Transcript& t, double epsilon, double delta) {
    const ThresholdTable thresholds = ThresholdTable::build(P, H.rows(), epsilon, delta);
    WeightTracker W(H.cols());
    std::vector<PacRoundAudit> out;
    for (const auto& round : t.rounds) {
        if (!round.counter_example) continue;
        const auto before = light_heavy(W, thresholds);
        const std::vector<double> w_before = W.weights();
        PacRoundAudit a{};
        a.query = round.query;
        a.epsilon_bad = disagreement_mass(H, P, round.query, t.target) >= epsilon;
        a.query_weight = hypothesis_weight(W, H, round.query, t.target);
        W.record_round(H, P, round.query, t.target);
        for (col_t c : before.light) a.light_weight_gain += W(c) - w_before[c];
        for (col_t c = 0; c < H.cols(); ++c) a.total_weight_gain += W(c) - w_before[c];
        for (col_t c : before.heavy)
            if (W(c) <= thresholds.theta_star[c]) ++a.heavy_reverted;
        out.push_back(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact per-round elimination oracles
// ---------------------------------------------------------------------------

// V(h, x): fraction of S whose value at x differs from h's.
inline double disagreement_fraction(const HypothesisMatrix& H, const ConsistentSet& S, row_t h, col_t x) {
    std::size_t k = 0;
    for (row_t r : S) k += H(r, x) != H(h, x);
    return static_cast<double>(k) / static_cast<double>(S.size());
}

// E(learner, target): expected fraction of S removed by the counter-example.
inline double expected_elimination_fraction(const HypothesisMatrix& H, const ConsistentSet& S,
                                            const ExampleDistribution& P, row_t learner_h, row_t target) {
    if (learner_h == target) throw std::invalid_argument("expected elimination needs learner != target");
    if (!S.contains(learner_h) || !S.contains(target))
        throw std::invalid_argument("learner and target must both be consistent");
    const auto diff = difference_set(H, learner_h, target);
    double e = 0.0;
    for (const auto& [x, p] : conditional_distribution(P, diff)) e += p * disagreement_fraction(H, S, target, x);
    return e;
}

// sum_j sum_k q_j q_k E(h_j, h_k) over S, with E(h, h) = 1 (querying the target ends the run).
inline double randomized_expected_elimination(const HypothesisMatrix& H, const ConsistentSet& S,
                                              const ExampleDistribution& P, const Posterior& q) {
    double total = 0.0;
    for (row_t j : S) {
        if (q(j) == 0.0) continue;
        for (row_t k : S) {
            if (q(k) == 0.0) continue;
            const double e = j == k ? 1.0 : expected_elimination_fraction(H, S, P, j, k);
            total += q(j) * q(k) * e;
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Enumeration oracles (size-capped)
// ---------------------------------------------------------------------------

inline constexpr std::size_t kOracleMaxRows = 20;
inline constexpr std::size_t kOracleMaxCols = 12;

class OracleCapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

inline void check_oracle_caps(const HypothesisMatrix& H, std::size_t max_rows = kOracleMaxRows,
                              std::size_t max_cols = kOracleMaxCols) {
    if (H.rows() > max_rows || H.cols() > max_cols)
        throw OracleCapExceeded("oracle limited to " + std::to_string(max_rows) + " rows x " +
                                std::to_string(max_cols) + " columns");
}

// Pr(h* = h_j | R) computed directly: Q(h_j) times the product of per-round
// counter-example likelihoods. The learner's selection probabilities do not
// depend on the target and cancel, so they are left out.
inline Posterior bayes_oracle(const HypothesisMatrix& H, const ExampleDistribution& P,
                              const TargetPrior& Q, const std::vector<TranscriptPair>& transcript) {
    check_oracle_caps(H);
    std::vector<double> post(H.rows(), 0.0);
    double total = 0.0;
    for (row_t j = 0; j < H.rows(); ++j) {
        double lik = Q(j);
        for (const auto& pair : transcript) {
            if (lik == 0.0) break;
            const col_t x = pair.counter.column;
            if (H(j, x) != pair.counter.target_value) {
                lik = 0.0;
                break;
            }
            double d = 0.0;
            for (col_t c = 0; c < H.cols(); ++c)
                if (H(j, c) != H(pair.hypothesis, c)) d += P(c);
            lik *= P(x) / d;
        }
        post[j] = lik;
        total += lik;
    }
    if (!(total > 0.0)) throw std::invalid_argument("transcript is inconsistent with every hypothesis");
    for (double& q : post) q /= total;
    return {post};
}

namespace detail {

inline std::uint64_t row_mask(const ConsistentSet& S) {
    std::uint64_t m = 0;
    for (row_t r : S) m |= std::uint64_t{1} << r;
    return m;
}

inline double majority_expected_rounds(const HypothesisMatrix& H, const ExampleDistribution& P, row_t target,
                                       const ConsistentSet& S, std::map<std::uint64_t, double>& memo) {
    const std::uint64_t key = row_mask(S);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const row_t query = majority_query(H, S, P);
    double e = 0.0;
    if (query != target) {
        e = 1.0;
        for (const auto& [x, p] : conditional_distribution(P, difference_set(H, query, target)))
            e += p * majority_expected_rounds(H, P, target, eliminate(S, H, {x, H(target, x)}), memo);
    }
    memo.emplace(key, e);
    return e;
}

} // namespace detail

// Exact expected number of counter-examples the majority learner receives for
// this target, by recursion over the reachable consistent sets.
inline double majority_expected_counter_examples(const HypothesisMatrix& H, const ExampleDistribution& P,
                                                 row_t target) {
    check_oracle_caps(H);
    H.check_row(target);
    std::map<std::uint64_t, double> memo;
    return detail::majority_expected_rounds(H, P, target, ConsistentSet::all(H.rows()), memo);
}

inline constexpr std::size_t kRandomizedOracleMaxRows = 8;

namespace detail {

inline double randomized_expected_rounds(const HypothesisMatrix& H, const ExampleDistribution& P,
                                         const ConsistentSet& S, const Posterior& q) {
    double e = 0.0;
    for (row_t h : S) {
        if (q(h) == 0.0) continue;
        // Given the query h, the next state depends only on the surviving set.
        std::map<std::uint64_t, std::pair<ConsistentSet, double>> outcomes;  // mask -> (S', prob)
        double miss = 0.0;
        for (row_t t : S) {
            if (t == h || q(t) == 0.0) continue;
            miss += q(t);
            for (const auto& [x, p] : conditional_distribution(P, difference_set(H, h, t))) {
                ConsistentSet next = eliminate(S, H, {x, H(t, x)});
                const std::uint64_t key = row_mask(next);
                auto [it, fresh] = outcomes.try_emplace(key, std::move(next), 0.0);
                it->second.second += q(t) * p;
            }
        }
        double sub = miss;  // one counter-example whenever h is wrong
        for (const auto& [key, outcome] : outcomes) {
            const auto& [next, prob] = outcome;
            // The P(x) factor cancels on renormalization, so the posterior
            // depends only on the query and the survivors.
            const Posterior q_next = posterior_update(H, P, q, {h, {0, 0}}, next);
            sub += prob * randomized_expected_rounds(H, P, next, q_next);
        }
        e += q(h) * sub;
    }
    return e;
}

} // namespace detail

// Exact expected counter-examples of the randomized learner with target ~ Q.
// Exponential; limited to kRandomizedOracleMaxRows rows.
inline double randomized_expected_counter_examples(const HypothesisMatrix& H, const ExampleDistribution& P,
                                                   const TargetPrior& Q) {
    check_oracle_caps(H, kRandomizedOracleMaxRows, kOracleMaxCols);
    return detail::randomized_expected_rounds(H, P, ConsistentSet::all(H.rows()), Posterior::from_prior(Q));
}

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

struct Bounds {
    double majority;       // log_{4/3} |H|
    double majority_hp;    // log_{4/3}(|H| / delta)
    double majority_log2;  // log2 |H|, the base-2 curve without constant
    double randomized;     // log2 |H|
    double arbitrary;      // (4 log2(|H| / delta) + 2) / epsilon + 1
    double arbitrary_ln;   // same with natural log
    double pac;            // (1 / epsilon) log2(|H| / delta)
    double pac_ln;         // (1 / epsilon) ln(|H| / delta)
};

inline Bounds bounds(std::size_t hypotheses, double epsilon, double delta) {
    if (hypotheses == 0) throw std::invalid_argument("bounds need |H| >= 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
    const double n = static_cast<double>(hypotheses);
    const double log43 = std::log(4.0 / 3.0);
    Bounds b{};
    b.majority = std::log(n) / log43;
    b.majority_hp = std::log(n / delta) / log43;
    b.majority_log2 = std::log2(n);
    b.randomized = std::log2(n);
    b.arbitrary = (4.0 * std::log2(n / delta) + 2.0) / epsilon + 1.0;
    b.arbitrary_ln = (4.0 * std::log(n / delta) + 2.0) / epsilon + 1.0;
    b.pac = std::log2(n / delta) / epsilon;
    b.pac_ln = std::log(n / delta) / epsilon;
    return b;
}

} // namespace lrc
