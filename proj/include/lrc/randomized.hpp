// randomized.hpp
//
// Randomized learner for a target drawn from a known prior Q: each round the
// query is sampled from the posterior over consistent rows, and the posterior
// is updated with the likelihood of the observed counter-example.
#pragma once
#include <cmath>
#include <stdexcept>
#include <vector>

#include "concept.hpp"
#include "teacher.hpp"

namespace lrc {

// Dense over all rows of H; rows outside the consistent set carry zero.
struct Posterior {
    std::vector<double> probs;

    static Posterior from_prior(const TargetPrior& Q) { return {Q.probs()}; }

    double operator()(row_t r) const { return probs[r]; }
    double total() const {
        double s = 0.0;
        for (double q : probs) s += q;
        return s;
    }
};

struct TranscriptPair {
    row_t hypothesis;
    CounterExample counter;
};

class PosteriorInconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Drift of the incoming posterior's total beyond this counts as a numerical warning.
inline constexpr double kPosteriorDriftWarning = 1e-6;

// q_j <- q_j * P(x) / P(D(h_i, h_j)) over the survivors, renormalized.
// If drift is non-null it receives |sum(prior) - 1| before renormalization.
inline Posterior posterior_update(const HypothesisMatrix& H, const ExampleDistribution& P,
                                  const Posterior& prior, const TranscriptPair& pair,
                                  const ConsistentSet& survivors, double* drift = nullptr) {
    if (survivors.empty()) throw std::invalid_argument("posterior update with no survivors");
    if (drift) *drift = std::abs(prior.total() - 1.0);
    const col_t x = pair.counter.column;
    Posterior next{std::vector<double>(prior.probs.size(), 0.0)};
    double total = 0.0;
    for (row_t j : survivors) {
        if (prior(j) == 0.0) continue;
        const double d = disagreement_mass(H, P, pair.hypothesis, j);
        if (d <= 0.0) throw PosteriorInconsistency("survivor agrees with the eliminated query everywhere");
        next.probs[j] = prior(j) * P(x) / d;
        total += next.probs[j];
    }
    if (!(total > 0.0))
        throw PosteriorInconsistency("every surviving hypothesis has zero posterior weight");
    for (double& q : next.probs) q /= total;
    return next;
}

// Inverse-CDF draw over rows with positive posterior mass, ascending row order.
inline row_t sample_posterior(const Posterior& post, const ConsistentSet& S, RngStream& rng) {
    double total = 0.0;
    for (row_t r : S) total += post(r);
    if (!(total > 0.0)) throw PosteriorInconsistency("posterior has no mass on the consistent set");
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    row_t last = S[0];
    for (row_t r : S) {
        if (post(r) <= 0.0) continue;
        acc += post(r);
        last = r;
        if (u < acc) return r;
    }
    return last;
}

inline row_t sample_target(const TargetPrior& Q, RngStream& rng) {
    return sample_posterior(Posterior::from_prior(Q), ConsistentSet::all(Q.size()), rng);
}

inline Transcript run_randomized(const HypothesisMatrix& H, const ExampleDistribution& P,
                                 const TargetPrior& Q, row_t target, RngStream& rng,
                                 std::size_t max_rounds = 0) {
    H.check_row(target);
    if (P.size() != H.cols()) throw std::invalid_argument("example distribution does not match column count");
    if (Q.size() != H.rows()) throw std::invalid_argument("target prior does not match row count");
    if (Q(target) <= 0.0) throw std::invalid_argument("target has zero prior mass");
    if (max_rounds == 0) max_rounds = H.rows();

    const TeacherConfig cfg = TeacherConfig::exact(target);
    Transcript t;
    t.target = target;
    ConsistentSet S = ConsistentSet::all(H.rows());
    Posterior post = Posterior::from_prior(Q);
    for (;;) {
        if (t.rounds.size() >= max_rounds) throw MaxRoundsExceeded(max_rounds);
        const row_t query = sample_posterior(post, S, rng);
        const TeacherResponse resp = respond(H, P, query, cfg, rng);
        RoundRecord rec{query, resp.counter_example, S.size(), S.size()};
        if (resp.accepted()) {
            t.rounds.push_back(rec);
            t.output = query;
            return t;
        }
        S = eliminate(S, H, *resp.counter_example);
        double drift = 0.0;
        post = posterior_update(H, P, post, {query, *resp.counter_example}, S, &drift);
        if (drift > kPosteriorDriftWarning) ++t.numerical_warnings;
        rec.consistent_after = S.size();
        t.rounds.push_back(rec);
    }
}

// Draws the target from Q first, then runs.
inline Transcript run_randomized(const HypothesisMatrix& H, const ExampleDistribution& P,
                                 const TargetPrior& Q, RngStream& rng, std::size_t max_rounds = 0) {
    const row_t target = sample_target(Q, rng);
    return run_randomized(H, P, Q, target, rng, max_rounds);
}

} // namespace lrc
