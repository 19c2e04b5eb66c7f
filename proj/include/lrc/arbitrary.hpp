// arbitrary.hpp
//
// PAC-LRC learner that queries any consistent hypothesis. "Any" is pinned down
// by a SelectionStrategy so runs are reproducible.
#pragma once
#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "concept.hpp"
#include "teacher.hpp"

namespace lrc {

struct SelectionStrategy {
    enum class Kind { first, middle, last, random, fixed_rank };
    Kind kind{Kind::first};
    std::size_t rank{0};  // fixed_rank only

    static SelectionStrategy first() { return {Kind::first, 0}; }
    static SelectionStrategy middle() { return {Kind::middle, 0}; }
    static SelectionStrategy last() { return {Kind::last, 0}; }
    static SelectionStrategy random() { return {Kind::random, 0}; }
    static SelectionStrategy fixed_rank(std::size_t k) { return {Kind::fixed_rank, k}; }

    // first | middle | last | random | rank:<k>
    static SelectionStrategy parse(std::string_view s) {
        if (s == "first") return first();
        if (s == "middle") return middle();
        if (s == "last") return last();
        if (s == "random") return random();
        if (s.starts_with("rank:")) {
            std::size_t k = 0;
            const auto digits = s.substr(5);
            auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (ec == std::errc{} && p == digits.data() + digits.size() && !digits.empty())
                return fixed_rank(k);
        }
        throw std::invalid_argument("unknown selection strategy '" + std::string(s) + "'");
    }

    std::string name() const {
        switch (kind) {
        case Kind::first: return "first";
        case Kind::middle: return "middle";
        case Kind::last: return "last";
        case Kind::random: return "random";
        case Kind::fixed_rank: return "rank:" + std::to_string(rank);
        }
        return "?";
    }
};

inline row_t select(const ConsistentSet& S, const SelectionStrategy& strategy, RngStream& rng) {
    if (S.empty()) throw std::invalid_argument("selection from an empty consistent set");
    switch (strategy.kind) {
    case SelectionStrategy::Kind::first: return S[0];
    case SelectionStrategy::Kind::middle: return S[S.size() / 2];
    case SelectionStrategy::Kind::last: return S[S.size() - 1];
    case SelectionStrategy::Kind::random: return S[rng.uniform_index(S.size())];
    case SelectionStrategy::Kind::fixed_rank: return S[std::min(strategy.rank, S.size() - 1)];
    }
    return S[0];
}

// Runs until the teacher accepts or no consistent hypothesis is epsilon-bad.
// In the second case the learner's next pick is necessarily accepted, so it
// becomes the output without spending a query.
inline Transcript run_arbitrary(const HypothesisMatrix& H, const ExampleDistribution& P,
                                const TeacherConfig& cfg, const SelectionStrategy& strategy,
                                RngStream& rng, std::size_t max_rounds = 0) {
    if (!cfg.pac) throw std::invalid_argument("arbitrary learner requires a PAC teacher");
    H.check_row(cfg.target);
    if (P.size() != H.cols()) throw std::invalid_argument("example distribution does not match column count");
    if (max_rounds == 0) max_rounds = H.rows();

    // The harness knows the target, so badness is precomputed once per run.
    std::vector<char> bad(H.rows());
    for (row_t r = 0; r < H.rows(); ++r)
        bad[r] = disagreement_mass(H, P, r, cfg.target) >= cfg.pac->epsilon;

    Transcript t;
    t.target = cfg.target;
    ConsistentSet S = ConsistentSet::all(H.rows());
    for (;;) {
        const bool any_bad = std::any_of(S.begin(), S.end(), [&](row_t r) { return bad[r] != 0; });
        if (!any_bad) {
            t.output = select(S, strategy, rng);
            t.termination = Termination::no_bad_hypothesis;
            return t;
        }
        if (t.rounds.size() >= max_rounds) throw MaxRoundsExceeded(max_rounds);
        const row_t query = select(S, strategy, rng);
        const TeacherResponse resp = respond(H, P, query, cfg, rng);
        RoundRecord rec{query, resp.counter_example, S.size(), S.size()};
        if (resp.accepted()) {
            t.rounds.push_back(rec);
            t.output = query;
            t.termination = Termination::accepted;
            return t;
        }
        S = eliminate(S, H, *resp.counter_example);
        rec.consistent_after = S.size();
        t.rounds.push_back(rec);
    }
}

} // namespace lrc
