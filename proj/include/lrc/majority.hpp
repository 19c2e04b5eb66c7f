// majority.hpp
//
// Majority learner: each round queries the consistent hypothesis that agrees
// with the column-wise majority vote on the most probability mass.
#pragma once
#include <algorithm>
#include <cstdint>
#include <vector>

#include "concept.hpp"
#include "teacher.hpp"

namespace lrc {

using MajorityVector = std::vector<value_t>;

// Matrix cells touched by the per-round scans.
struct WorkCounter {
    std::uint64_t cells{0};
};

namespace detail {

// Dense per-column histograms are used while columns x alphabet stays below this.
inline constexpr std::size_t kDenseHistogramLimit = std::size_t{1} << 26;

// Scores that differ by less than this are treated as tied.
inline constexpr double kScoreTieTolerance = 1e-12;

inline bool lexicographically_less(const HypothesisMatrix& H, row_t a, row_t b) {
    const auto ra = H.row(a);
    const auto rb = H.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
}

} // namespace detail

// Most frequent value per column over the rows in S; ties go to the smaller value.
inline MajorityVector compute_majority(const HypothesisMatrix& H, const ConsistentSet& S,
                                       WorkCounter* work = nullptr) {
    if (S.empty()) throw std::invalid_argument("majority of an empty consistent set");
    const std::size_t m = H.cols();
    MajorityVector maj(m, 0);
    if (work) work->cells += S.size() * m;

    const std::size_t alphabet = static_cast<std::size_t>(H.max_value()) + 1;
    if (alphabet <= detail::kDenseHistogramLimit / m) {
        std::vector<std::uint32_t> counts(m * alphabet, 0);
        for (row_t r : S) {
            const auto row = H.row(r);
            for (col_t c = 0; c < m; ++c) ++counts[c * alphabet + row[c]];
        }
        for (col_t c = 0; c < m; ++c) {
            const std::uint32_t* hist = counts.data() + c * alphabet;
            // max_element returns the first maximum, i.e. the smallest value.
            maj[c] = static_cast<value_t>(std::max_element(hist, hist + alphabet) - hist);
        }
        return maj;
    }

    // Wide alphabets: sort each column's values and scan runs.
    std::vector<value_t> column(S.size());
    for (col_t c = 0; c < m; ++c) {
        std::size_t k = 0;
        for (row_t r : S) column[k++] = H(r, c);
        std::sort(column.begin(), column.end());
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < column.size();) {
            std::size_t j = i;
            while (j < column.size() && column[j] == column[i]) ++j;
            if (j - i > best_len) {
                best_len = j - i;
                maj[c] = column[i];
            }
            i = j;
        }
    }
    return maj;
}

// P-mass of the columns where row h agrees with maj.
inline double majority_agreement(const HypothesisMatrix& H, const ExampleDistribution& P,
                                 const MajorityVector& maj, row_t h) {
    const auto row = H.row(h);
    double s = 0.0;
    for (col_t c = 0; c < H.cols(); ++c)
        if (row[c] == maj[c]) s += P(c);
    return s;
}

inline row_t best_majority_hypothesis(const HypothesisMatrix& H, const ConsistentSet& S,
                                      const ExampleDistribution& P, const MajorityVector& maj,
                                      WorkCounter* work = nullptr) {
    if (S.empty()) throw std::invalid_argument("best majority hypothesis of an empty consistent set");
    if (work) work->cells += S.size() * H.cols();
    row_t best = S[0];
    double best_score = majority_agreement(H, P, maj, best);
    for (std::size_t i = 1; i < S.size(); ++i) {
        const row_t r = S[i];
        const double score = majority_agreement(H, P, maj, r);
        if (score > best_score + detail::kScoreTieTolerance) {
            best = r;
            best_score = score;
        } else if (score >= best_score - detail::kScoreTieTolerance &&
                   detail::lexicographically_less(H, r, best)) {
            best = r;
            best_score = std::max(best_score, score);
        }
    }
    return best;
}

inline row_t best_majority_hypothesis(const HypothesisMatrix& H, const ConsistentSet& S,
                                      const ExampleDistribution& P, WorkCounter* work = nullptr) {
    return best_majority_hypothesis(H, S, P, compute_majority(H, S, work), work);
}

// One majority round's query for the consistent set S.
inline row_t majority_query(const HypothesisMatrix& H, const ConsistentSet& S,
                            const ExampleDistribution& P, WorkCounter* work = nullptr) {
    if (S.size() == 1) return S[0];
    return best_majority_hypothesis(H, S, P, work);
}

// max_rounds == 0 means |H| (each counter-example removes at least the query).
inline Transcript run_majority(const HypothesisMatrix& H, const ExampleDistribution& P,
                               const TeacherConfig& cfg, RngStream& rng,
                               std::size_t max_rounds = 0, WorkCounter* work = nullptr) {
    H.check_row(cfg.target);
    if (P.size() != H.cols()) throw std::invalid_argument("example distribution does not match column count");
    if (max_rounds == 0) max_rounds = H.rows();

    Transcript t;
    t.target = cfg.target;
    ConsistentSet S = ConsistentSet::all(H.rows());
    for (;;) {
        if (t.rounds.size() >= max_rounds) throw MaxRoundsExceeded(max_rounds);
        const row_t query = majority_query(H, S, P, work);
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
