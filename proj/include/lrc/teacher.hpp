// teacher.hpp
#pragma once
#include <optional>
#include <stdexcept>
#include <vector>

#include "concept.hpp"

namespace lrc {

struct PacParams {
    double epsilon;
    double delta;
};

// Exact LRC when pac is empty; PAC-LRC otherwise.
struct TeacherConfig {
    row_t target;
    std::optional<PacParams> pac;

    static TeacherConfig exact(row_t target) { return {target, std::nullopt}; }
    static TeacherConfig approximate(row_t target, double epsilon, double delta) {
        if (!(epsilon > 0.0 && epsilon < 1.0))
            throw std::invalid_argument("epsilon must lie in (0, 1)");
        if (!(delta > 0.0 && delta < 1.0))
            throw std::invalid_argument("delta must lie in (0, 1)");
        return {target, PacParams{epsilon, delta}};
    }
};

struct TeacherResponse {
    std::optional<CounterExample> counter_example;
    bool accepted() const { return !counter_example.has_value(); }
};

// True iff P(D(h, target)) >= epsilon.
inline bool epsilon_bad(const HypothesisMatrix& H, const ExampleDistribution& P,
                        row_t h, row_t target, double epsilon) {
    H.check_row(h);
    H.check_row(target);
    return disagreement_mass(H, P, h, target) >= epsilon;
}

inline TeacherResponse respond(const HypothesisMatrix& H, const ExampleDistribution& P,
                               row_t query, const TeacherConfig& cfg, RngStream& rng) {
    H.check_row(query);
    H.check_row(cfg.target);
    if (query == cfg.target) return {};
    if (cfg.pac && !epsilon_bad(H, P, query, cfg.target, cfg.pac->epsilon)) return {};
    const auto diff = difference_set(H, query, cfg.target);
    const col_t x = sample_column(conditional_distribution(P, diff), rng);
    return {CounterExample{x, H(cfg.target, x)}};
}

// --- transcripts, shared by all learners ---

struct RoundRecord {
    row_t query;
    std::optional<CounterExample> counter_example;
    std::size_t consistent_before;
    std::size_t consistent_after;

    std::size_t eliminated() const { return consistent_before - consistent_after; }
};

enum class Termination {
    accepted,            // the teacher accepted the query
    no_bad_hypothesis,   // PAC run: every consistent hypothesis is within epsilon
};

struct Transcript {
    row_t target{0};
    std::vector<RoundRecord> rounds;
    row_t output{0};  // the hypothesis the learner ends with
    Termination termination{Termination::accepted};
    std::size_t numerical_warnings{0};

    std::size_t counter_examples() const {
        std::size_t n = 0;
        for (const auto& r : rounds) n += r.counter_example.has_value();
        return n;
    }
};

class MaxRoundsExceeded : public std::runtime_error {
public:
    explicit MaxRoundsExceeded(std::size_t limit)
        : std::runtime_error("learner exceeded " + std::to_string(limit) + " rounds") {}
};

} // namespace lrc
