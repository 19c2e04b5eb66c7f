#include <gtest/gtest.h>

#include "lrc/lrc.hpp"

using namespace lrc;

TEST(Select, NamedStrategies) {
    const ConsistentSet S({3, 7, 9});
    RngStream rng(0);
    EXPECT_EQ(select(S, SelectionStrategy::first(), rng), 3u);
    EXPECT_EQ(select(S, SelectionStrategy::middle(), rng), 7u);
    EXPECT_EQ(select(S, SelectionStrategy::last(), rng), 9u);
    EXPECT_EQ(select(S, SelectionStrategy::fixed_rank(1), rng), 7u);
    EXPECT_EQ(select(S, SelectionStrategy::fixed_rank(10), rng), 9u);
    EXPECT_EQ(select(ConsistentSet({1, 2, 3, 4}), SelectionStrategy::middle(), rng), 3u);
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(S.contains(select(S, SelectionStrategy::random(), rng)));
    EXPECT_THROW(select(ConsistentSet(std::vector<row_t>{}), SelectionStrategy::first(), rng), std::invalid_argument);
}

TEST(Select, ParseRoundTrip) {
    for (const char* s : {"first", "middle", "last", "random", "rank:4"})
        EXPECT_EQ(SelectionStrategy::parse(s).name(), s);
    EXPECT_THROW(SelectionStrategy::parse("rank:"), std::invalid_argument);
    EXPECT_THROW(SelectionStrategy::parse("rank:x"), std::invalid_argument);
    EXPECT_THROW(SelectionStrategy::parse("best"), std::invalid_argument);
}

TEST(RunArbitrary, RequiresPacTeacher) {
    const auto I = generate_identity(3);
    RngStream rng(0);
    EXPECT_THROW(run_arbitrary(I, ExampleDistribution::uniform(3), TeacherConfig::exact(0), SelectionStrategy::first(), rng),
                 std::invalid_argument);
}

TEST(RunArbitrary, FirstPickNotBadMeansNoCounterExamples) {
    // Identity rows differ on mass 2/5 < 0.5: nothing is epsilon-bad.
    const auto I = generate_identity(5);
    RngStream rng(0);
    const auto t = run_arbitrary(I, ExampleDistribution::uniform(5), TeacherConfig::approximate(3, 0.5, 0.1),
                                 SelectionStrategy::first(), rng);
    EXPECT_EQ(t.counter_examples(), 0u);
    EXPECT_EQ(t.output, 0u);
    EXPECT_EQ(t.termination, Termination::no_bad_hypothesis);
}

TEST(RunArbitrary, NearOneEpsilonAcceptsImmediately) {
    const auto H = generate_random(30, 8, 2, 4);
    RngStream rng(2);
    for (row_t target = 0; target < 30; ++target) {
        const auto t = run_arbitrary(H, ExampleDistribution::uniform(8), TeacherConfig::approximate(target, 0.999, 0.1),
                                     SelectionStrategy::middle(), rng);
        EXPECT_EQ(t.counter_examples(), 0u);
    }
}

TEST(RunArbitrary, AcceptanceWithinEpsilonAndRoundsBelowH) {
    RngStream rng(31);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto H = generate_random(60, 12, 2, seed);
        const auto P = ExampleDistribution::uniform(12);
        for (const auto& strat : {SelectionStrategy::first(), SelectionStrategy::middle(), SelectionStrategy::last(),
                                  SelectionStrategy::random(), SelectionStrategy::fixed_rank(5)}) {
            const row_t target = rng.uniform_index(60);
            const double eps = 0.05 + 0.3 * rng.uniform01();
            const auto t = run_arbitrary(H, P, TeacherConfig::approximate(target, eps, 0.1), strat, rng);
            EXPECT_LT(t.counter_examples(), 60u);
            EXPECT_LT(disagreement_mass(H, P, t.output, target), eps);
            for (const auto& r : t.rounds)
                if (r.counter_example) {
                    EXPECT_GE(r.eliminated(), 1u);
                }
        }
    }
}

TEST(RunArbitrary, TargetQueryIsAccepted) {
    const auto I = generate_identity(4);
    RngStream rng(0);
    // First row is the target and epsilon is small enough that every other row is bad.
    const auto t = run_arbitrary(I, ExampleDistribution::uniform(4), TeacherConfig::approximate(0, 0.2, 0.1),
                                 SelectionStrategy::first(), rng);
    EXPECT_EQ(t.rounds.size(), 1u);
    EXPECT_EQ(t.termination, Termination::accepted);
    EXPECT_EQ(t.output, 0u);
}
