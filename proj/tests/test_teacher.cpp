#include <gtest/gtest.h>

#include "lrc/lrc.hpp"

using namespace lrc;

TEST(EpsilonBad, ThreeColumnsOfTen) {
    std::vector<std::vector<value_t>> rows(2, std::vector<value_t>(10, 0));
    rows[1][2] = rows[1][5] = rows[1][7] = 1;
    const auto H = HypothesisMatrix::from_rows(rows);
    const auto P = ExampleDistribution::uniform(10);
    EXPECT_TRUE(epsilon_bad(H, P, 1, 0, 0.2));
    EXPECT_FALSE(epsilon_bad(H, P, 1, 0, 0.35));
    EXPECT_TRUE(epsilon_bad(H, P, 1, 0, 0.3));  // boundary counts as bad
    EXPECT_FALSE(epsilon_bad(H, P, 0, 0, 0.2));
}

TEST(TeacherConfig, RejectsBadParameters) {
    EXPECT_THROW(TeacherConfig::approximate(0, 0.0, 0.1), std::invalid_argument);
    EXPECT_THROW(TeacherConfig::approximate(0, 1.0, 0.1), std::invalid_argument);
    EXPECT_THROW(TeacherConfig::approximate(0, 0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(TeacherConfig::approximate(0, 0.1, 1.0), std::invalid_argument);
}

TEST(Respond, ExactAcceptsOnlyTarget) {
    const auto I = generate_identity(4);
    const auto P = ExampleDistribution::uniform(4);
    RngStream rng(1);
    EXPECT_TRUE(respond(I, P, 2, TeacherConfig::exact(2), rng).accepted());
    for (row_t q : {0, 1, 3}) EXPECT_FALSE(respond(I, P, q, TeacherConfig::exact(2), rng).accepted());
}

TEST(Respond, PacAcceptsNearHypotheses) {
    const auto I = generate_identity(4);
    const auto P = ExampleDistribution::uniform(4);
    RngStream rng(1);
    // Distinct identity rows disagree on mass 0.5.
    EXPECT_TRUE(respond(I, P, 1, TeacherConfig::approximate(0, 0.6, 0.1), rng).accepted());
    EXPECT_FALSE(respond(I, P, 1, TeacherConfig::approximate(0, 0.5, 0.1), rng).accepted());
}

TEST(Respond, IdentityCounterExampleSplit) {
    const auto I = generate_identity(4);
    const auto P = ExampleDistribution::uniform(4);
    RngStream rng(99);
    int at_first = 0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
        const auto r = respond(I, P, 3, TeacherConfig::exact(0), rng);
        ASSERT_TRUE(r.counter_example);
        const auto cx = *r.counter_example;
        ASSERT_TRUE(cx.column == 0 || cx.column == 3);
        EXPECT_EQ(cx.target_value, cx.column == 0 ? 1u : 0u);
        at_first += cx.column == 0;
    }
    // 3 sigma of Binomial(20000, 1/2) is about 212.
    EXPECT_NEAR(at_first, draws / 2, 212);
}

TEST(Respond, CounterExampleInvariantAndFrequencies) {
    const auto H = generate_random(10, 8, 3, 5);
    RngStream prng(6);
    std::vector<double> p(8);
    double s = 0.0;
    for (auto& v : p) s += (v = 0.1 + prng.uniform01());
    for (auto& v : p) v /= s;
    const ExampleDistribution P(p);
    RngStream rng(7);
    const row_t target = 4, query = 8;
    const auto expected = conditional_distribution(P, difference_set(H, query, target));
    std::vector<int> hits(8, 0);
    const int draws = 50000;
    for (int i = 0; i < draws; ++i) {
        const auto cx = *respond(H, P, query, TeacherConfig::exact(target), rng).counter_example;
        EXPECT_NE(H(query, cx.column), cx.target_value);
        EXPECT_EQ(H(target, cx.column), cx.target_value);
        ++hits[cx.column];
    }
    for (const auto& [c, q] : expected) {
        const double sigma = std::sqrt(q * (1 - q) / draws);
        EXPECT_NEAR(hits[c] / double(draws), q, 4 * sigma) << "column " << c;
    }
}
