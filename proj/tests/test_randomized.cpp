#include <gtest/gtest.h>

#include <cmath>

#include "lrc/lrc.hpp"
#include "test_util.hpp"

using namespace lrc;

namespace {

const HypothesisMatrix kThreeRows = HypothesisMatrix::from_rows({{0, 0}, {1, 0}, {1, 1}});

} // namespace

TEST(PosteriorUpdate, ThreeRowHandExample) {
    const auto P = ExampleDistribution::uniform(2);
    const auto prior = Posterior::from_prior(TargetPrior::uniform(3));
    const TranscriptPair pair{0, {0, 1}};
    const auto S = eliminate(ConsistentSet::all(3), kThreeRows, pair.counter);
    ASSERT_EQ(S, ConsistentSet({1, 2}));
    const auto post = posterior_update(kThreeRows, P, prior, pair, S);
    EXPECT_EQ(post(0), 0.0);
    EXPECT_NEAR(post(1), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(post(2), 1.0 / 3.0, 1e-15);
}

TEST(PosteriorUpdate, SymmetricSurvivorsSplitEvenly) {
    // Rows 1 and 2 each differ from row 0 in exactly one column.
    const auto H = HypothesisMatrix::from_rows({{0, 0, 0}, {1, 0, 1}, {1, 1, 0}});
    const auto P = ExampleDistribution::uniform(3);
    const TranscriptPair pair{0, {0, 1}};
    const auto S = eliminate(ConsistentSet::all(3), H, pair.counter);
    const auto post = posterior_update(H, P, Posterior::from_prior(TargetPrior::uniform(3)), pair, S);
    EXPECT_NEAR(post(1), 0.5, 1e-15);
    EXPECT_NEAR(post(2), 0.5, 1e-15);
}

TEST(PosteriorUpdate, SingleSurvivorGetsEverything) {
    const auto I = generate_identity(5);
    const TranscriptPair pair{1, {3, 1}};
    const auto S = eliminate(ConsistentSet::all(5), I, pair.counter);
    const auto post = posterior_update(I, ExampleDistribution::uniform(5),
                                       Posterior::from_prior(TargetPrior::uniform(5)), pair, S);
    EXPECT_EQ(post(3), 1.0);
    EXPECT_NEAR(post.total(), 1.0, 1e-15);
}

TEST(PosteriorUpdate, ZeroMassEverywhereIsInconsistent) {
    const TranscriptPair pair{0, {0, 1}};
    const auto S = eliminate(ConsistentSet::all(3), kThreeRows, pair.counter);
    const TargetPrior Q({1.0, 0.0, 0.0});
    EXPECT_THROW(posterior_update(kThreeRows, ExampleDistribution::uniform(2), Posterior::from_prior(Q), pair, S),
                 PosteriorInconsistency);
}

TEST(PosteriorUpdate, DriftIsReported) {
    const auto P = ExampleDistribution::uniform(2);
    Posterior prior{{0.5, 0.5, 0.5}};
    const TranscriptPair pair{0, {0, 1}};
    const auto S = eliminate(ConsistentSet::all(3), kThreeRows, pair.counter);
    double drift = 0.0;
    const auto post = posterior_update(kThreeRows, P, prior, pair, S, &drift);
    EXPECT_NEAR(drift, 0.5, 1e-15);
    EXPECT_NEAR(post.total(), 1.0, 1e-15);
}

TEST(PosteriorUpdate, MatchesBayesOracleAlongRuns) {
    RngStream rng(17);
    double worst = 0.0;
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = 4 + rng.uniform_index(13);
        const std::size_t m = 4 + rng.uniform_index(5);
        const auto H = generate_random(n, m, 2 + static_cast<value_t>(rng.uniform_index(2)), rng.next_u64());
        const auto P = test_support::random_distribution(m, rng);
        const auto Q = test_support::random_prior(n, rng);
        const row_t target = sample_target(Q, rng);
        auto post = Posterior::from_prior(Q);
        ConsistentSet S = ConsistentSet::all(n);
        std::vector<TranscriptPair> transcript;
        for (;;) {
            const row_t h = sample_posterior(post, S, rng);
            const auto resp = respond(H, P, h, TeacherConfig::exact(target), rng);
            if (resp.accepted()) break;
            transcript.push_back({h, *resp.counter_example});
            S = eliminate(S, H, *resp.counter_example);
            post = posterior_update(H, P, post, transcript.back(), S);
            const auto oracle = bayes_oracle(H, P, Q, transcript);
            for (row_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(post(j) - oracle(j)));
        }
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(BayesOracle, EmptyTranscriptIsPrior) {
    const TargetPrior Q({0.2, 0.5, 0.3});
    const auto post = bayes_oracle(kThreeRows, ExampleDistribution::uniform(2), Q, {});
    for (row_t j = 0; j < 3; ++j) EXPECT_NEAR(post(j), Q(j), 1e-15);
}

TEST(BayesOracle, ThreeRowHandExample) {
    const auto post = bayes_oracle(kThreeRows, ExampleDistribution::uniform(2), TargetPrior::uniform(3), {{0, {0, 1}}});
    EXPECT_NEAR(post(1), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(post(2), 1.0 / 3.0, 1e-15);
}

TEST(BayesOracle, CapsEnforced) {
    const auto I = generate_identity(21);
    EXPECT_THROW(bayes_oracle(I, ExampleDistribution::uniform(21), TargetPrior::uniform(21), {}), OracleCapExceeded);
}

TEST(SamplePosterior, NeverPicksZeroMass) {
    const auto post = Posterior{{0.0, 0.5, 0.0, 0.5, 0.0}};
    RngStream rng(4);
    for (int i = 0; i < 2000; ++i) {
        const row_t r = sample_posterior(post, ConsistentSet::all(5), rng);
        EXPECT_TRUE(r == 1 || r == 3);
    }
}

TEST(RunRandomized, TrivialCases) {
    RngStream rng(1);
    const auto one = HypothesisMatrix::from_rows({{1, 0}});
    EXPECT_EQ(run_randomized(one, ExampleDistribution::uniform(2), TargetPrior::uniform(1), rng).counter_examples(), 0u);

    const auto H = generate_random(8, 5, 2, 3);
    std::vector<double> q(8, 0.0);
    q[6] = 1.0;
    const TargetPrior point(q);
    for (int i = 0; i < 20; ++i) {
        const auto t = run_randomized(H, ExampleDistribution::uniform(5), point, rng);
        EXPECT_EQ(t.target, 6u);
        EXPECT_EQ(t.counter_examples(), 0u);
    }
}

TEST(RunRandomized, ZeroPriorTargetRejected) {
    RngStream rng(1);
    EXPECT_THROW(run_randomized(kThreeRows, ExampleDistribution::uniform(2), TargetPrior({0.5, 0.5, 0.0}), 2, rng),
                 std::invalid_argument);
}

TEST(RunRandomized, ZeroMassRowsNeverQueried) {
    const auto H = generate_random(10, 6, 2, 12);
    std::vector<double> q(10, 0.125);
    q[2] = q[7] = 0.0;
    const TargetPrior Q(q);
    RngStream rng(8);
    for (int i = 0; i < 300; ++i) {
        const auto t = run_randomized(H, ExampleDistribution::uniform(6), Q, rng);
        EXPECT_NE(t.target, 2u);
        EXPECT_NE(t.target, 7u);
        for (const auto& r : t.rounds) {
            EXPECT_NE(r.query, 2u);
            EXPECT_NE(r.query, 7u);
        }
        EXPECT_EQ(t.numerical_warnings, 0u);
    }
}

TEST(RunRandomized, EightRowsMeanWithinBoundAndOracle) {
    const auto H = generate_random(8, 6, 2, 21);
    const auto P = ExampleDistribution::uniform(6);
    const auto Q = TargetPrior::uniform(8);
    const double exact = randomized_expected_counter_examples(H, P, Q);
    RngStream rng(22);
    const int trials = 10000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < trials; ++i) {
        const double k = double(run_randomized(H, P, Q, rng).counter_examples());
        sum += k;
        sq += k * k;
    }
    const double mean = sum / trials;
    const double se = std::sqrt((sq - trials * mean * mean) / (trials - 1) / trials);
    EXPECT_LE(mean - 3 * se, 3.0);
    EXPECT_LE(exact, 3.0);
    EXPECT_NEAR(mean, exact, 4 * se);
}
