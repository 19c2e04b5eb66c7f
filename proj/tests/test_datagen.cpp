#include <gtest/gtest.h>

#include <algorithm>

#include "lrc/lrc.hpp"

using namespace lrc;

namespace {

std::size_t hamming(const HypothesisMatrix& H, row_t a, row_t b) { return difference_set(H, a, b).size(); }

} // namespace

TEST(Clustered, SmallConfigValidatesAndIsDeterministic) {
    const ClusterConfig cfg{200, 300, 10, 5, 2, 7};
    const auto a = generate_clustered(cfg);
    const auto b = generate_clustered(cfg);
    EXPECT_FALSE(validate(a.matrix));
    EXPECT_EQ(a.matrix, b.matrix);
    EXPECT_EQ(a.matrix.rows(), 300u);
    EXPECT_EQ(a.matrix.cols(), 200u);
    for (row_t r = 0; r < 300; ++r) EXPECT_EQ(a.cluster_of_row[r], r % 10);
    auto other = cfg;
    other.seed = 8;
    EXPECT_NE(generate_clustered(other).matrix, a.matrix);
}

TEST(Clustered, EveryRowARepresentative) {
    const auto d = generate_clustered({40, 25, 25, 3, 2, 1});
    EXPECT_FALSE(validate(d.matrix));
    EXPECT_EQ(d.matrix.rows(), 25u);
}

TEST(Clustered, FullScaleDistances) {
    const ClusterConfig cfg{5000, 10000, 100, 20, 2, 3};
    const auto d = generate_clustered(cfg);
    EXPECT_FALSE(validate(d.matrix));
    const auto& H = d.matrix;
    // Within a cluster: members differ from their representative in at most p columns.
    for (row_t r = 100; r < 10000; r += 37) {
        EXPECT_LE(hamming(H, r, r % 100), 20u);
        EXPECT_LE(hamming(H, r, (r + 100) % 10000), 40u);
    }
    // Across clusters: independent uniform representatives, about m/2 apart.
    for (row_t a = 0; a < 30; ++a) {
        const auto h = hamming(H, a, a + 1);
        EXPECT_GT(h, 2300u);
        EXPECT_LT(h, 2700u);
    }
}

TEST(Clustered, NonBinaryAlphabet) {
    const auto d = generate_clustered({60, 120, 6, 4, 5, 9});
    EXPECT_FALSE(validate(d.matrix));
    EXPECT_LE(d.matrix.max_value(), 4u);
}

TEST(Clustered, BadConfigsRejected) {
    EXPECT_THROW(generate_clustered({10, 5, 6, 2, 2, 0}), std::invalid_argument);
    EXPECT_THROW(generate_clustered({10, 50, 5, 11, 2, 0}), std::invalid_argument);
    EXPECT_THROW(generate_clustered({10, 50, 5, 2, 1, 0}), std::invalid_argument);
    EXPECT_THROW(generate_clustered({10, 50, 5, 0, 2, 0}), std::invalid_argument);
}

TEST(TightBound, NTwoMatchesConstruction) {
    const auto tb = generate_tight_bound(2);
    EXPECT_EQ(tb.matrix.rows(), 6u);
    EXPECT_EQ(tb.matrix.cols(), 5u);
    const auto mod = tb.matrix.row(tb.modified_row);
    EXPECT_EQ(std::vector<value_t>(mod.begin(), mod.end()), (std::vector<value_t>{0, 0, 0, 1, 1}));
    const auto tgt = tb.matrix.row(tb.target);
    EXPECT_EQ(std::vector<value_t>(tgt.begin(), tgt.end()), (std::vector<value_t>{1, 0, 0, 1, 0}));
    EXPECT_EQ(difference_set(tb.matrix, tb.modified_row, tb.target), (std::vector<col_t>{0, 4}));
}

TEST(TightBound, RowsHaveNOnesAndValidate) {
    const std::size_t binom[] = {0, 0, 6, 20, 70, 252, 924, 3432};
    for (std::size_t n = 2; n <= 7; ++n) {
        const auto tb = generate_tight_bound(n);
        EXPECT_FALSE(validate(tb.matrix)) << n;
        EXPECT_EQ(tb.matrix.rows(), binom[n]);
        for (row_t r = 0; r < tb.matrix.rows(); ++r) {
            const auto row = tb.matrix.row(r);
            EXPECT_EQ(std::count(row.begin(), row.end(), 1u), static_cast<std::ptrdiff_t>(n));
        }
    }
    EXPECT_THROW(generate_tight_bound(1), std::invalid_argument);
    EXPECT_THROW(generate_tight_bound(8), std::invalid_argument);
}

TEST(Identity, Structure) {
    const auto I = generate_identity(4);
    EXPECT_FALSE(validate(I));
    for (row_t r = 0; r < 4; ++r)
        for (col_t c = 0; c < 4; ++c) EXPECT_EQ(I(r, c), r == c ? 1u : 0u);
}

TEST(Random, ValidatesAndReproduces) {
    const auto a = generate_random(8, 6, 2, 5);
    EXPECT_FALSE(validate(a));
    EXPECT_EQ(a, generate_random(8, 6, 2, 5));
    const auto forced = generate_random(2, 1, 2, 9);
    EXPECT_EQ(forced.rows(), 2u);
    EXPECT_EQ(forced(0, 0) + forced(1, 0), 1u);
    EXPECT_THROW(generate_random(5, 2, 2, 0), std::invalid_argument);
    EXPECT_THROW(generate_random(2, 5, 2, 0), std::invalid_argument);
}

TEST(Random, ManySeedsValidate) {
    for (std::uint64_t s = 0; s < 50; ++s) EXPECT_FALSE(validate(generate_random(20, 9, 3, s)));
}
