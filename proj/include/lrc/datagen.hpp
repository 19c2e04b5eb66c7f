// datagen.hpp
//
// Instance generators: clustered "user x movie" matrices, the adversarial
// instance on which the majority learner eliminates only about a quarter of
// the hypotheses, identity matrices, and uniform random matrices. All are
// pure functions of their arguments and seed.
#pragma once
#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "concept.hpp"
#include "rng.hpp"

namespace lrc {

struct ClusterConfig {
    std::size_t num_columns{5000};
    std::size_t num_hypotheses{10000};
    std::size_t num_clusters{100};
    std::size_t max_flips{20};
    value_t alphabet{2};
    std::uint64_t seed{0};

    void check() const {
        if (num_columns == 0 || num_hypotheses == 0 || num_clusters == 0)
            throw std::invalid_argument("cluster config needs positive columns, hypotheses and clusters");
        if (num_clusters > num_hypotheses)
            throw std::invalid_argument("more clusters than hypotheses");
        if (max_flips > num_columns) throw std::invalid_argument("max_flips exceeds the column count");
        if (max_flips == 0 && num_hypotheses > num_clusters)
            throw std::invalid_argument("cluster members need max_flips >= 1");
        if (alphabet < 2) throw std::invalid_argument("alphabet needs at least two values");
    }
};

struct ClusteredDataset {
    HypothesisMatrix matrix;
    std::vector<std::size_t> cluster_of_row;  // row r belongs to cluster r % num_clusters
    std::size_t row_regenerations{0};
    std::size_t column_repairs{0};
};

namespace detail {

// A cluster member is its representative with a few columns shifted by a
// non-zero offset mod the alphabet, so it differs from it in exactly those columns.
struct Member {
    std::vector<std::pair<col_t, value_t>> flips;  // (column, offset)
};

inline Member draw_member(const ClusterConfig& cfg, RngStream& rng) {
    Member m;
    const std::size_t f = rng.uniform_between(1, cfg.max_flips);
    std::vector<col_t> cols;
    cols.reserve(f);
    while (cols.size() < f) {
        const col_t c = rng.uniform_index(cfg.num_columns);
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end());
    for (col_t c : cols) m.flips.emplace_back(c, static_cast<value_t>(rng.uniform_between(1, cfg.alphabet - 1)));
    return m;
}

inline void draw_representative(std::vector<value_t>& rep, const ClusterConfig& cfg, RngStream& rng) {
    for (auto& v : rep) v = static_cast<value_t>(rng.uniform_index(cfg.alphabet));
}

// Rows that repeat an earlier row, in ascending order.
inline std::vector<row_t> later_duplicate_rows(const std::vector<value_t>& values, std::size_t rows, std::size_t cols) {
    std::unordered_multimap<std::uint64_t, row_t> seen;
    seen.reserve(rows);
    std::vector<row_t> dups;
    for (row_t r = 0; r < rows; ++r) {
        const std::span<const value_t> row(values.data() + r * cols, cols);
        const std::uint64_t h = hash_span(row);
        bool dup = false;
        auto [lo, hi] = seen.equal_range(h);
        for (auto it = lo; it != hi && !dup; ++it) {
            const value_t* other = values.data() + it->second * cols;
            dup = std::equal(row.begin(), row.end(), other);
        }
        if (dup) dups.push_back(r);
        else seen.emplace(h, r);
    }
    return dups;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

} // namespace detail

inline ClusteredDataset generate_clustered(const ClusterConfig& cfg) {
    cfg.check();
    const std::size_t n = cfg.num_hypotheses;
    const std::size_t m = cfg.num_columns;
    const std::size_t k = cfg.num_clusters;
    RngStream rng(cfg.seed);

    std::vector<std::vector<value_t>> reps(k, std::vector<value_t>(m));
    for (auto& rep : reps) detail::draw_representative(rep, cfg, rng);
    std::vector<detail::Member> members(n - k);
    for (auto& mem : members) mem = detail::draw_member(cfg, rng);

    std::vector<value_t> values(n * m);
    auto build_row = [&](row_t r) {
        const auto& rep = reps[r % k];
        value_t* out = values.data() + r * m;
        std::copy(rep.begin(), rep.end(), out);
        if (r >= k)
            for (const auto& [c, off] : members[r - k].flips) out[c] = (out[c] + off) % cfg.alphabet;
    };
    auto build_cluster = [&](std::size_t cluster) {
        for (row_t r = cluster; r < n; r += k) build_row(r);
    };
    for (row_t r = 0; r < n; ++r) build_row(r);

    ClusteredDataset out{HypothesisMatrix(1, 1, {0}), {}, 0, 0};
    const std::size_t max_passes = 1000;
    for (std::size_t pass = 0;; ++pass) {
        if (pass == max_passes)
            throw std::runtime_error("cannot produce distinct rows and columns for this cluster config");
        const auto dups = detail::later_duplicate_rows(values, n, m);
        if (!dups.empty()) {
            for (row_t r : dups) {
                if (r < k) {
                    detail::draw_representative(reps[r], cfg, rng);
                    build_cluster(r);
                } else {
                    members[r - k] = detail::draw_member(cfg, rng);
                    build_row(r);
                }
                ++out.row_regenerations;
            }
            continue;
        }
        HypothesisMatrix H(n, m, values);
        const auto dup_col = detail::first_duplicate_column(H);
        if (!dup_col) {
            out.matrix = std::move(H);
            break;
        }
        // Re-draw the offending column of one representative; its members follow.
        const std::size_t cluster = rng.uniform_index(k);
        reps[cluster][dup_col->second] = static_cast<value_t>(rng.uniform_index(cfg.alphabet));
        build_cluster(cluster);
        ++out.column_repairs;
    }
    out.cluster_of_row.resize(n);
    for (row_t r = 0; r < n; ++r) out.cluster_of_row[r] = r % k;
    return out;
}

struct TightBoundInstance {
    HypothesisMatrix matrix;
    row_t modified_row;  // the best majority hypothesis under uniform P
    row_t target;        // differs from modified_row in the first and last columns only
};

// All C(2n, n) rows with n ones among the first 2n columns and a zero in the
// last column, in ascending lexicographic order. Row 0 (zeros then ones) is
// then modified: its first one, column n (0-based), becomes 0 and the last
// column becomes 1.
inline TightBoundInstance generate_tight_bound(std::size_t n) {
    if (n < 2 || n > 7) throw std::invalid_argument("tight-bound instance supports 2 <= n <= 7");
    const std::size_t width = 2 * n;
    const std::size_t m = width + 1;
    std::vector<value_t> values;
    std::size_t rows = 0;
    // Bit (width-1-c) holds column c, so numeric order is lexicographic order.
    for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n) continue;
        for (std::size_t c = 0; c < width; ++c) values.push_back((mask >> (width - 1 - c)) & 1u);
        values.push_back(0);
        ++rows;
    }
    const row_t modified = 0;
    values[modified * m + n] = 0;
    values[modified * m + width] = 1;

    HypothesisMatrix H(rows, m, std::move(values));
    std::vector<value_t> star(H.row(modified).begin(), H.row(modified).end());
    star[0] = 1;
    star[width] = 0;
    for (row_t r = 0; r < rows; ++r) {
        const auto row = H.row(r);
        if (std::equal(row.begin(), row.end(), star.begin())) return {std::move(H), modified, r};
    }
    throw std::logic_error("tight-bound target row missing");
}

inline HypothesisMatrix generate_identity(std::size_t n) {
    if (n == 0) throw std::invalid_argument("identity matrix needs n >= 1");
    std::vector<value_t> values(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) values[i * n + i] = 1;
    return HypothesisMatrix(n, n, std::move(values));
}

// Uniform rows over the alphabet; duplicate rows and columns are re-drawn.
inline HypothesisMatrix generate_random(std::size_t rows, std::size_t cols, value_t alphabet, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("random matrix needs a positive shape");
    if (alphabet < 1) throw std::invalid_argument("alphabet must be non-empty");
    if (detail::saturating_pow(alphabet, cols) < rows)
        throw std::invalid_argument("alphabet^cols < rows: distinct rows impossible");
    if (detail::saturating_pow(alphabet, rows) < cols)
        throw std::invalid_argument("alphabet^rows < cols: distinct columns impossible");

    RngStream rng(seed);
    std::vector<value_t> values(rows * cols);
    for (auto& v : values) v = static_cast<value_t>(rng.uniform_index(alphabet));
    const std::size_t max_passes = 100000;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        const auto dups = detail::later_duplicate_rows(values, rows, cols);
        for (row_t r : dups)
            for (col_t c = 0; c < cols; ++c) values[r * cols + c] = static_cast<value_t>(rng.uniform_index(alphabet));
        if (!dups.empty()) continue;
        HypothesisMatrix H(rows, cols, values);
        const auto dup_col = detail::first_duplicate_column(H);
        if (!dup_col) return H;
        for (row_t r = 0; r < rows; ++r)
            values[r * cols + dup_col->second] = static_cast<value_t>(rng.uniform_index(alphabet));
    }
    throw std::runtime_error("random matrix generation did not converge");
}

} // namespace lrc
