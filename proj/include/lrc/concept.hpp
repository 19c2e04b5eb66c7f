// concept.hpp
//
// The concept class (a dense matrix of hypotheses x examples), the example
// distribution over columns, the prior over target rows, and the primitives
// every learner shares: difference sets, conditioned counter-example
// distributions, elimination and inverse-CDF sampling.
#pragma once
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rng.hpp"

namespace lrc {

using value_t = std::uint32_t;
using row_t = std::size_t;
using col_t = std::size_t;

inline constexpr double kInputSumTolerance = 1e-9;
inline constexpr double kDerivedSumTolerance = 1e-12;

// Row-major n x m grid. Immutable after construction; distinctness of rows and
// columns is checked by validate(), not the constructor, so malformed inputs
// can still be loaded and reported on.
class HypothesisMatrix {
public:
    HypothesisMatrix(std::size_t rows, std::size_t cols, std::vector<value_t> values)
        : rows_(rows), cols_(cols), values_(std::move(values)) {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument("hypothesis matrix needs at least one row and one column");
        if (values_.size() != rows_ * cols_)
            throw std::invalid_argument("hypothesis matrix value count does not match its shape");
        max_value_ = *std::max_element(values_.begin(), values_.end());
    }

    static HypothesisMatrix from_rows(const std::vector<std::vector<value_t>>& grid) {
        if (grid.empty() || grid.front().empty())
            throw std::invalid_argument("hypothesis matrix needs at least one row and one column");
        const std::size_t m = grid.front().size();
        std::vector<value_t> flat;
        flat.reserve(grid.size() * m);
        for (const auto& r : grid) {
            if (r.size() != m) throw std::invalid_argument("ragged hypothesis matrix");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return HypothesisMatrix(grid.size(), m, std::move(flat));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    value_t max_value() const { return max_value_; }

    value_t operator()(row_t r, col_t c) const { return values_[r * cols_ + c]; }

    std::span<const value_t> row(row_t r) const {
        return {values_.data() + r * cols_, cols_};
    }

    const std::vector<value_t>& values() const { return values_; }

    void check_row(row_t r) const {
        if (r >= rows_) throw std::out_of_range("row index " + std::to_string(r) + " out of range");
    }
    void check_col(col_t c) const {
        if (c >= cols_) throw std::out_of_range("column index " + std::to_string(c) + " out of range");
    }

    friend bool operator==(const HypothesisMatrix&, const HypothesisMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_t> values_;
    value_t max_value_{0};
};

struct Violation {
    enum class Kind { duplicate_rows, duplicate_columns, negative_value };
    Kind kind;
    std::size_t first;   // row / row / row
    std::size_t second;  // row / row / column

    std::string describe() const {
        switch (kind) {
        case Kind::duplicate_rows:
            return "rows " + std::to_string(first) + "," + std::to_string(second) + " duplicated";
        case Kind::duplicate_columns:
            return "columns " + std::to_string(first) + "," + std::to_string(second) + " duplicated";
        case Kind::negative_value:
            return "negative value at row " + std::to_string(first) + ", column " + std::to_string(second);
        }
        return "unknown violation";
    }
};

namespace detail {

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    return h ^ (h >> 33);
}

inline std::uint64_t hash_span(std::span<const value_t> s) {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (value_t v : s) h = mix_hash(h, v);
    return h;
}

inline bool columns_equal(const HypothesisMatrix& H, col_t a, col_t b) {
    for (row_t r = 0; r < H.rows(); ++r)
        if (H(r, a) != H(r, b)) return false;
    return true;
}

// Smallest (i, j) with j minimal such that rows i < j are equal.
inline std::optional<std::pair<row_t, row_t>> first_duplicate_row(const HypothesisMatrix& H) {
    std::unordered_multimap<std::uint64_t, row_t> seen;
    seen.reserve(H.rows());
    for (row_t j = 0; j < H.rows(); ++j) {
        const auto rj = H.row(j);
        const std::uint64_t h = hash_span(rj);
        auto [lo, hi] = seen.equal_range(h);
        std::optional<row_t> match;
        for (auto it = lo; it != hi; ++it) {
            const auto ri = H.row(it->second);
            if (std::equal(ri.begin(), ri.end(), rj.begin()) && (!match || it->second < *match))
                match = it->second;
        }
        if (match) return std::make_pair(*match, j);
        seen.emplace(h, j);
    }
    return std::nullopt;
}

inline std::vector<std::uint64_t> column_hashes(const HypothesisMatrix& H) {
    std::vector<std::uint64_t> h(H.cols(), 0x84222325cbf29ce4ULL);
    for (row_t r = 0; r < H.rows(); ++r) {
        const auto row = H.row(r);
        for (col_t c = 0; c < H.cols(); ++c) h[c] = mix_hash(h[c], row[c]);
    }
    return h;
}

inline std::optional<std::pair<col_t, col_t>> first_duplicate_column(const HypothesisMatrix& H) {
    const auto hashes = column_hashes(H);
    std::unordered_multimap<std::uint64_t, col_t> seen;
    seen.reserve(H.cols());
    for (col_t j = 0; j < H.cols(); ++j) {
        auto [lo, hi] = seen.equal_range(hashes[j]);
        std::optional<col_t> match;
        for (auto it = lo; it != hi; ++it)
            if (columns_equal(H, it->second, j) && (!match || it->second < *match)) match = it->second;
        if (match) return std::make_pair(*match, j);
        seen.emplace(hashes[j], j);
    }
    return std::nullopt;
}

} // namespace detail

// Reports the first duplicate row pair, then the first duplicate column pair.
// Values are unsigned, so negative entries can only be caught by the readers
// in io.hpp, which report them through the same Violation type.
inline std::optional<Violation> validate(const HypothesisMatrix& H) {
    if (auto d = detail::first_duplicate_row(H))
        return Violation{Violation::Kind::duplicate_rows, d->first, d->second};
    if (auto d = detail::first_duplicate_column(H))
        return Violation{Violation::Kind::duplicate_columns, d->first, d->second};
    return std::nullopt;
}

// P over columns: strictly positive, sums to one.
class ExampleDistribution {
public:
    explicit ExampleDistribution(std::vector<double> probs) : probs_(std::move(probs)) {
        if (probs_.empty()) throw std::invalid_argument("example distribution is empty");
        double sum = 0.0;
        for (double p : probs_) {
            if (!(p > 0.0)) throw std::invalid_argument("example distribution must be strictly positive");
            sum += p;
        }
        if (std::abs(sum - 1.0) > kInputSumTolerance)
            throw std::invalid_argument("example distribution does not sum to one");
    }

    static ExampleDistribution uniform(std::size_t m) {
        return ExampleDistribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
    }

    std::size_t size() const { return probs_.size(); }
    double operator()(col_t c) const { return probs_[c]; }
    const std::vector<double>& probs() const { return probs_; }

    double mass(std::span<const col_t> columns) const {
        double s = 0.0;
        for (col_t c : columns) s += probs_[c];
        return s;
    }

private:
    std::vector<double> probs_;
};

// Q over rows: non-negative, sums to one, not all zero.
class TargetPrior {
public:
    explicit TargetPrior(std::vector<double> probs) : probs_(std::move(probs)) {
        if (probs_.empty()) throw std::invalid_argument("target prior is empty");
        double sum = 0.0;
        bool any_positive = false;
        for (double q : probs_) {
            if (!(q >= 0.0)) throw std::invalid_argument("target prior must be non-negative");
            any_positive = any_positive || q > 0.0;
            sum += q;
        }
        if (!any_positive) throw std::invalid_argument("target prior has no positive entry");
        if (std::abs(sum - 1.0) > kInputSumTolerance)
            throw std::invalid_argument("target prior does not sum to one");
    }

    static TargetPrior uniform(std::size_t n) {
        return TargetPrior(std::vector<double>(n, 1.0 / static_cast<double>(n)));
    }

    std::size_t size() const { return probs_.size(); }
    double operator()(row_t r) const { return probs_[r]; }
    const std::vector<double>& probs() const { return probs_; }

private:
    std::vector<double> probs_;
};

struct CounterExample {
    col_t column;
    value_t target_value;
    friend bool operator==(const CounterExample&, const CounterExample&) = default;
};

// Ascending set of row indices still consistent with every counter-example.
class ConsistentSet {
public:
    ConsistentSet() = default;
    explicit ConsistentSet(std::vector<row_t> indices) : indices_(std::move(indices)) {
        std::sort(indices_.begin(), indices_.end());
        indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    }

    static ConsistentSet all(std::size_t n) {
        std::vector<row_t> idx(n);
        for (row_t i = 0; i < n; ++i) idx[i] = i;
        return ConsistentSet(std::move(idx));
    }

    const std::vector<row_t>& indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool empty() const { return indices_.empty(); }
    row_t operator[](std::size_t pos) const { return indices_[pos]; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    bool contains(row_t r) const { return std::binary_search(indices_.begin(), indices_.end(), r); }

    friend bool operator==(const ConsistentSet&, const ConsistentSet&) = default;

private:
    std::vector<row_t> indices_;
};

// Columns where two rows differ, ascending.
inline std::vector<col_t> difference_set(const HypothesisMatrix& H, row_t h1, row_t h2) {
    H.check_row(h1);
    H.check_row(h2);
    std::vector<col_t> diff;
    if (h1 == h2) return diff;
    const auto a = H.row(h1);
    const auto b = H.row(h2);
    for (col_t c = 0; c < H.cols(); ++c)
        if (a[c] != b[c]) diff.push_back(c);
    return diff;
}

// P(D(h1, h2)) without materializing the difference set.
inline double disagreement_mass(const HypothesisMatrix& H, const ExampleDistribution& P, row_t h1, row_t h2) {
    const auto a = H.row(h1);
    const auto b = H.row(h2);
    double s = 0.0;
    for (col_t c = 0; c < H.cols(); ++c)
        if (a[c] != b[c]) s += P(c);
    return s;
}

// Sparse distribution over columns, ascending by column. The order fixes the
// cumulative sums used by sample_column.
using ColumnDistribution = std::vector<std::pair<col_t, double>>;

inline ColumnDistribution conditional_distribution(const ExampleDistribution& P, std::span<const col_t> diff) {
    if (diff.empty())
        throw std::invalid_argument("conditional distribution over an empty difference set");
    const double total = P.mass(diff);
    ColumnDistribution out;
    out.reserve(diff.size());
    for (col_t c : diff) out.emplace_back(c, P(c) / total);
    std::sort(out.begin(), out.end());
    return out;
}

inline ConsistentSet eliminate(const ConsistentSet& S, const HypothesisMatrix& H, const CounterExample& cx) {
    H.check_col(cx.column);
    std::vector<row_t> kept;
    kept.reserve(S.size());
    for (row_t r : S)
        if (H(r, cx.column) == cx.target_value) kept.push_back(r);
    return ConsistentSet(std::move(kept));
}

// Inverse-CDF draw; cumulative order is ascending column index. Falls back to
// the last entry when rounding leaves u just above the accumulated total.
inline col_t sample_column(const ColumnDistribution& dist, RngStream& rng) {
    if (dist.empty()) throw std::invalid_argument("cannot sample from an empty distribution");
    const double u = rng.uniform01();
    double acc = 0.0;
    for (const auto& [c, p] : dist) {
        acc += p;
        if (u < acc) return c;
    }
    return dist.back().first;
}

} // namespace lrc
