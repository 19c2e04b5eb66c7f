// io.hpp
//
// Plain-text formats: matrices as comma-separated integer grids (one row per
// line), distributions as a single comma-separated line of reals, and flat
// "key = value" files for configs and dataset metadata.
#pragma once
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "concept.hpp"

namespace lrc {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shortest decimal that round-trips to the same double.
inline std::string format_real(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("cannot format real");
    return std::string(buf, p);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline double parse_real(std::string_view s) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw FormatError("not a real number: '" + std::string(s) + "'");
    return v;
}

inline std::int64_t parse_integer(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        throw FormatError("not an integer: '" + std::string(s) + "'");
    return v;
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
    return in;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    return out;
}

} // namespace detail

inline HypothesisMatrix read_matrix(std::istream& in) {
    std::vector<value_t> values;
    std::size_t rows = 0, cols = 0;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto cells = detail::split_commas(t);
        if (rows == 0) cols = cells.size();
        else if (cells.size() != cols)
            throw FormatError("row " + std::to_string(rows) + " has " + std::to_string(cells.size()) +
                              " values, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const std::int64_t v = detail::parse_integer(cells[c]);
            if (v < 0) throw FormatError(Violation{Violation::Kind::negative_value, rows, c}.describe());
            if (v > std::int64_t{UINT32_MAX}) throw FormatError("value exceeds 2^32-1: " + std::to_string(v));
            values.push_back(static_cast<value_t>(v));
        }
        ++rows;
    }
    if (rows == 0) throw FormatError("matrix file is empty");
    return HypothesisMatrix(rows, cols, std::move(values));
}

inline HypothesisMatrix read_matrix(const std::string& path) {
    auto in = detail::open_in(path);
    return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const HypothesisMatrix& H) {
    std::string line;
    for (row_t r = 0; r < H.rows(); ++r) {
        line.clear();
        const auto row = H.row(r);
        for (col_t c = 0; c < H.cols(); ++c) {
            if (c) line.push_back(',');
            line += std::to_string(row[c]);
        }
        line.push_back('\n');
        out << line;
    }
}

inline void write_matrix(const std::string& path, const HypothesisMatrix& H) {
    auto out = detail::open_out(path);
    write_matrix(out, H);
}

// First non-empty, non-comment line of reals.
inline std::vector<double> read_reals(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::vector<double> out;
        for (auto cell : detail::split_commas(t)) out.push_back(detail::parse_real(cell));
        return out;
    }
    throw FormatError("distribution file is empty");
}

inline std::vector<double> read_reals(const std::string& path) {
    auto in = detail::open_in(path);
    return read_reals(in);
}

inline void write_reals(std::ostream& out, const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << format_real(v[i]);
    out << '\n';
}

// Flat "key = value" records; '#' starts a comment line. Keys are kept sorted.
using KeyValues = std::map<std::string, std::string>;

inline KeyValues read_key_values(std::istream& in) {
    KeyValues kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos)
            throw FormatError("line " + std::to_string(lineno) + ": expected key = value");
        const auto key = detail::trim(t.substr(0, eq));
        if (key.empty()) throw FormatError("line " + std::to_string(lineno) + ": empty key");
        kv[std::string(key)] = std::string(detail::trim(t.substr(eq + 1)));
    }
    return kv;
}

inline KeyValues read_key_values(const std::string& path) {
    auto in = detail::open_in(path);
    return read_key_values(in);
}

inline void write_key_values(std::ostream& out, const KeyValues& kv) {
    for (const auto& [k, v] : kv) out << k << " = " << v << '\n';
}

inline void write_key_values(const std::string& path, const KeyValues& kv) {
    auto out = detail::open_out(path);
    write_key_values(out, kv);
}

} // namespace lrc
