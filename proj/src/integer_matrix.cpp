// Copyright 2026 The apsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "apsolve/integer_matrix.hpp"

#include <cctype>
#include <sstream>

#include "apsolve/error.hpp"

namespace apsolve {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::parse: return "parse-error";
        case ErrorKind::not_null_diagonal: return "not-null-diagonal";
        case ErrorKind::volume_not_odd: return "volume-not-odd";
        case ErrorKind::ap_too_short: return "ap-too-short";
        case ErrorKind::beyond_bound: return "beyond-bound";
        case ErrorKind::not_applicable: return "not-applicable";
        case ErrorKind::not_progression_solution: return "not-progression-solution";
        case ErrorKind::constant_vector: return "constant-vector";
        case ErrorKind::invariant_violation: return "invariant-violation";
    }
    return "unknown";
}

IntegerMatrix::IntegerMatrix(std::vector<IntegerVector> rows) {
    if (rows.empty() || rows.front().empty())
        throw Error(ErrorKind::invalid_argument, "matrix must have at least one row and one column");
    rows_ = rows.size();
    cols_ = rows.front().size();
    entries_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::invalid_argument, "matrix rows have different lengths");
        for (auto& e : r) entries_.push_back(std::move(e));
    }
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntegerMatrix([&] {
          std::vector<IntegerVector> out;
          for (const auto& r : rows) {
              IntegerVector v;
              for (long e : r) v.emplace_back(e);
              out.push_back(std::move(v));
          }
          return out;
      }()) {}

IntegerVector IntegerMatrix::apply(std::span<const Integer> x) const {
    if (x.size() != cols_)
        throw Error(ErrorKind::invalid_argument, "vector length does not match column count");
    IntegerVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * x[j];
        out[i] = std::move(acc);
    }
    return out;
}

IntegerVector IntegerMatrix::apply(std::span<const std::int64_t> x) const {
    IntegerVector big;
    big.reserve(x.size());
    for (std::int64_t v : x) big.emplace_back(static_cast<long>(v));
    return apply(std::span<const Integer>(big));
}

std::vector<IntegerVector> IntegerMatrix::to_rows() const {
    std::vector<IntegerVector> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
}

namespace {

Integer parse_integer(const std::string& token, std::size_t line) {
    std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    bool ok = token.size() > start;
    for (std::size_t i = start; ok && i < token.size(); ++i)
        ok = std::isdigit(static_cast<unsigned char>(token[i])) != 0;
    if (!ok)
        throw Error(ErrorKind::parse, "line " + std::to_string(line) + ": not an integer: '" + token + "'");
    Integer v;
    v.set_str(token[0] == '+' ? token.substr(1) : token, 10);
    return v;
}

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

IntegerMatrix parse_matrix(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::size_t m = 0, n = 0;
    bool have_header = false;
    std::vector<IntegerVector> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string t; ls >> t;) tokens.push_back(t);
        if (!have_header) {
            if (tokens.size() != 2)
                throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected header 'm n'");
            Integer rm = parse_integer(tokens[0], lineno), rn = parse_integer(tokens[1], lineno);
            if (rm < 1 || rn < 1 || !rm.fits_slong_p() || !rn.fits_slong_p() || rm > 1000000 || rn > 1000000)
                throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": dimensions must be positive");
            m = rm.get_si();
            n = rn.get_si();
            have_header = true;
            continue;
        }
        if (rows.size() == m)
            throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": more than " + std::to_string(m) + " rows");
        if (tokens.size() != n)
            throw Error(ErrorKind::parse, "line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                                              " entries, found " + std::to_string(tokens.size()));
        IntegerVector row;
        row.reserve(n);
        for (const auto& t : tokens) row.push_back(parse_integer(t, lineno));
        rows.push_back(std::move(row));
    }
    if (!have_header) throw Error(ErrorKind::parse, "empty matrix file");
    if (rows.size() != m)
        throw Error(ErrorKind::parse, "expected " + std::to_string(m) + " rows, found " + std::to_string(rows.size()));
    return IntegerMatrix(std::move(rows));
}

IntegerMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

IntegerMatrix parse_matrix_literal(const std::string& literal) {
    std::vector<IntegerVector> rows;
    std::size_t pos = 0;
    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::parse, "matrix literal, offset " + std::to_string(pos) + ": " + why);
    };
    auto skip_ws = [&] {
        while (pos < literal.size() && std::isspace(static_cast<unsigned char>(literal[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= literal.size() || literal[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    };
    expect('[');
    for (;;) {
        expect('[');
        IntegerVector row;
        for (;;) {
            skip_ws();
            std::size_t start = pos;
            if (pos < literal.size() && (literal[pos] == '-' || literal[pos] == '+')) ++pos;
            while (pos < literal.size() && std::isdigit(static_cast<unsigned char>(literal[pos]))) ++pos;
            row.push_back(parse_integer(literal.substr(start, pos - start), 1));
            skip_ws();
            if (pos < literal.size() && literal[pos] == ',') { ++pos; continue; }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip_ws();
        if (pos < literal.size() && literal[pos] == ',') { ++pos; continue; }
        break;
    }
    expect(']');
    skip_ws();
    if (pos != literal.size()) fail("trailing characters");
    try {
        return IntegerMatrix(std::move(rows));
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

std::string format_matrix(const IntegerMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).get_str();
        out << '\n';
    }
    return out.str();
}

}  // namespace apsolve
