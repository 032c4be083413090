#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "advshare/scheme.hpp"

namespace advshare {

// Text formats. Matrices:
//   q <q> rows <r> cols <c>
//   <r lines of c integers>
// Triples: "params <q> <n> <k> <s>" then blocks labeled C_S, C_R, C_MAX.
// Scheme files append an optional 1-indexed advance line "B 1 2".
// Elements print as integers 0..q-1; for q = p^m the integer encodes the
// coefficient vector base p, lowest degree first, over the default modulus.

inline void write_matrix(std::ostream& os, const MatrixFq& M) {
    os << "q " << M.f->q() << " rows " << M.rows << " cols " << M.cols << "\n";
    for (std::size_t r = 0; r < M.rows; ++r) {
        for (std::size_t c = 0; c < M.cols; ++c) os << (c ? " " : "") << M.at(r, c);
        os << "\n";
    }
}

namespace detail {

inline std::string next_token(std::istream& is, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw Error("ParseError", std::string("expected ") + what);
    return tok;
}

inline std::uint64_t next_uint(std::istream& is, const char* what) {
    const std::string tok = next_token(is, what);
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw Error("ParseError", std::string("expected ") + what + ", got '" + tok + "'");
    }
}

inline void expect_keyword(std::istream& is, const std::string& kw) {
    const std::string tok = next_token(is, kw.c_str());
    if (tok != kw) throw Error("ParseError", "expected '" + kw + "', got '" + tok + "'");
}

}  // namespace detail

inline MatrixFq read_matrix(std::istream& is) {
    detail::expect_keyword(is, "q");
    const std::uint64_t q = detail::next_uint(is, "field order");
    detail::expect_keyword(is, "rows");
    const std::uint64_t rows = detail::next_uint(is, "row count");
    detail::expect_keyword(is, "cols");
    const std::uint64_t cols = detail::next_uint(is, "column count");
    const Field& F = field_of_order(static_cast<std::uint32_t>(q));
    MatrixFq M(F, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            const std::uint64_t v = detail::next_uint(is, "matrix entry");
            if (v >= q) throw Error("ParseError", "entry " + std::to_string(v) + " outside 0..q-1");
            M.at(r, c) = static_cast<Fq>(v);
        }
    return M;
}

// "a1 .. an | b1 .. bn"
inline std::string format_sympvec(const Vec& v) {
    const std::size_t n = v.size() / 2;
    std::ostringstream os;
    for (std::size_t i = 0; i < n; ++i) os << v[i] << " ";
    os << "|";
    for (std::size_t i = 0; i < n; ++i) os << " " << v[n + i];
    return os.str();
}

inline Vec parse_sympvec(const std::string& text, const Field& F) {
    std::istringstream is(text);
    std::vector<Fq> a, b;
    std::string tok;
    bool after_bar = false;
    while (is >> tok) {
        if (tok == "|") {
            if (after_bar) throw Error("ParseError", "two '|' separators");
            after_bar = true;
            continue;
        }
        std::uint64_t v = 0;
        try {
            v = std::stoull(tok);
        } catch (const std::exception&) {
            throw Error("ParseError", "bad element '" + tok + "'");
        }
        if (v >= F.q()) throw Error("ParseError", "element outside 0..q-1");
        (after_bar ? b : a).push_back(static_cast<Fq>(v));
    }
    if (!after_bar || a.size() != b.size()) throw Error("ParseError", "need 'a1 .. an | b1 .. bn'");
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline void write_triple(std::ostream& os, const CodeTriple& t) {
    os << "params " << t.f->q() << " " << t.n << " " << t.k << " " << t.s << "\n";
    os << "C_S\n";
    write_matrix(os, t.C_S.basis);
    os << "C_R\n";
    write_matrix(os, t.C_R.basis);
    os << "C_MAX\n";
    write_matrix(os, t.C_max.basis);
}

inline CodeTriple read_triple(std::istream& is) {
    detail::expect_keyword(is, "params");
    const std::uint64_t q = detail::next_uint(is, "q");
    const std::uint64_t n = detail::next_uint(is, "n");
    const std::uint64_t k = detail::next_uint(is, "k");
    const std::uint64_t s = detail::next_uint(is, "s");
    const Field& F = field_of_order(static_cast<std::uint32_t>(q));
    auto block = [&](const char* label) {
        detail::expect_keyword(is, label);
        MatrixFq M = read_matrix(is);
        if (M.cols != 2 * n) throw Error("ParseError", std::string(label) + " must have 2n columns");
        return Subspace::span(F, 2 * n, Support::pair, std::move(M));
    };
    const Subspace cs = block("C_S");
    const Subspace cr = block("C_R");
    const Subspace cmax = block("C_MAX");
    return validate_triple(cs, cr, cmax, n, static_cast<int>(k), static_cast<int>(s));
}

// 1-indexed on disk, 0-indexed in memory.
inline void write_scheme_file(std::ostream& os, const CodeTriple& t, const std::vector<int>& B) {
    write_triple(os, t);
    os << "B";
    for (int i : B) os << " " << i + 1;
    os << "\n";
}

inline std::pair<CodeTriple, std::vector<int>> read_scheme_file(std::istream& is) {
    CodeTriple t = read_triple(is);
    std::vector<int> B;
    std::string tok;
    if (is >> tok) {
        if (tok != "B") throw Error("ParseError", "expected 'B' line, got '" + tok + "'");
        std::uint64_t v = 0;
        while (is >> v) {
            if (v < 1 || v > t.n) throw Error("ParseError", "share index outside 1..n");
            B.push_back(static_cast<int>(v) - 1);
        }
    }
    return {std::move(t), std::move(B)};
}

inline void write_classical_file(std::ostream& os, const Subspace& C1, const Subspace& C2) {
    os << "C1\n";
    write_matrix(os, C1.basis);
    os << "C2\n";
    write_matrix(os, C2.basis);
}

inline std::pair<Subspace, Subspace> read_classical_file(std::istream& is) {
    detail::expect_keyword(is, "C1");
    MatrixFq m1 = read_matrix(is);
    const Field& F = *m1.f;
    const std::size_t n = m1.cols;
    detail::expect_keyword(is, "C2");
    MatrixFq m2 = read_matrix(is);
    if (m2.cols != n || m2.f->q() != F.q()) throw Error("ParseError", "C1/C2 shapes disagree");
    return {Subspace::span(F, n, Support::coordinate, std::move(m1)),
            Subspace::span(F, n, Support::coordinate, std::move(m2))};
}

// CLI subset syntax: comma-separated 1-indexed share labels, e.g. "1,2".
inline std::vector<int> parse_share_list(const std::string& text, std::size_t n) {
    std::vector<int> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (cur.empty()) continue;
        std::uint64_t v = 0;
        try {
            v = std::stoull(cur);
        } catch (const std::exception&) {
            throw Error("ParseError", "bad share index '" + cur + "'");
        }
        if (v < 1 || v > n) throw Error("ParseError", "share index outside 1..n");
        out.push_back(static_cast<int>(v) - 1);
    }
    return normalize_shares(out, n);
}

inline std::string format_share_list(const std::vector<int>& shares) {
    std::string out;
    for (int i : shares) out += (out.empty() ? "" : ",") + std::to_string(i + 1);
    return out.empty() ? "-" : out;
}

inline Vec parse_element_list(const std::string& text, const Field& F) {
    Vec out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        if (cur.empty()) continue;
        std::uint64_t v = 0;
        try {
            v = std::stoull(cur);
        } catch (const std::exception&) {
            throw Error("ParseError", "bad field element '" + cur + "'");
        }
        if (v >= F.q()) throw Error("ParseError", "element outside 0..q-1");
        out.push_back(static_cast<Fq>(v));
    }
    return out;
}

}  // namespace advshare
