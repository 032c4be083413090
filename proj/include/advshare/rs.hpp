#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "advshare/scheme.hpp"

namespace advshare {

// Evaluations of all polynomials of degree < k at the given distinct points.
inline Subspace rs_code(const Field& F, std::size_t n, std::size_t k, const std::vector<Fq>& points) {
    if (points.size() != n) throw Error("AmbientMismatch", "need n evaluation points");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw Error("DuplicatePoints", "evaluation points must be distinct");
    if (k > n) throw Error("DimensionMismatch", "k must be <= n");
    MatrixFq G(F, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) G.at(r, c) = F.pow_u(points[c], r);
    return Subspace::span(F, n, Support::coordinate, std::move(G));
}

// Canonical point set: all of F_q in integer order (the construction needs
// n = q, so only the order is a convention).
inline std::vector<Fq> all_points(const Field& F) {
    std::vector<Fq> pts(F.q());
    for (Fq i = 0; i < F.q(); ++i) pts[i] = i;
    return pts;
}

inline Subspace rs_code(const Field& F, std::size_t k) { return rs_code(F, F.q(), k, all_points(F)); }

// {(a|b) : a in Cx, b in Cz} as a symplectic subspace of F_q^{2n}.
inline Subspace css_pair_space(const Subspace& Cx, const Subspace& Cz) {
    if (Cx.ambient != Cz.ambient) throw Error("AmbientMismatch", "halves live in different ambients");
    const Field& F = *Cx.f;
    const std::size_t n = Cx.ambient;
    MatrixFq M(F, 0, 2 * n);
    Vec row(2 * n, 0);
    for (std::size_t r = 0; r < Cx.dim(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t c = 0; c < n; ++c) row[c] = Cx.basis.at(r, c);
        M.append_row(row);
    }
    for (std::size_t r = 0; r < Cz.dim(); ++r) {
        std::fill(row.begin(), row.end(), 0);
        for (std::size_t c = 0; c < n; ++c) row[n + c] = Cz.basis.at(r, c);
        M.append_row(row);
    }
    return Subspace::span(F, 2 * n, Support::pair, std::move(M));
}

struct RsParams {
    std::uint32_t q = 0;  // n = q
    int k = 0, s = 0;
};

inline void check_rs_params(const RsParams& p) {
    const int n = static_cast<int>(p.q);
    if (p.k < 1 || p.k % 2 != 0) throw Error("DimensionMismatch", "k must be a positive even integer");
    if (n - p.s < 1 || (n - p.s) % 2 != 0)
        throw Error("DimensionMismatch", "n - s must be a positive even integer");
    if (n - p.k - p.s < 0) throw Error("DimensionMismatch", "n - k - s must be >= 0");
}

// C_S, C_R from the nested RS codes on both halves, and the self-dual
//   C_max = {(a|b) : a in RS(n, floor(n/2)), b in RS(n, ceil(n/2))}.
inline CodeTriple build_rs_scheme(const RsParams& p) {
    check_rs_params(p);
    const Field& F = field_of_order(p.q);
    const std::size_t n = p.q;
    const Subspace cs_half = rs_code(F, (n - p.k - p.s) / 2);
    const Subspace cr_half = rs_code(F, (n - p.s) / 2);
    const Subspace C_S = css_pair_space(cs_half, cs_half);
    const Subspace C_R = css_pair_space(cr_half, cr_half);
    const Subspace C_max = css_pair_space(rs_code(F, n / 2), rs_code(F, (n + 1) / 2));
    return validate_triple(C_S, C_R, C_max, n, p.k, p.s);
}

// Size thresholds in shares. forbidden_max / advance_max are the largest sizes
// claimed forbidden / advance-shareable; qualified_min the smallest qualified.
struct Thresholds {
    int forbidden_max = 0;
    int qualified_min = 0;
    int advance_max = 0;
};

inline Thresholds rs_thresholds(int n, int k, int s) {
    return Thresholds{(n + s) / 2, (n + k + s) / 2, (n + 1) / 2};
}

inline Thresholds shamir_thresholds(int n, int k, int s) {
    return Thresholds{(n + s - k) / 2, (n + k + s) / 2, (n + s - k) / 2};
}

// Matched ramp-Shamir baseline: C1 = RS(n, (n+k+s)/2), C2 = RS(n, (n+s-k)/2),
// so the qualified sets coincide with the quantum construction.
inline std::pair<Subspace, Subspace> ramp_shamir_codes(const Field& F, int n, int k, int s) {
    const std::vector<Fq> pts = all_points(F);
    if (static_cast<std::size_t>(n) > pts.size())
        throw Error("DimensionMismatch", "ramp Shamir needs n <= q");
    std::vector<Fq> use(pts.begin(), pts.begin() + n);
    return {rs_code(F, n, (n + k + s) / 2, use), rs_code(F, n, (n + s - k) / 2, use)};
}

struct Table1Cell {
    std::string symbolic;
    std::string numeric;
};

struct Table1Row {
    std::string label;
    Table1Cell quantum, classical;
};

struct Table1 {
    int n = 0, k = 0, s = 0;
    std::vector<Table1Row> rows;
    bool advance_advantage = false;  // true exactly when s < k
};

inline Table1 table1(std::uint32_t q, int k, int s) {
    check_rs_params(RsParams{q, k, s});
    const int n = static_cast<int>(q);
    const Thresholds rs = rs_thresholds(n, k, s);
    const Thresholds sh = shamir_thresholds(n, k, s);
    const double log2q = std::log2(static_cast<double>(q));
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%g", v);
        return std::string(buf);
    };
    Table1 t;
    t.n = n;
    t.k = k;
    t.s = s;
    t.rows = {
        {"secret size",
         {"k*log2(q) bits", num(k * log2q) + " bits"},
         {"k*log2(q) bits", num(k * log2q) + " bits"}},
        {"share size",
         {"log2(q) qubits", num(log2q) + " qubits"},
         {"log2(q) bits", num(log2q) + " bits"}},
        {"qualified sets",
         {"(n+k+s)/2 <= |A| <= n", std::to_string(rs.qualified_min) + " <= |A| <= " + std::to_string(n)},
         {"(n+k+s)/2 <= |A| <= n", std::to_string(sh.qualified_min) + " <= |A| <= " + std::to_string(n)}},
        {"forbidden sets",
         {"0 <= |A| <= (n+s)/2", "0 <= |A| <= " + std::to_string(rs.forbidden_max)},
         {"0 <= |A| <= (n+s-k)/2", "0 <= |A| <= " + std::to_string(sh.forbidden_max)}},
        {"advance-shareable sets",
         {"0 <= |A| <= ceil(n/2)", "0 <= |A| <= " + std::to_string(rs.advance_max)},
         {"0 <= |A| <= (n+s-k)/2", "0 <= |A| <= " + std::to_string(sh.advance_max)}},
    };
    t.advance_advantage = s < k;
    return t;
}

}  // namespace advshare
