#pragma once

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "advshare/linalg.hpp"

namespace advshare {

// <(a|b),(c|d)>_s = <a,d> - <c,b>
inline Fq symplectic_ip(const Field& F, std::span<const Fq> u, std::span<const Fq> v) {
    if (u.size() != v.size() || u.size() % 2 != 0)
        throw Error("AmbientMismatch", "symplectic product needs equal even lengths");
    const std::size_t n = u.size() / 2;
    Fq acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = F.add(acc, F.mul(u[i], v[n + i]));
        acc = F.sub(acc, F.mul(v[i], u[n + i]));
    }
    return acc;
}

// (a|b) -> (b|-a). Euclidean product against twisted vectors realizes the
// symplectic product, so duals reduce to kernel computations.
inline Vec twist(const Field& F, std::span<const Fq> v) {
    const std::size_t n = v.size() / 2;
    Vec out(v.size());
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = v[n + i];
        out[n + i] = F.neg(v[i]);
    }
    return out;
}

inline Subspace symplectic_dual(const Subspace& C) {
    if (C.ambient % 2 != 0) throw Error("AmbientMismatch", "symplectic dual needs even ambient");
    const Field& F = *C.f;
    MatrixFq twisted(F, 0, C.ambient);
    for (std::size_t r = 0; r < C.dim(); ++r) twisted.append_row(twist(F, C.basis.row(r)));
    auto sol = solve(twisted, Vec(twisted.rows, 0));
    return Subspace::span(F, C.ambient, Support::pair, sol->kernel);
}

// Number of share positions i with (a_i, b_i) != (0, 0).
inline std::size_t swt(std::span<const Fq> v) {
    const std::size_t n = v.size() / 2;
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] != 0 || v[n + i] != 0) ++w;
    return w;
}

// min swt over V1 \ V2 by exhaustive enumeration; requires V2 ⊆ V1, V1 != V2.
inline std::size_t coset_distance(const Subspace& V1, const Subspace& V2) {
    if (!V1.contains_subspace(V2)) throw Error("NotASubspace", "coset distance needs V2 inside V1");
    if (V1.dim() == V2.dim()) throw Error("NotASubspace", "coset distance needs V1 != V2");
    detail::check_enumerable(V1.f->q(), V1.dim(), "coset_distance");
    std::size_t best = V1.ambient + 1;
    detail::for_each_element(V1, [&](const Vec& v) {
        if (is_zero_vec(v)) return;
        const std::size_t w = swt(v);
        if (w < best && !V2.contains(v)) best = w;
    });
    return best;
}

// Validated chain C_S ⊆ C_R ⊆ C_max = C_max^⊥s with dims (n-k-s, n-s, n).
struct CodeTriple {
    const Field* f = nullptr;
    std::size_t n = 0;
    int k = 0, s = 0;
    Subspace C_S, C_R, C_max;
};

inline CodeTriple validate_triple(const Subspace& C_S, const Subspace& C_R, const Subspace& C_max,
                                  std::size_t n, int k, int s) {
    std::vector<std::string> dim_bad, incl_bad, dual_bad;
    if (k < 1) dim_bad.push_back("k must be >= 1");
    if (s < 0) dim_bad.push_back("s must be >= 0");
    if (static_cast<int>(n) - k - s < 0) dim_bad.push_back("n - k - s must be >= 0");
    for (const Subspace* sp : {&C_S, &C_R, &C_max})
        if (sp->ambient != 2 * n || sp->kind != Support::pair)
            dim_bad.push_back("spaces must be symplectic over F_q^{2n}");
    if (dim_bad.empty()) {
        if (C_S.dim() != n - static_cast<std::size_t>(k + s))
            dim_bad.push_back("dim C_S = " + std::to_string(C_S.dim()) + ", expected n-k-s");
        if (C_R.dim() != n - static_cast<std::size_t>(s))
            dim_bad.push_back("dim C_R = " + std::to_string(C_R.dim()) + ", expected n-s");
        if (C_max.dim() != n) dim_bad.push_back("dim C_max = " + std::to_string(C_max.dim()) + ", expected n");
        if (!C_R.contains_subspace(C_S)) incl_bad.push_back("C_S not inside C_R");
        if (!C_max.contains_subspace(C_R)) incl_bad.push_back("C_R not inside C_max");
        const Subspace mdual = symplectic_dual(C_max);
        if (!(mdual == C_max)) dual_bad.push_back("C_max != C_max^perp_s");
        const Subspace rdual = symplectic_dual(C_R);
        if (!rdual.contains_subspace(C_max)) incl_bad.push_back("C_max not inside C_R^perp_s");
        const Subspace sdual = symplectic_dual(C_S);
        if (!sdual.contains_subspace(rdual)) incl_bad.push_back("C_R^perp_s not inside C_S^perp_s");
    }
    if (!dim_bad.empty() || !incl_bad.empty() || !dual_bad.empty()) {
        std::string all;
        for (const auto* list : {&dim_bad, &incl_bad, &dual_bad})
            for (const std::string& m : *list) all += (all.empty() ? "" : "; ") + m;
        const std::string name = !dim_bad.empty()   ? "DimensionMismatch"
                                 : !incl_bad.empty() ? "InclusionViolated"
                                                     : "NotSelfDual";
        throw Error(name, all);
    }
    return CodeTriple{C_S.f, n, k, s, C_S, C_R, C_max};
}

// Remark-2 criterion: encoding is deterministic iff C_R = C_max (= C_R^⊥s).
inline bool is_deterministic(const CodeTriple& t) { return t.s == 0 && t.C_R == t.C_max; }

// Greedy completion of a self-orthogonal C to a self-dual C_max of dimension n.
// Every vector is symplectically self-orthogonal (the form is alternating), so
// adjoining any member of C^⊥s \ C keeps the chain isotropic. Candidates are
// the RREF basis rows of the current C^⊥s in order; with prefer_css, rows of
// shape (a|0) are tried before (0|b) before mixed, which keeps CSS inputs CSS.
inline Subspace witt_complete(const Subspace& C_R, bool prefer_css = true) {
    const Field& F = *C_R.f;
    if (C_R.ambient % 2 != 0) throw Error("AmbientMismatch", "even ambient required");
    const std::size_t n = C_R.ambient / 2;
    Subspace C = C_R;
    {
        const Subspace d = symplectic_dual(C);
        if (!d.contains_subspace(C)) throw Error("NotSelfOrthogonal", "input not inside its symplectic dual");
    }
    while (C.dim() < n) {
        const Subspace D = symplectic_dual(C);
        auto row_shape = [&](std::size_t r) -> int {
            bool a_zero = true, b_zero = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (D.basis.at(r, c) != 0) a_zero = false;
                if (D.basis.at(r, n + c) != 0) b_zero = false;
            }
            if (b_zero) return 0;  // (a|0)
            if (a_zero) return 1;  // (0|b)
            return 2;
        };
        bool advanced = false;
        for (int pass = prefer_css ? 0 : 2; pass <= 2 && !advanced; ++pass) {
            for (std::size_t r = 0; r < D.dim() && !advanced; ++r) {
                if (prefer_css && row_shape(r) != pass) continue;
                if (C.contains(D.basis.row(r))) continue;
                MatrixFq M = C.basis;
                M.append_row(D.basis.row(r));
                C = Subspace::span(F, C.ambient, Support::pair, std::move(M));
                advanced = true;
            }
        }
        if (!advanced) throw Error("InternalError", "completion stalled");  // unreachable
    }
    return C;
}

}  // namespace advshare
