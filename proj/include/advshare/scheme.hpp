#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "advshare/symplectic.hpp"

namespace advshare {

// Share subsets are held 0-indexed, sorted, duplicate-free. File and CLI
// surfaces use 1-indexed labels.
using ShareSet = std::vector<int>;

inline ShareSet normalize_shares(ShareSet s, std::size_t n) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s)
        if (i < 0 || static_cast<std::size_t>(i) >= n) throw Error("IndexOutOfRange", "share index outside 1..n");
    return s;
}

inline ShareSet complement_shares(const ShareSet& s, std::size_t n) {
    ShareSet out;
    std::size_t j = 0;
    for (int i = 0; i < static_cast<int>(n); ++i) {
        if (j < s.size() && s[j] == i) {
            ++j;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

// dim(C_R ∩ F_q^A) - dim(C_S ∩ F_q^A): how many secret symbols A learns.
inline std::size_t leakage_dim(const CodeTriple& t, const ShareSet& A) {
    const Subspace r = restrict_support(t.C_R, A);
    const Subspace s = restrict_support(t.C_S, A);
    return quotient_dim(r, s);
}

enum class AccessClass { forbidden, intermediate, qualified };

struct Classification {
    AccessClass cls;
    std::size_t leakage;
};

// Forbidden iff leakage 0; qualified defined as full leakage k (certified
// against the simulator oracle on every fixture).
inline Classification classify(const CodeTriple& t, const ShareSet& A) {
    const std::size_t l = leakage_dim(t, A);
    if (l == 0) return {AccessClass::forbidden, 0};
    if (l == static_cast<std::size_t>(t.k)) return {AccessClass::qualified, l};
    return {AccessClass::intermediate, l};
}

// Exact criterion: B is advance-shareable iff
//   dim(C_S^⊥s ∩ F_q^B̄ / C_max ∩ F_q^B̄) = dim(C_S^⊥s / C_max) = k + s.
inline bool is_advance_shareable(const CodeTriple& t, const ShareSet& B) {
    const ShareSet Bbar = complement_shares(B, t.n);
    const Subspace sdual = symplectic_dual(t.C_S);
    const std::size_t lhs =
        restrict_support(sdual, Bbar).dim() - restrict_support(t.C_max, Bbar).dim();
    return lhs == static_cast<std::size_t>(t.k + t.s);
}

// Weight-based sufficient condition: |B| <= d_s(C_max, C_S) - 1 implies
// advance-shareable; the converse is not claimed.
inline bool advance_sufficient(const CodeTriple& t, const ShareSet& B) {
    return B.size() + 1 <= coset_distance(t.C_max, t.C_S);
}

// The scheme: a validated triple, the advance set B, canonical transversals
// realizing the secret isomorphism f and the randomness coset choice, and the
// matrix H whose kernel condition z H^T = label H^T is the advance-solving
// linear system.
struct Scheme {
    CodeTriple triple;
    ShareSet B;
    std::vector<Vec> secret_gens;  // g_1..g_k: coset basis of C_S^⊥s / C_R^⊥s
    std::vector<Vec> rand_gens;    // h_1..h_s: coset basis of C_R^⊥s / C_max
    MatrixFq H;                    // n x 2n, row i = (d_i | -c_i) over RREF(C_max)
    Subspace cs_dual, cr_dual;
};

inline Scheme build_scheme(const CodeTriple& t, ShareSet B) {
    const Field& F = *t.f;
    Scheme sch;
    sch.triple = t;
    sch.B = normalize_shares(std::move(B), t.n);
    sch.cs_dual = symplectic_dual(t.C_S);
    sch.cr_dual = symplectic_dual(t.C_R);
    sch.secret_gens = transversal(sch.cs_dual, sch.cr_dual);
    sch.rand_gens = transversal(sch.cr_dual, t.C_max);
    if (sch.secret_gens.size() != static_cast<std::size_t>(t.k) ||
        sch.rand_gens.size() != static_cast<std::size_t>(t.s))
        throw Error("DimensionMismatch", "transversal sizes disagree with (k, s)");

    sch.H = MatrixFq(F, t.n, 2 * t.n);
    for (std::size_t r = 0; r < t.n; ++r) {
        const Vec row = twist(F, t.C_max.basis.row(r));
        for (std::size_t c = 0; c < 2 * t.n; ++c) sch.H.at(r, c) = row[c];
    }
    // rank H = n and C_max · H^T = 0 both follow from self-duality; checked
    // here so a corrupt triple fails loudly at build time.
    if (rref(sch.H).second != t.n) throw Error("DimensionMismatch", "H is not full rank");
    for (std::size_t r = 0; r < t.n; ++r)
        for (std::size_t r2 = r; r2 < t.n; ++r2)
            if (symplectic_ip(F, t.C_max.basis.row(r), t.C_max.basis.row(r2)) != 0)
                throw Error("NotSelfDual", "C_max basis is not self-orthogonal");
    return sch;
}

struct EncodingLabel {
    Vec vec;      // element of C_S^⊥s
    Vec secret;   // m in F_q^k
    Vec rand;     // r in F_q^s, the uniform coset choice
};

inline EncodingLabel encode_label(const Scheme& sch, const Vec& m, const Vec& r) {
    const Field& F = *sch.triple.f;
    if (m.size() != static_cast<std::size_t>(sch.triple.k) ||
        r.size() != static_cast<std::size_t>(sch.triple.s))
        throw Error("LengthMismatch", "secret or randomness length mismatch");
    Vec v(2 * sch.triple.n, 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        v = vec_add(F, std::move(v), vec_scale(F, m[i], sch.secret_gens[i]));
    for (std::size_t j = 0; j < r.size(); ++j)
        v = vec_add(F, std::move(v), vec_scale(F, r[j], sch.rand_gens[j]));
    return EncodingLabel{std::move(v), m, r};
}

// Recover the (m, r) coordinates of an arbitrary element of C_S^⊥s and check
// membership of its C_max-coset against the transversal parametrization.
inline EncodingLabel label_from_vector(const Scheme& sch, const Vec& v) {
    const Field& F = *sch.triple.f;
    if (v.size() != 2 * sch.triple.n) throw Error("LengthMismatch", "vector length must be 2n");
    if (!sch.cs_dual.contains(v)) throw Error("NotASubspace", "vector outside C_S^perp_s");
    // Columns: secret gens, randomness gens, C_max basis; solve for v.
    const std::size_t cols = sch.secret_gens.size() + sch.rand_gens.size() + sch.triple.C_max.dim();
    MatrixFq A(F, 2 * sch.triple.n, cols);
    std::size_t c = 0;
    for (const Vec& g : sch.secret_gens) {
        for (std::size_t rr = 0; rr < 2 * sch.triple.n; ++rr) A.at(rr, c) = g[rr];
        ++c;
    }
    for (const Vec& h : sch.rand_gens) {
        for (std::size_t rr = 0; rr < 2 * sch.triple.n; ++rr) A.at(rr, c) = h[rr];
        ++c;
    }
    for (std::size_t b = 0; b < sch.triple.C_max.dim(); ++b) {
        for (std::size_t rr = 0; rr < 2 * sch.triple.n; ++rr) A.at(rr, c) = sch.triple.C_max.basis.at(b, rr);
        ++c;
    }
    auto sol = solve(A, v);
    if (!sol) throw Error("NotASubspace", "vector is not spanned by the transversals and C_max");
    EncodingLabel lab;
    lab.vec = v;
    lab.secret.assign(sol->particular.begin(), sol->particular.begin() + sch.secret_gens.size());
    lab.rand.assign(sol->particular.begin() + sch.secret_gens.size(),
                    sol->particular.begin() + sch.secret_gens.size() + sch.rand_gens.size());
    return lab;
}

// Solve ([a|b] - [0,x|0,y]) H^T = 0 for a representative supported on B̄:
// unknowns are the coordinate pairs B̄ owns, free variables pinned to zero.
inline std::optional<Vec> try_advance_rep(const Scheme& sch, const EncodingLabel& label) {
    const Field& F = *sch.triple.f;
    const std::size_t n = sch.triple.n;
    const ShareSet Bbar = complement_shares(sch.B, n);
    const std::vector<std::size_t> cols = owned_columns(Support::pair, 2 * n, Bbar);

    MatrixFq A(F, n, cols.size());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) A.at(r, c) = sch.H.at(r, cols[c]);
    Vec b(n, 0);
    for (std::size_t r = 0; r < n; ++r) b[r] = dot(F, sch.H.row(r), label.vec);

    auto sol = solve(A, b);
    if (!sol) return std::nullopt;
    Vec z(2 * n, 0);
    for (std::size_t c = 0; c < cols.size(); ++c) z[cols[c]] = sol->particular[c];

    // Contract checks: same C_max-coset, inside C_S^⊥s, supported on B̄.
    Vec diff = label.vec;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = F.sub(diff[i], z[i]);
    if (!sch.triple.C_max.contains(diff) || !sch.cs_dual.contains(z))
        throw Error("InternalError", "advance representative failed its coset checks");
    return z;
}

inline Vec advance_rep(const Scheme& sch, const EncodingLabel& label) {
    auto z = try_advance_rep(sch, label);
    if (!z)
        throw Error("NoAdvanceRepresentative",
                    "no representative supported outside B exists for this coset");
    return *z;
}

inline bool coset_equal_mod_cmax(const CodeTriple& t, const Vec& u, const Vec& v) {
    const Field& F = *t.f;
    Vec diff = u;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = F.sub(diff[i], v[i]);
    return t.C_max.contains(diff);
}

// Structured per-subset record backing the classify/advance-check reports.
struct SubsetReport {
    ShareSet subset;
    std::size_t leakage = 0;
    AccessClass cls = AccessClass::forbidden;
    bool advance_shareable = false;
    bool sufficient_bound_holds = false;
};

inline SubsetReport subset_report(const CodeTriple& t, const ShareSet& A) {
    SubsetReport r;
    r.subset = A;
    const Classification c = classify(t, A);
    r.leakage = c.leakage;
    r.cls = c.cls;
    r.advance_shareable = is_advance_shareable(t, A);
    r.sufficient_bound_holds = advance_sufficient(t, A);
    return r;
}

}  // namespace advshare
