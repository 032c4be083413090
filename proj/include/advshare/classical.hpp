#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "advshare/linalg.hpp"

namespace advshare {

using Rational = boost::multiprecision::cpp_rational;

// Classical linear scheme: nested codes C2 ⊆ C1, secret space C1/C2 realized
// by the canonical transversal. A share vector is drawn uniformly from the
// secret's coset.
struct ClassicalScheme {
    Subspace C1, C2;
    std::vector<Vec> secret_gens;
    int k = 0;
};

inline ClassicalScheme build_classical_scheme(const Subspace& C1, const Subspace& C2) {
    if (!C1.contains_subspace(C2)) throw Error("NotASubspace", "C2 must be a subcode of C1");
    ClassicalScheme s;
    s.C1 = C1;
    s.C2 = C2;
    s.secret_gens = transversal(C1, C2);
    s.k = static_cast<int>(C1.dim() - C2.dim());
    return s;
}

// c = sum m_i g_i + sum r_j b_j with b_j the RREF basis of C2; uniform r gives
// the uniform coset draw.
inline Vec classical_encode(const ClassicalScheme& sch, const Vec& m, const Vec& r) {
    const Field& F = *sch.C1.f;
    if (m.size() != static_cast<std::size_t>(sch.k) || r.size() != sch.C2.dim())
        throw Error("LengthMismatch", "secret or randomness length mismatch");
    Vec c(sch.C1.ambient, 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        c = vec_add(F, std::move(c), vec_scale(F, m[i], sch.secret_gens[i]));
    for (std::size_t j = 0; j < r.size(); ++j)
        c = vec_add(F, std::move(c), vec_scale(F, r[j], sch.C2.basis.row(j)));
    return c;
}

inline bool forbidden_classical(const ClassicalScheme& sch, const std::vector<int>& A) {
    return project(sch.C1, A) == project(sch.C2, A);
}

// Direct feasibility test, independent of forbidden_classical: every value of
// P_A over C1 must be reachable inside every secret coset.
inline bool advance_shareable_classical(const ClassicalScheme& sch, const std::vector<int>& A) {
    const Field& F = *sch.C1.f;
    detail::check_enumerable(F.q(), sch.C1.dim(), "advance_shareable_classical");
    auto project_to = [&](const Vec& c) {
        Vec p;
        p.reserve(A.size());
        for (int i : A) p.push_back(c[static_cast<std::size_t>(i)]);
        return p;
    };
    std::map<Vec, int> target;  // P_A image over all of C1
    detail::for_each_element(sch.C1, [&](const Vec& c) { target[project_to(c)] = 1; });

    // enumerate each coset separately: offset = sum m_i g_i, then C2
    std::vector<Fq> m(static_cast<std::size_t>(sch.k), 0);
    while (true) {
        Vec offset(sch.C1.ambient, 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            offset = vec_add(F, std::move(offset), vec_scale(F, m[i], sch.secret_gens[i]));
        std::map<Vec, int> reached;
        detail::for_each_element(sch.C2, [&](const Vec& c) {
            reached[project_to(vec_add(F, Vec(c), offset))] = 1;
        });
        if (reached != target) return false;
        std::size_t i = 0;
        for (; i < m.size(); ++i) {
            if (++m[i] < F.q()) break;
            m[i] = 0;
        }
        if (i == m.size()) break;
    }
    return true;
}

// Exact joint distribution over named finite variables. Probabilities are
// rationals; the table is sparse (missing keys are zero).
struct JointDistribution {
    std::vector<std::string> names;
    std::vector<std::size_t> arity;
    std::map<std::vector<int>, Rational> table;

    void validate() const {
        Rational total = 0;
        for (const auto& [key, p] : table) {
            if (p < 0) throw Error("NotADistribution", "negative probability");
            if (key.size() != names.size()) throw Error("VariableUnknown", "key arity mismatch");
            total += p;
        }
        if (total != 1) throw Error("NotADistribution", "probabilities do not sum to 1");
    }
};

using VarSet = std::vector<std::size_t>;

inline void check_vars(const JointDistribution& d, const VarSet& vars) {
    for (std::size_t v : vars)
        if (v >= d.names.size()) throw Error("VariableUnknown", "no variable with index " + std::to_string(v));
}

inline std::map<std::vector<int>, Rational> marginal(const JointDistribution& d, const VarSet& vars) {
    check_vars(d, vars);
    std::map<std::vector<int>, Rational> out;
    for (const auto& [key, p] : d.table) {
        if (p == 0) continue;
        std::vector<int> sub;
        sub.reserve(vars.size());
        for (std::size_t v : vars) sub.push_back(key[v]);
        out[sub] += p;
    }
    return out;
}

// I(A;B) from exact marginals; log base 2 by default, 0 log 0 = 0.
inline double mutual_information(const JointDistribution& d, const VarSet& A, const VarSet& B,
                                 double base = 2.0) {
    for (std::size_t a : A)
        for (std::size_t b : B)
            if (a == b) throw Error("VariableUnknown", "variable sets must be disjoint");
    const auto pA = marginal(d, A);
    const auto pB = marginal(d, B);
    VarSet AB(A);
    AB.insert(AB.end(), B.begin(), B.end());
    const auto pAB = marginal(d, AB);
    double acc = 0;
    for (const auto& [key, p] : pAB) {
        if (p == 0) continue;
        const std::vector<int> ka(key.begin(), key.begin() + A.size());
        const std::vector<int> kb(key.begin() + A.size(), key.end());
        const Rational ratio = p / (pA.at(ka) * pB.at(kb));
        acc += static_cast<double>(p) * std::log2(static_cast<double>(ratio));
    }
    return acc / std::log2(base);
}

// I(A;B|C) over the exact table.
inline double conditional_mutual_information(const JointDistribution& d, const VarSet& A,
                                             const VarSet& B, const VarSet& C, double base = 2.0) {
    if (C.empty()) return mutual_information(d, A, B, base);
    VarSet AC(A), BC(B), ABC(A);
    AC.insert(AC.end(), C.begin(), C.end());
    BC.insert(BC.end(), C.begin(), C.end());
    ABC.insert(ABC.end(), B.begin(), B.end());
    ABC.insert(ABC.end(), C.begin(), C.end());
    const auto pC = marginal(d, C);
    const auto pAC = marginal(d, AC);
    const auto pBC = marginal(d, BC);
    const auto pABC = marginal(d, ABC);
    double acc = 0;
    for (const auto& [key, p] : pABC) {
        if (p == 0) continue;
        const std::vector<int> ka(key.begin(), key.begin() + A.size());
        const std::vector<int> kb(key.begin() + A.size(), key.begin() + A.size() + B.size());
        const std::vector<int> kc(key.begin() + A.size() + B.size(), key.end());
        std::vector<int> kac(ka), kbc(kb);
        kac.insert(kac.end(), kc.begin(), kc.end());
        kbc.insert(kbc.end(), kc.begin(), kc.end());
        const Rational ratio = (p * pC.at(kc)) / (pAC.at(kac) * pBC.at(kbc));
        acc += static_cast<double>(p) * std::log2(static_cast<double>(ratio));
    }
    return acc / std::log2(base);
}

// Exact independence: p(a,b) = p(a) p(b) as rationals, including zero cells.
inline bool is_independent(const JointDistribution& d, const VarSet& A, const VarSet& B) {
    const auto pA = marginal(d, A);
    const auto pB = marginal(d, B);
    VarSet AB(A);
    AB.insert(AB.end(), B.begin(), B.end());
    const auto pAB = marginal(d, AB);
    for (const auto& [ka, pa] : pA)
        for (const auto& [kb, pb] : pB) {
            std::vector<int> kab(ka);
            kab.insert(kab.end(), kb.begin(), kb.end());
            const auto it = pAB.find(kab);
            const Rational joint = it == pAB.end() ? Rational(0) : it->second;
            if (joint != pa * pb) return false;
        }
    return true;
}

// Exact conditional independence: p(a,b,c) p(c) = p(a,c) p(b,c) for all cells.
inline bool is_conditionally_independent(const JointDistribution& d, const VarSet& A,
                                         const VarSet& B, const VarSet& C) {
    if (C.empty()) return is_independent(d, A, B);
    VarSet AC(A), BC(B), ABC(A);
    AC.insert(AC.end(), C.begin(), C.end());
    BC.insert(BC.end(), C.begin(), C.end());
    ABC.insert(ABC.end(), B.begin(), B.end());
    ABC.insert(ABC.end(), C.begin(), C.end());
    const auto pC = marginal(d, C);
    const auto pAC = marginal(d, AC);
    const auto pBC = marginal(d, BC);
    const auto pABC = marginal(d, ABC);
    for (const auto& [kac, pac] : pAC)
        for (const auto& [kbc, pbc] : pBC) {
            const std::vector<int> kc(kac.end() - static_cast<std::ptrdiff_t>(C.size()), kac.end());
            if (!std::equal(kc.begin(), kc.end(), kbc.end() - static_cast<std::ptrdiff_t>(C.size())))
                continue;
            std::vector<int> kabc(kac.begin(), kac.end() - static_cast<std::ptrdiff_t>(C.size()));
            kabc.insert(kabc.end(), kbc.begin(), kbc.end());
            const auto it = pABC.find(kabc);
            const Rational joint = it == pABC.end() ? Rational(0) : it->second;
            if (joint * pC.at(kc) != pac * pbc) return false;
        }
    return true;
}

// Joint law of (S, X_1..X_n): uniform secret, uniform coset member given the
// secret. The secret variable is index 0, tuple-coded base q.
inline JointDistribution joint_from_scheme(const ClassicalScheme& sch) {
    const Field& F = *sch.C1.f;
    const std::size_t n = sch.C1.ambient;
    detail::check_enumerable(F.q(), sch.C1.dim(), "joint_from_scheme");
    JointDistribution d;
    d.names.push_back("S");
    std::size_t secret_arity = 1;
    for (int i = 0; i < sch.k; ++i) secret_arity *= F.q();
    d.arity.push_back(secret_arity);
    for (std::size_t i = 0; i < n; ++i) {
        d.names.push_back("X" + std::to_string(i + 1));
        d.arity.push_back(F.q());
    }
    std::size_t coset = 1;
    for (std::size_t j = 0; j < sch.C2.dim(); ++j) coset *= F.q();
    const Rational cell = Rational(1) / Rational(secret_arity * coset);

    std::vector<Fq> m(static_cast<std::size_t>(sch.k), 0);
    for (std::size_t mcode = 0; mcode < secret_arity; ++mcode) {
        std::size_t c = mcode;
        for (auto& mi : m) {
            mi = static_cast<Fq>(c % F.q());
            c /= F.q();
        }
        Vec offset(n, 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            offset = vec_add(F, std::move(offset), vec_scale(F, m[i], sch.secret_gens[i]));
        detail::for_each_element(sch.C2, [&](const Vec& v) {
            const Vec x = vec_add(F, Vec(v), offset);
            std::vector<int> key(1 + n);
            key[0] = static_cast<int>(mcode);
            for (std::size_t i = 0; i < n; ++i) key[1 + i] = static_cast<int>(x[i]);
            d.table[key] += cell;
        });
    }
    d.validate();
    return d;
}

inline VarSet share_vars(const std::vector<int>& shares) {
    VarSet v;
    for (int s : shares) v.push_back(static_cast<std::size_t>(s) + 1);
    return v;
}

// Re-randomize the complement: P'(s, x_B, x_B') = P(x_B) P(s, x_B'), the law
// of a dealer who kept no record of the advance shares.
inline JointDistribution dealer_forgets_chain(const JointDistribution& d, const std::vector<int>& B,
                                              const std::vector<int>& Bbar) {
    const VarSet vB = share_vars(B);
    VarSet sBbar{0};
    for (std::size_t v : share_vars(Bbar)) sBbar.push_back(v);
    const auto pB = marginal(d, vB);
    const auto pSBbar = marginal(d, sBbar);
    JointDistribution out;
    out.names = d.names;
    out.arity = d.arity;
    for (const auto& [kb, pb] : pB)
        for (const auto& [ksb, psb] : pSBbar) {
            std::vector<int> key(d.names.size(), 0);
            key[0] = ksb[0];
            for (std::size_t i = 0; i < vB.size(); ++i) key[vB[i]] = kb[i];
            for (std::size_t i = 0; i < Bbar.size(); ++i) key[1 + static_cast<std::size_t>(Bbar[i])] = ksb[1 + i];
            out.table[key] += pb * psb;
        }
    out.validate();
    return out;
}

struct DealerForgetsReport {
    std::size_t pairs_checked = 0;
    double max_abs_deviation = 0.0;  // max |I(D∪E;S) - I(E;S)| in floating point
    bool exact_equality = true;      // rational-arithmetic conditional independences
};

// Build the forgetful dealer's law and compare I(D∪E;S) with I(E;S) over every
// D ⊆ B, E ⊆ B̄. The exact path checks I(D;S|E) = 0 as a rational identity,
// which forces literal equality of the two mutual informations.
inline DealerForgetsReport dealer_forgets_experiment(const ClassicalScheme& sch,
                                                     const std::vector<int>& B) {
    const std::size_t n = sch.C1.ambient;
    std::vector<int> Bbar;
    for (std::size_t i = 0; i < n; ++i)
        if (std::find(B.begin(), B.end(), static_cast<int>(i)) == B.end())
            Bbar.push_back(static_cast<int>(i));

    const JointDistribution d = joint_from_scheme(sch);
    if (!is_independent(d, VarSet{0}, share_vars(B)))
        throw Error("NotAdvanceShareable", "I(S; shares in B) != 0, theorem hypothesis violated");
    const JointDistribution chain = dealer_forgets_chain(d, B, Bbar);

    DealerForgetsReport rep;
    for (std::size_t dm = 0; dm < (1u << B.size()); ++dm)
        for (std::size_t em = 0; em < (1u << Bbar.size()); ++em) {
            std::vector<int> D, E;
            for (std::size_t i = 0; i < B.size(); ++i)
                if (dm & (1u << i)) D.push_back(B[i]);
            for (std::size_t i = 0; i < Bbar.size(); ++i)
                if (em & (1u << i)) E.push_back(Bbar[i]);
            ++rep.pairs_checked;

            VarSet vDE = share_vars(D);
            const VarSet vE = share_vars(E);
            vDE.insert(vDE.end(), vE.begin(), vE.end());
            const double lhs = vDE.empty() ? 0.0 : mutual_information(chain, vDE, VarSet{0});
            const double rhs = vE.empty() ? 0.0 : mutual_information(chain, vE, VarSet{0});
            rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(lhs - rhs));
            if (!D.empty() &&
                !is_conditionally_independent(chain, share_vars(D), VarSet{0}, vE))
                rep.exact_equality = false;
        }
    return rep;
}

}  // namespace advshare
