#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "advshare/symplectic.hpp"

namespace advshare {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(std::size_t n, std::size_t i) {
    if (i > n) return 0;
    BigInt r = 1;
    for (std::size_t t = 1; t <= i; ++t) {
        r *= static_cast<unsigned>(n - i + t);
        r /= static_cast<unsigned>(t);
    }
    return r;
}

inline BigInt bigpow(std::uint64_t base, std::size_t e) {
    BigInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

// Number of vectors in F_q^{2n} with symplectic weight between 1 and delta-1.
inline BigInt swt_ball_count(std::uint64_t q, std::size_t n, std::size_t delta) {
    BigInt acc = 0;
    for (std::size_t i = 1; i + 1 <= delta; ++i) acc += binomial(n, i) * bigpow(q * q - 1, i);
    return acc;
}

struct GvParams {
    std::uint64_t q = 0;
    std::size_t n = 0;
    int k = 0, s = 0;
    std::size_t delta_q = 1, delta_f = 1, delta_t = 1;
};

inline void check_gv_params(const GvParams& p) {
    if (p.q < 2 || p.n < 1 || p.k < 1 || p.s < 0 || static_cast<int>(p.n) - p.k - p.s < 0)
        throw Error("DimensionMismatch", "need q >= 2, n >= 1, k >= 1, s >= 0, n-k-s >= 0");
    if (p.delta_f < p.delta_t) throw Error("DimensionMismatch", "delta_f must be >= delta_t");
    for (std::size_t d : {p.delta_q, p.delta_f, p.delta_t})
        if (d < 1 || d > p.n + 1) throw Error("DimensionMismatch", "deltas must lie in 1..n+1");
}

// Left side of the counting bound: three weighted weight-ball sums over the
// chain counts, exact rational. Existence is guaranteed when this is < 1.
// The first prefactor uses the positive difference |U^perp| - |V^perp| =
// q^(n+k+s) - q^(n+s) from the counting argument.
inline Rational gv_lhs(const GvParams& p) {
    check_gv_params(p);
    const BigInt denom = bigpow(p.q, 2 * p.n) - 1;
    const BigInt pre_q = bigpow(p.q, p.n + p.k + p.s) - bigpow(p.q, p.n + p.s);
    const BigInt pre_t = bigpow(p.q, p.n) - bigpow(p.q, p.n - p.s);
    const BigInt pre_f = bigpow(p.q, p.n - p.s) - bigpow(p.q, p.n - p.k - p.s);
    const BigInt num = pre_q * swt_ball_count(p.q, p.n, p.delta_q) +
                       pre_t * swt_ball_count(p.q, p.n, p.delta_t) +
                       pre_f * swt_ball_count(p.q, p.n, p.delta_f);
    return Rational(num, denom);
}

inline bool gv_feasible(const GvParams& p) { return gv_lhs(p) < 1; }

// All maximal feasible (delta_q, delta_f, delta_t) under the componentwise
// order. The left side is monotone in each delta, so a triple is maximal
// exactly when no single +1 step stays feasible.
inline std::vector<std::array<std::size_t, 3>> gv_search(std::uint64_t q, std::size_t n, int k, int s) {
    if (n > 64) throw Error("EnumerationTooLarge", "gv_search is limited to n <= 64");
    check_gv_params(GvParams{q, n, k, s, 1, 1, 1});
    std::vector<BigInt> ball(n + 3, 0);
    for (std::size_t d = 1; d <= n + 1; ++d) ball[d] = swt_ball_count(q, n, d);
    const BigInt denom = bigpow(q, 2 * n) - 1;
    const BigInt pre_q = bigpow(q, n + k + s) - bigpow(q, n + s);
    const BigInt pre_t = bigpow(q, n) - bigpow(q, n - s);
    const BigInt pre_f = bigpow(q, n - s) - bigpow(q, n - k - s);
    auto feasible = [&](std::size_t dq, std::size_t df, std::size_t dt) {
        if (dq < 1 || df < 1 || dt < 1 || dq > n + 1 || df > n + 1 || dt > n + 1 || df < dt)
            return false;
        return pre_q * ball[dq] + pre_t * ball[dt] + pre_f * ball[df] < denom;
    };
    std::vector<std::array<std::size_t, 3>> frontier;
    for (std::size_t dq = 1; dq <= n + 1; ++dq)
        for (std::size_t df = 1; df <= n + 1; ++df)
            for (std::size_t dt = 1; dt <= df; ++dt) {
                if (!feasible(dq, df, dt)) continue;
                if (feasible(dq + 1, df, dt) || feasible(dq, df + 1, dt) || feasible(dq, df, dt + 1))
                    continue;
                frontier.push_back({dq, df, dt});
            }
    return frontier;
}

namespace detail {

inline std::vector<Fq> subspace_key(const Subspace& s) {
    std::vector<Fq> key;
    key.push_back(static_cast<Fq>(s.dim()));
    key.insert(key.end(), s.basis.e.begin(), s.basis.e.end());
    return key;
}

}  // namespace detail

// Every d-dimensional subspace of `space`, by repeated one-vector extension
// with canonical-basis deduplication. Tiny scales only.
inline std::vector<Subspace> subspaces_within(const Subspace& space, std::size_t d) {
    const Field& F = *space.f;
    detail::check_enumerable(F.q(), space.dim() * (d == 0 ? 1 : d), "subspace enumeration");
    if (d > space.dim()) return {};
    std::vector<Vec> elems;
    detail::for_each_element(space, [&](const Vec& v) {
        if (!is_zero_vec(v)) elems.push_back(v);
    });
    std::map<std::vector<Fq>, Subspace> layer;
    const Subspace zero = Subspace::zero(F, space.ambient, space.kind);
    layer.emplace(detail::subspace_key(zero), zero);
    for (std::size_t t = 0; t < d; ++t) {
        std::map<std::vector<Fq>, Subspace> next;
        for (const auto& [key, sub] : layer)
            for (const Vec& v : elems) {
                if (sub.contains(v)) continue;
                MatrixFq M = sub.basis;
                M.append_row(v);
                Subspace grown = Subspace::span(F, space.ambient, space.kind, std::move(M));
                next.emplace(detail::subspace_key(grown), std::move(grown));
            }
        layer = std::move(next);
    }
    std::vector<Subspace> out;
    out.reserve(layer.size());
    for (auto& [key, sub] : layer) out.push_back(std::move(sub));
    return out;
}

struct ChainTriple {
    Subspace U, V, W;  // dims n-k-s, n-s, n with W self-dual
};

// Exhaustive A(k,s): all chains U ⊆ V ⊆ W = W^perp_s of the prescribed
// dimensions. Only sensible at toy scales (the ratio checks gate to q=2, n=2).
inline std::vector<ChainTriple> enumerate_chains(const Field& F, std::size_t n, int k, int s) {
    detail::check_enumerable(F.q(), 2 * n * n, "chain enumeration");
    std::vector<ChainTriple> out;
    const Subspace full = Subspace::full(F, 2 * n, Support::pair);
    for (const Subspace& W : subspaces_within(full, n)) {
        if (!(symplectic_dual(W) == W)) continue;
        for (const Subspace& V : subspaces_within(W, n - static_cast<std::size_t>(s)))
            for (const Subspace& U : subspaces_within(V, n - static_cast<std::size_t>(k + s)))
                out.push_back({U, V, W});
    }
    return out;
}

struct RatioCheck {
    std::size_t chain_count = 0;       // |A(k,s)|
    bool counts_symmetric = false;     // same counts for every nonzero e
    Rational ratio_udual, ratio_w, ratio_v;          // measured
    Rational expect_udual, expect_w, expect_v;       // counting-argument values
    bool all_match = false;
};

// Count, for each nonzero e, how many chains put e in U^perp\V^perp, W\V and
// V\U, and compare the ratios against the three prefactors of the bound.
inline RatioCheck ratio_enumeration_check(std::uint64_t q, std::size_t n, int k, int s) {
    const Field& F = Field::get(static_cast<std::uint32_t>(q), 1);
    const auto chains = enumerate_chains(F, n, k, s);
    RatioCheck rc;
    rc.chain_count = chains.size();

    struct Counts {
        std::size_t udual = 0, w = 0, v = 0;
    };
    std::vector<std::pair<Subspace, Subspace>> duals;  // (U^perp, V^perp)
    duals.reserve(chains.size());
    for (const ChainTriple& c : chains) duals.emplace_back(symplectic_dual(c.U), symplectic_dual(c.V));

    std::vector<Counts> per_e;
    detail::for_each_element(Subspace::full(F, 2 * n, Support::pair), [&](const Vec& e) {
        if (is_zero_vec(e)) return;
        Counts cnt;
        for (std::size_t i = 0; i < chains.size(); ++i) {
            const auto& [ud, vd] = duals[i];
            if (ud.contains(e) && !vd.contains(e)) ++cnt.udual;
            if (chains[i].W.contains(e) && !chains[i].V.contains(e)) ++cnt.w;
            if (chains[i].V.contains(e) && !chains[i].U.contains(e)) ++cnt.v;
        }
        per_e.push_back(cnt);
    });

    rc.counts_symmetric = true;
    for (const Counts& c : per_e)
        if (c.udual != per_e[0].udual || c.w != per_e[0].w || c.v != per_e[0].v)
            rc.counts_symmetric = false;

    const Rational A(static_cast<unsigned>(rc.chain_count));
    rc.ratio_udual = Rational(static_cast<unsigned>(per_e[0].udual)) / A;
    rc.ratio_w = Rational(static_cast<unsigned>(per_e[0].w)) / A;
    rc.ratio_v = Rational(static_cast<unsigned>(per_e[0].v)) / A;
    const BigInt denom = bigpow(q, 2 * n) - 1;
    rc.expect_udual = Rational(bigpow(q, n + k + s) - bigpow(q, n + s), denom);
    rc.expect_w = Rational(bigpow(q, n) - bigpow(q, n - s), denom);
    rc.expect_v = Rational(bigpow(q, n - s) - bigpow(q, n - k - s), denom);
    rc.all_match = rc.counts_symmetric && rc.ratio_udual == rc.expect_udual &&
                   rc.ratio_w == rc.expect_w && rc.ratio_v == rc.expect_v;
    return rc;
}

// Exhaustive witness search for the existence statement at toy scale.
inline bool theorem14_witness_exists(std::uint64_t q, std::size_t n, int k, int s,
                                     std::size_t dq, std::size_t df, std::size_t dt) {
    const Field& F = Field::get(static_cast<std::uint32_t>(q), 1);
    for (const ChainTriple& c : enumerate_chains(F, n, k, s)) {
        const auto ok = [](const Subspace& big, const Subspace& small, std::size_t bound) {
            return bound <= 1 || coset_distance(big, small) >= bound;
        };
        if (ok(symplectic_dual(c.U), symplectic_dual(c.V), dq) && ok(c.V, c.U, df) &&
            ok(c.W, c.U, dt))
            return true;
    }
    return false;
}

// Standard q-ary entropy. The asymptotic feasibility checks use the convention
// that the entropy term vanishes at epsilon = 0.
inline double h_q(std::uint64_t q, double x) {
    if (!(x > 0.0) || !(x < 1.0)) throw Error("DomainError", "h_q needs x in (0,1)");
    const double lq = std::log(static_cast<double>(q));
    return (-x * std::log(x) - (1.0 - x) * std::log(1.0 - x)) / lq;
}

struct AsymptoticParams {
    std::uint64_t q = 0;
    double R = 0, S = 0;            // secret and randomness rates
    double eps_q = 0, eps_f = 0, eps_t = 0;
};

inline double gv_rate_term(std::uint64_t q, double eps) {
    if (eps == 0.0) return 0.0;
    return h_q(q, eps) + eps * std::log(static_cast<double>(q * q - 1)) / std::log(static_cast<double>(q));
}

inline bool asymptotic_feasible(const AsymptoticParams& a) {
    if (a.q < 2) throw Error("DomainError", "q must be >= 2");
    if (a.R < 0 || a.R > 1 || a.S < 0 || a.S > 1) throw Error("DomainError", "rates must lie in [0,1]");
    if (!(a.eps_t <= a.eps_f) || !(a.eps_f < 0.5) || !(a.eps_q < 0.5) || a.eps_q < 0 || a.eps_t < 0)
        throw Error("DomainError", "need 0 <= eps_t <= eps_f < 0.5 and 0 <= eps_q < 0.5");
    return gv_rate_term(a.q, a.eps_q) < 1.0 - a.R - a.S &&
           gv_rate_term(a.q, a.eps_t) < 1.0 &&
           gv_rate_term(a.q, a.eps_f) < 1.0 + a.S;
}

// Root of h_q(e) + e log_q(q^2-1) = 1 on (0, 1/2): the asymptotic fraction of
// advance-shareable shares. Strictly increasing there, so bisection applies.
inline double epsilon_root(std::uint64_t q) {
    if (q < 2) throw Error("DomainError", "q must be >= 2");
    double lo = 1e-12, hi = 0.5 - 1e-12;
    if (gv_rate_term(q, hi) < 1.0) throw Error("DomainError", "no root below 1/2");
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (gv_rate_term(q, mid) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace advshare
