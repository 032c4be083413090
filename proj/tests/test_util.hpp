#pragma once

#include <random>
#include <vector>

#include "advshare/scheme.hpp"

namespace advshare::testutil {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t below(std::uint64_t bound) { return eng() % bound; }
};

inline Vec random_vec(Rng& rng, const Field& F, std::size_t len) {
    Vec v(len);
    for (auto& x : v) x = static_cast<Fq>(rng.below(F.q()));
    return v;
}

inline Subspace random_subspace(Rng& rng, const Field& F, std::size_t ambient, std::size_t max_rows,
                                Support kind = Support::coordinate) {
    MatrixFq M(F, 0, ambient);
    const std::size_t rows = rng.below(max_rows + 1);
    for (std::size_t i = 0; i < rows; ++i) M.append_row(random_vec(rng, F, ambient));
    return Subspace::span(F, ambient, kind, std::move(M));
}

// Random vector inside a subspace (possibly zero).
inline Vec random_member(Rng& rng, const Subspace& V) {
    Vec v(V.ambient, 0);
    for (std::size_t r = 0; r < V.dim(); ++r) {
        const Fq c = static_cast<Fq>(rng.below(V.f->q()));
        if (c != 0) v = vec_add(*V.f, std::move(v), vec_scale(*V.f, c, V.basis.row(r)));
    }
    return v;
}

// Grow a self-orthogonal chain one random dual vector at a time. Always
// terminates: as long as dim C < n some dual vector lies outside C.
inline Subspace extend_isotropic(Rng& rng, Subspace C, std::size_t target_dim) {
    const Field& F = *C.f;
    while (C.dim() < target_dim) {
        const Subspace D = symplectic_dual(C);
        Vec v;
        do {
            v = random_member(rng, D);
        } while (C.contains(v));
        MatrixFq M = C.basis;
        M.append_row(v);
        C = Subspace::span(F, C.ambient, Support::pair, std::move(M));
    }
    return C;
}

// Random valid triple with 1 <= k, 0 <= s, k + s <= n.
inline CodeTriple random_triple(Rng& rng, std::uint32_t q, std::size_t n) {
    const Field& F = Field::get(q, 1);
    const int k = 1 + static_cast<int>(rng.below(n));
    const int s = static_cast<int>(rng.below(n - static_cast<std::size_t>(k) + 1));
    const Subspace C_S = extend_isotropic(rng, Subspace::zero(F, 2 * n, Support::pair),
                                          n - static_cast<std::size_t>(k + s));
    const Subspace C_R = extend_isotropic(rng, C_S, n - static_cast<std::size_t>(s));
    const Subspace C_max = extend_isotropic(rng, C_R, n);
    return validate_triple(C_S, C_R, C_max, n, k, s);
}

inline ShareSet random_subset(Rng& rng, std::size_t n) {
    ShareSet s;
    for (std::size_t i = 0; i < n; ++i)
        if (rng.below(2)) s.push_back(static_cast<int>(i));
    return s;
}

inline std::vector<ShareSet> all_subsets(std::size_t n) {
    std::vector<ShareSet> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        ShareSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(static_cast<int>(i));
        out.push_back(s);
    }
    return out;
}

}  // namespace advshare::testutil
