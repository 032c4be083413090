#pragma once

#include "advshare/rs.hpp"
#include "advshare/scheme.hpp"

namespace advshare::fixtures {

// Two-share Bell-pair scheme for a 2-bit secret (superdense coding as secret
// sharing): C_S = {0}, C_R = C_max = span{XX, ZZ}, secret operators I⊗X, I⊗Z.
// Share 1 can be handed out before the secret exists.
inline Scheme gottesman() {
    const Field& F = Field::get(2, 1);
    const Subspace C_S = Subspace::zero(F, 4, Support::pair);
    const Subspace C_max =
        Subspace::span_rows(F, 4, Support::pair, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    const CodeTriple t = validate_triple(C_S, C_max, C_max, 2, 2, 0);
    return build_scheme(t, {0});
}

// Four-share GF(3) scheme over the doubly-extended [4,2,3] Reed-Solomon code,
// k = s = 2, advance set {1,2}. The generator vectors are shipped literally;
// this extended code is not produced by the rs_code constructor. C_R is the
// second generator on both halves: that is the choice under which the i-th
// secret symbol sits at share positions 4 and 8 and the advance solver's
// closed form (x1,x2) = (2a1,m1), (y1,y2) = (2a2,m2) holds.
inline Scheme example3b() {
    const Field& F = Field::get(3, 1);
    const Vec v1{1, 1, 1, 0};
    const Vec v2{2, 1, 0, 1};
    auto pair_rows = [&](const std::vector<Vec>& halves) {
        std::vector<Vec> rows;
        for (const Vec& h : halves) {
            Vec a(8, 0), b(8, 0);
            for (std::size_t i = 0; i < 4; ++i) {
                a[i] = h[i];
                b[4 + i] = h[i];
            }
            rows.push_back(a);
            rows.push_back(b);
        }
        return rows;
    };
    const Subspace C_S = Subspace::zero(F, 8, Support::pair);
    const Subspace C_R = Subspace::span_rows(F, 8, Support::pair, pair_rows({v2}));
    const Subspace C_max = Subspace::span_rows(F, 8, Support::pair, pair_rows({v1, v2}));
    const CodeTriple t = validate_triple(C_S, C_R, C_max, 4, 2, 2);
    return build_scheme(t, {0, 1});
}

// One-time-pad as a classical linear scheme: C1 = F_2^2, C2 = span{(1,1)};
// share 1 is a fresh random bit, share 2 = secret xor share 1.
inline std::pair<Subspace, Subspace> fig1_codes() {
    const Field& F = Field::get(2, 1);
    return {Subspace::full(F, 2, Support::coordinate),
            Subspace::span_rows(F, 2, Support::coordinate, {{1, 1}})};
}

}  // namespace advshare::fixtures
