#include <catch2/catch_amalgamated.hpp>

#include "advshare/fixtures.hpp"
#include "advshare/scheme.hpp"
#include "test_util.hpp"

using namespace advshare;

namespace {

Vec unit8(std::size_t i) {
    Vec v(8, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("build_scheme transversals") {
    const Scheme demo = fixtures::example3b();
    // secret cosets sit at share position 4 of each half
    CHECK(demo.secret_gens == std::vector<Vec>{unit8(3), unit8(7)});
    // randomness cosets at share position 3
    CHECK(demo.rand_gens == std::vector<Vec>{unit8(2), unit8(6)});

    const Scheme bell = fixtures::gottesman();
    CHECK(bell.secret_gens == std::vector<Vec>{{0, 1, 0, 0}, {0, 0, 0, 1}});
    CHECK(bell.rand_gens.empty());

    // empty advance set degenerates to conventional sharing
    CHECK_NOTHROW(build_scheme(demo.triple, {}));
}

TEST_CASE("H matrix of the GF(3) demo") {
    const Scheme demo = fixtures::example3b();
    const Field& F = *demo.triple.f;
    REQUIRE(demo.H.rows == 4);

    MatrixFq paper_h(F, 4, 8);
    paper_h.e = {0, 0, 0, 0, 2, 2, 2, 0,
                 1, 1, 1, 0, 0, 0, 0, 0,
                 0, 0, 0, 0, 1, 2, 0, 2,
                 2, 1, 0, 1, 0, 0, 0, 0};
    CHECK(rref(demo.H).first == rref(paper_h).first);

    // every element of C_max is annihilated by H^T
    detail::for_each_element(demo.triple.C_max, [&](const Vec& v) {
        for (std::size_t r = 0; r < demo.H.rows; ++r) CHECK(dot(F, demo.H.row(r), v) == 0);
    });
}

TEST_CASE("encode_label") {
    const Scheme demo = fixtures::example3b();
    const Field& F = *demo.triple.f;

    CHECK(encode_label(demo, {0, 0}, {0, 0}).vec == Vec(8, 0));
    CHECK(encode_label(demo, {1, 2}, {2, 0}).vec == Vec{0, 0, 2, 1, 0, 0, 0, 2});

    CHECK_THROWS_WITH(encode_label(demo, {1}, {0, 0}), Catch::Matchers::ContainsSubstring("LengthMismatch"));

    const Scheme bell = fixtures::gottesman();
    CHECK(encode_label(bell, {1, 0}, {}).vec == Vec{0, 1, 0, 0});  // I (x) X
    CHECK(encode_label(bell, {0, 1}, {}).vec == Vec{0, 0, 0, 1});  // I (x) Z

    // same secret, different coset choice: difference in C_R^perp_s;
    // different secrets: difference outside C_R^perp_s
    testutil::Rng rng(53);
    for (int t = 0; t < 100; ++t) {
        const Vec m1 = testutil::random_vec(rng, F, 2), m2 = testutil::random_vec(rng, F, 2);
        const Vec r1 = testutil::random_vec(rng, F, 2), r2 = testutil::random_vec(rng, F, 2);
        Vec d = encode_label(demo, m1, r1).vec;
        const Vec e = encode_label(demo, m2, r2).vec;
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = F.sub(d[i], e[i]);
        CHECK(demo.cs_dual.contains(d));
        CHECK(demo.cr_dual.contains(d) == (m1 == m2));
    }
}

TEST_CASE("labels reach every coset the dealer may draw") {
    // the coset family (a1,a1,0,m1 | a2,a2,0,m2) + C_max is exactly the family
    // encode_label parametrizes by r = (2a1, 2a2)
    const Scheme demo = fixtures::example3b();
    const Field& F = *demo.triple.f;
    for (Fq a1 = 0; a1 < 3; ++a1)
        for (Fq a2 = 0; a2 < 3; ++a2)
            for (Fq m1 = 0; m1 < 3; ++m1)
                for (Fq m2 = 0; m2 < 3; ++m2) {
                    const Vec rep{a1, a1, 0, m1, a2, a2, 0, m2};
                    const EncodingLabel viaCoords = label_from_vector(demo, rep);
                    CHECK(viaCoords.secret == Vec{m1, m2});
                    CHECK(viaCoords.rand == Vec{F.mul(2, a1), F.mul(2, a2)});
                    const EncodingLabel direct = encode_label(demo, {m1, m2}, {F.mul(2, a1), F.mul(2, a2)});
                    CHECK(coset_equal_mod_cmax(demo.triple, rep, direct.vec));
                }
}

TEST_CASE("advance representatives") {
    const Scheme demo = fixtures::example3b();

    // (a1,a2,m1,m2) = (1,2,1,0)
    const Vec label{1, 1, 0, 1, 2, 2, 0, 0};
    const Vec z = advance_rep(demo, label_from_vector(demo, label));
    CHECK(z == Vec{0, 0, 2, 1, 0, 0, 1, 0});

    // already supported outside B: comes back unchanged (solution is unique
    // here because C_max meets F_q^{B-bar} trivially)
    const Vec flat{0, 0, 0, 2, 0, 0, 0, 1};
    CHECK(advance_rep(demo, label_from_vector(demo, flat)) == flat);

    // closed form across all 81 dealer draws
    const Field& F = *demo.triple.f;
    for (Fq a1 = 0; a1 < 3; ++a1)
        for (Fq a2 = 0; a2 < 3; ++a2)
            for (Fq m1 = 0; m1 < 3; ++m1)
                for (Fq m2 = 0; m2 < 3; ++m2) {
                    const Vec rep{a1, a1, 0, m1, a2, a2, 0, m2};
                    const Vec want{0, 0, F.mul(2, a1), m1, 0, 0, F.mul(2, a2), m2};
                    CHECK(advance_rep(demo, label_from_vector(demo, rep)) == want);
                }

    // no representative exists when B-bar is empty and the label is not in C_max
    const Scheme bell = fixtures::gottesman();
    const Scheme bell_all = build_scheme(bell.triple, {0, 1});
    CHECK_THROWS_WITH(advance_rep(bell_all, encode_label(bell_all, {1, 0}, {})),
                      Catch::Matchers::ContainsSubstring("NoAdvanceRepresentative"));
    CHECK(try_advance_rep(bell_all, encode_label(bell_all, {0, 0}, {})).has_value());
}

TEST_CASE("leakage and classification") {
    const Scheme demo = fixtures::example3b();
    const CodeTriple& t = demo.triple;

    CHECK(leakage_dim(t, {}) == 0);
    CHECK(leakage_dim(t, {0, 1}) == 0);
    CHECK(leakage_dim(t, {0, 1, 2, 3}) == 2);
    // the only qualified 3-set is the support of the C_R generator
    CHECK(leakage_dim(t, {0, 1, 3}) == 2);
    CHECK(leakage_dim(t, {0, 1, 2}) == 0);
    CHECK(leakage_dim(t, {1, 2, 3}) == 0);
    CHECK(leakage_dim(t, {0, 2, 3}) == 0);

    CHECK(classify(t, {0, 1}).cls == AccessClass::forbidden);
    CHECK(classify(t, {0, 1, 2, 3}).cls == AccessClass::qualified);

    const Scheme bell = fixtures::gottesman();
    CHECK(classify(bell.triple, {0}).cls == AccessClass::forbidden);
    CHECK(classify(bell.triple, {0, 1}).cls == AccessClass::qualified);
}

TEST_CASE("advance-shareability checks") {
    const Scheme demo = fixtures::example3b();
    CHECK(is_advance_shareable(demo.triple, {}));
    CHECK(is_advance_shareable(demo.triple, {0, 1}));
    CHECK(advance_sufficient(demo.triple, {0, 1}));  // d_s(C_max, C_S) = 3
    CHECK_FALSE(advance_sufficient(demo.triple, {0, 1, 2}));

    const Scheme bell = fixtures::gottesman();
    CHECK(is_advance_shareable(bell.triple, {0}));
    CHECK_FALSE(is_advance_shareable(bell.triple, {0, 1}));
    CHECK(advance_sufficient(bell.triple, {0}));  // d_s = 2
}

TEST_CASE("structure lemmas on a random ensemble") {
    testutil::Rng rng(59);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::uint32_t q = trial % 2 ? 2 : 3;
        const std::size_t n = 2 + rng.below(4);
        const CodeTriple t = testutil::random_triple(rng, q, n);
        const ShareSet B = testutil::random_subset(rng, n);
        const ShareSet Bbar = complement_shares(B, n);
        const Scheme sch = build_scheme(t, B);
        ++checked;

        const Subspace& sd = sch.cs_dual;
        const Subspace& rd = sch.cr_dual;
        const Subspace sd_bar = restrict_support(sd, Bbar);
        const Subspace rd_bar = restrict_support(rd, Bbar);

        // per-coset solvability for every coset <=> the subspace-sum identity
        bool all_solvable = true;
        std::vector<Fq> mr(static_cast<std::size_t>(t.k + t.s), 0);
        while (true) {
            const Vec m(mr.begin(), mr.begin() + t.k);
            const Vec r(mr.begin() + t.k, mr.end());
            if (!try_advance_rep(sch, encode_label(sch, m, r))) {
                all_solvable = false;
                break;
            }
            std::size_t i = 0;
            for (; i < mr.size(); ++i) {
                if (++mr[i] < q) break;
                mr[i] = 0;
            }
            if (i == mr.size()) break;
        }
        const bool sum_identity = sum(sd_bar, t.C_max) == sd;
        CHECK(all_solvable == sum_identity);

        // quotient-dimension identity transported through the sum with C_max
        CHECK(sd_bar.dim() - rd_bar.dim() ==
              sum(sd_bar, t.C_max).dim() - sum(rd_bar, t.C_max).dim());

        // dimension criterion <=> subspace-sum identity
        const bool dim_criterion = is_advance_shareable(t, B);
        CHECK(dim_criterion == sum_identity);

        // weight bound implies the dimension criterion
        if (advance_sufficient(t, B)) CHECK(dim_criterion);

        // advance-shareable sets are forbidden
        if (dim_criterion) CHECK(classify(t, B).cls == AccessClass::forbidden);

        // shortening dualities
        const Subspace max_bar = restrict_support(t.C_max, Bbar);
        CHECK(sd_bar.dim() - max_bar.dim() ==
              project(t.C_max, Bbar).dim() - project(t.C_S, Bbar).dim());
        CHECK(sd_bar.dim() - rd_bar.dim() ==
              project(t.C_R, Bbar).dim() - project(t.C_S, Bbar).dim());
    }
    CHECK(checked == 80);
}
