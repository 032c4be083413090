#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "advshare/fixtures.hpp"
#include "advshare/io.hpp"
#include "advshare/rs.hpp"
#include "test_util.hpp"

using namespace advshare;

TEST_CASE("matrix and triple files round-trip") {
    testutil::Rng rng(83);
    for (std::uint32_t q : {2u, 3u, 5u, 9u}) {
        const Field& F = field_of_order(q);
        for (int t = 0; t < 50; ++t) {
            MatrixFq M(F, 1 + rng.below(4), 1 + rng.below(6));
            for (auto& x : M.e) x = static_cast<Fq>(rng.below(q));
            std::stringstream ss;
            write_matrix(ss, M);
            CHECK(read_matrix(ss) == M);
        }
    }

    for (const CodeTriple& t : {fixtures::gottesman().triple, fixtures::example3b().triple,
                                build_rs_scheme({5, 2, 1})}) {
        std::stringstream ss;
        write_triple(ss, t);
        const CodeTriple back = read_triple(ss);
        CHECK(back.C_S == t.C_S);
        CHECK(back.C_R == t.C_R);
        CHECK(back.C_max == t.C_max);
        CHECK(back.k == t.k);
        CHECK(back.s == t.s);
    }

    std::stringstream ss;
    write_scheme_file(ss, fixtures::example3b().triple, {0, 1});
    const auto [t, b] = read_scheme_file(ss);
    CHECK(b == std::vector<int>{0, 1});
}

TEST_CASE("classical scheme file") {
    auto [c1, c2] = fixtures::fig1_codes();
    std::stringstream ss;
    write_classical_file(ss, c1, c2);
    const auto [r1, r2] = read_classical_file(ss);
    CHECK(r1 == c1);
    CHECK(r2 == c2);
}

TEST_CASE("symplectic vector text form") {
    const Field& F = Field::get(3, 1);
    const Vec v{1, 1, 0, 1, 2, 2, 0, 0};
    CHECK(format_sympvec(v) == "1 1 0 1 | 2 2 0 0");
    CHECK(parse_sympvec("1 1 0 1 | 2 2 0 0", F) == v);
    CHECK_THROWS_WITH(parse_sympvec("1 2 | 1", F), Catch::Matchers::ContainsSubstring("ParseError"));
    CHECK_THROWS_WITH(parse_sympvec("1 3 | 1 1", F), Catch::Matchers::ContainsSubstring("ParseError"));

    testutil::Rng rng(89);
    for (int t = 0; t < 100; ++t) {
        const Vec w = testutil::random_vec(rng, F, 8);
        CHECK(parse_sympvec(format_sympvec(w), F) == w);
    }
}

TEST_CASE("share lists and element lists") {
    CHECK(parse_share_list("1,2", 4) == std::vector<int>{0, 1});
    CHECK(parse_share_list("", 4).empty());
    CHECK(format_share_list({0, 1, 3}) == "1,2,4");
    CHECK(format_share_list({}) == "-");
    CHECK_THROWS_WITH(parse_share_list("0", 4), Catch::Matchers::ContainsSubstring("ParseError"));
    CHECK_THROWS_WITH(parse_share_list("5", 4), Catch::Matchers::ContainsSubstring("ParseError"));

    const Field& F = Field::get(3, 1);
    CHECK(parse_element_list("1,0,2", F) == Vec{1, 0, 2});
    CHECK_THROWS_WITH(parse_element_list("3", F), Catch::Matchers::ContainsSubstring("ParseError"));
}

TEST_CASE("malformed files are rejected") {
    std::istringstream bad1("rows 2 cols 2\n1 0\n0 1\n");
    CHECK_THROWS_WITH(read_matrix(bad1), Catch::Matchers::ContainsSubstring("ParseError"));

    std::istringstream bad2("q 2 rows 1 cols 2\n1 2\n");
    CHECK_THROWS_WITH(read_matrix(bad2), Catch::Matchers::ContainsSubstring("ParseError"));

    std::istringstream bad3("params 3 4 2 2\nC_S\nq 3 rows 0 cols 7\n");
    CHECK_THROWS_WITH(read_triple(bad3), Catch::Matchers::ContainsSubstring("ParseError"));
}
