#include <doctest.h>

#include "asmdpp/lattice_paths.hpp"

using namespace asmdpp;

TEST_CASE("closed-form path sums match the direct walk") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(path_weight_sum(n, i, j, false) == path_weight_sum_direct(n, i, j, false));
                CHECK(path_weight_sum(n, i, j, true) == path_weight_sum_direct(n, i, j, true));
            }
}

TEST_CASE("a small path sum by hand") {
    // (0,1) -> (1,0) on G_{3,3}: RD (x) or DR (x, since 0 <= 0)
    CHECK(path_weight_sum(3, 1, 1, false).to_string() == "2x");
    // (0,0) -> (2,0): x then y
    CHECK(path_weight_sum(3, 2, 0, false).to_string() == "xy");
}

TEST_CASE("DPP and path families correspond") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Dpp& d : enumerate_dpps(n)) {
            PathFamily f = dpp_to_nilp(d, n);
            CHECK(f.size() == d.row_count() + 1);
            CHECK(nilp_to_dpp(f, n) == d);
            PathStats st = nilp_statistics(f, n);
            DppStats ds = dpp_stats(d, n);
            CHECK(st.above == ds.nu);
            CHECK(st.below == ds.mu);
            CHECK(st.top == ds.rho);

            PathFamily g = dpp_to_nilp_prime(d, n);
            CHECK(nilp_prime_to_dpp(g, n) == d);
            PathStats sp = nilp_prime_statistics(g, n);
            CHECK(sp.paths + sp.above == ds.nu);
            CHECK(sp.below == ds.mu);
        }
}

TEST_CASE("worked example paths") {
    Dpp d = Dpp::from_rows({{6, 6, 6, 5, 2}, {4, 4, 1}, {3}});
    PathFamily f = dpp_to_nilp(d, 6);
    REQUIRE(f.size() == 4);
    CHECK(f[0].start == Point{0, 5});
    CHECK(f[0].steps == "RRRDRDDDRD");
    CHECK(f[1].start == Point{0, 4});
    CHECK(f[1].end() == Point{3, 0});
    CHECK(f[3].end() == Point{0, 0});
}

TEST_CASE("invalid families are rejected") {
    // the first path runs through the second start (0,1)
    PathFamily bad = {{{0, 2}, "DRRD"}, {{0, 1}, "RD"}, {{0, 0}, ""}};
    CHECK_THROWS_AS(validate_nilp(bad, 3), std::invalid_argument);
    PathFamily disjoint = {{{0, 1}, "RD"}, {{0, 0}, ""}};
    CHECK(nilp_to_dpp(disjoint, 2) == Dpp::from_rows({{2}}));
    PathFamily wrong_start = {{{0, 1}, "D"}};
    CHECK_THROWS_AS(validate_nilp(wrong_start, 3), std::invalid_argument);
    CHECK_THROWS_AS(LatticePath({{0, 0}, "RX"}).end(), std::invalid_argument);
    PathFamily ok = {{{0, 2}, "DDR"}, {{0, 0}, ""}};
    CHECK_THROWS_AS(validate_nilp(ok, 3), std::invalid_argument);  // (0,0) shared
}

TEST_CASE("family sum equals the determinant and the DPP polynomial") {
    for (std::size_t n = 1; n <= 5; ++n) {
        MultiPoly l = lgv_nilp_sum(n, true);
        CHECK(l == z_dpp_brute(n));
        CHECK(lgv_nilp_sum(n, false) == z_dpp_brute(n).specialize(Z, 1));
    }
}
