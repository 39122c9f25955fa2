#include <doctest.h>

#include "asmdpp/matrices.hpp"
#include "asmdpp/serialize.hpp"

using namespace asmdpp;

TEST_CASE("ASM JSON") {
    Asm a = Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
    CHECK(to_json(a).dump() == "[[0,1,0],[1,-1,1],[0,1,0]]");
    for (const Asm& b : enumerate_asms(4)) CHECK(asm_from_json(to_json(b)) == b);
    CHECK_THROWS_AS(asm_from_json(json::parse("[[1,1],[0,0]]")), std::invalid_argument);
    CHECK_THROWS_AS(asm_from_json(json::parse("[[\"a\"]]")), std::invalid_argument);
}

TEST_CASE("DPP JSON") {
    CHECK(to_json(Dpp::from_rows({{3, 3}, {2}})).dump() == "[[3,3],[2]]");
    CHECK(to_json(Dpp::from_rows({})).dump() == "[]");
    for (const Dpp& d : enumerate_dpps(4)) CHECK(dpp_from_json(to_json(d)) == d);
}

TEST_CASE("six-vertex JSON") {
    for (const auto& c : enumerate_configs(3)) CHECK(sixvertex_from_json(to_json(c)) == c);
    CHECK(to_json(enumerate_configs(1)[0]).dump() == "[[\"c1\"]]");
    CHECK_THROWS_AS(sixvertex_from_json(json::parse("[[\"zz\"]]")), std::invalid_argument);
}

TEST_CASE("path family JSON") {
    for (std::size_t n = 1; n <= 4; ++n)
        for (const Dpp& d : enumerate_dpps(n)) {
            PathFamily f = dpp_to_nilp(d, n);
            CHECK(nilp_from_json(to_json(f), n) == f);
        }
}

TEST_CASE("polynomial and matrix JSON") {
    MultiPoly p = MultiPoly::parse("1-3x^2z+xyz");
    CHECK(poly_from_json(to_json(p)) == p);
    CHECK(to_json(p).dump() == "[[\"1\",[0,0,0,0,0]],[\"-3\",[2,0,1,0,0]],[\"1\",[1,1,1,0,0]]]");
    json m = to_json(m_asm(2));
    CHECK(m.size() == 2);
    CHECK(m[1][1].size() == 3);
}
