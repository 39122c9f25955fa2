#include <doctest.h>

#include "asmdpp/six_vertex.hpp"

using namespace asmdpp;

namespace {
int cnt(const TypeCounts& t, VertexType v) { return t[static_cast<std::size_t>(v)]; }
}  // namespace

TEST_CASE("type names round trip") {
    for (std::size_t k = 0; k < kVertexTypes; ++k) {
        auto t = static_cast<VertexType>(k);
        CHECK(type_from_name(type_name(t)) == t);
    }
    CHECK_THROWS_AS(type_from_name("d1"), std::invalid_argument);
}

TEST_CASE("bijection with ASMs") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto asms = enumerate_asms(n);
        auto configs = enumerate_configs(n);
        REQUIRE(configs.size() == asms.size());
        for (std::size_t k = 0; k < asms.size(); ++k) CHECK(six_v_to_asm(configs[k]) == asms[k]);
    }
}

TEST_CASE("single vertex is c1") {
    auto c = enumerate_configs(1);
    REQUIRE(c.size() == 1);
    CHECK(c[0].at(0, 0) == VertexType::c1);
}

TEST_CASE("vertex-count lemmas") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Asm& a : enumerate_asms(n)) {
            SixVertexConfig c = asm_to_6v(a);
            TypeCounts t = type_counts(c), r = first_row_counts(c);
            AsmStats s = asm_stats(a);
            CHECK(cnt(t, VertexType::a1) == s.nu);
            CHECK(cnt(t, VertexType::a2) == s.nu);
            CHECK(cnt(t, VertexType::c1) - int(n) == s.mu);
            CHECK(cnt(t, VertexType::c2) == s.mu);
            CHECK(cnt(t, VertexType::b1) == cnt(t, VertexType::b2));
            CHECK(cnt(r, VertexType::a1) == s.rho);
            CHECK(cnt(r, VertexType::c1) == 1);
        }
    }
}

TEST_CASE("the seven configurations for n = 3") {
    // listed together with the monomial x^{N_a} y^{N_c2} z^{first-row a}
    const std::vector<std::pair<std::vector<std::vector<int>>, const char*>> cases = {
        {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "1"},
        {{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}, "x^3z^2"},
        {{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, "x"},
        {{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, "x^2z^2"},
        {{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, "xz"},
        {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, "x^2z"},
        {{{0, 1, 0}, {1, -1, 1}, {0, 1, 0}}, "xyz"},
    };
    for (const auto& [rows, mono] : cases) {
        SixVertexConfig c = asm_to_6v(Asm::from_rows(rows));
        TypeCounts t = type_counts(c), r = first_row_counts(c);
        Exponents e{};
        e[X] = static_cast<std::uint16_t>(cnt(t, VertexType::a1));
        e[Y] = static_cast<std::uint16_t>(cnt(t, VertexType::c2));
        e[Z] = static_cast<std::uint16_t>(cnt(r, VertexType::a1));
        CHECK(MultiPoly::monomial(e, 1).to_string() == mono);
    }
}

TEST_CASE("inconsistent grids are rejected") {
    using V = VertexType;
    CHECK_THROWS_AS(SixVertexConfig::from_types({{V::a1}}), std::invalid_argument);
    CHECK_THROWS_AS(SixVertexConfig::from_types({{V::c1, V::b1}, {V::a1, V::c1}}), std::invalid_argument);
    CHECK_THROWS_AS(SixVertexConfig::from_types({{V::c1, V::b1}, {V::a2, V::a2}}), std::invalid_argument);
    CHECK_NOTHROW(SixVertexConfig::from_types({{V::c1, V::b1}, {V::b2, V::c1}}));
}

TEST_CASE("Izergin-Korepin determinant equals the partition function") {
    std::mt19937_64 rng(2024);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            IkPoint p = random_ik_point(n, rng);
            CHECK(partition_function(p) == ik_determinant(p));
        }
}

TEST_CASE("degenerate points are rejected") {
    IkPoint p{{Rational(1), Rational(-1)}, {Rational(2), Rational(3)}, Rational(5)};
    CHECK_THROWS_AS(check_ik_point(p), std::domain_error);
    IkPoint hit{{Rational(1)}, {Rational(2)}, Rational(2)};
    CHECK_THROWS_AS(ik_determinant(hit), std::domain_error);
}

TEST_CASE("homogeneous and refined specializations") {
    const Rational rho0 = make_rational(3, 2), q = 2, sigma = make_rational(-5, 3);
    for (std::size_t n = 1; n <= 4; ++n) {
        MultiPoly z = z_asm_brute(n);
        CHECK(partition_function(homogeneous_point(n, rho0, q)) == homogeneous_from_generating(n, z, rho0, q));
        CHECK(partition_function(refined_point(n, sigma, rho0, q)) == refined_from_generating(n, z, sigma, rho0, q));
    }
}
