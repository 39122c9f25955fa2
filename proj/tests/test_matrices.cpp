#include <doctest.h>

#include "asmdpp/asm.hpp"
#include "asmdpp/dpp.hpp"
#include "asmdpp/matrices.hpp"
#include "asmdpp/six_vertex.hpp"

using namespace asmdpp;

TEST_CASE("family names") {
    for (const char* name : {"M_ASM", "M_DPP", "M_BAR", "M_BAR_W", "M_PRIME", "M_DPRIME", "S", "B", "L"})
        CHECK(std::string(family_name(family_from_name(name))) == name);
    CHECK_THROWS_AS(family_from_name("M_FOO"), std::invalid_argument);
    CHECK_THROWS_AS(build(MatrixFamily::S, 0), std::invalid_argument);
}

TEST_CASE("M_ASM for n = 2 by hand") {
    OmegaMatrix m = m_asm(2, false);
    CHECK(m(0, 0).to_string() == "[1; 0; 0]");
    CHECK(m(1, 1).to_string() == "[1; -1+x+y; 0]");
    CHECK(m(1, 0).to_string() == "[0; y; 0]");
}

TEST_CASE("determinant of M-bar is the DPP polynomial") {
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(genfunc_det(n) == z_dpp_brute(n));
        CHECK(det_poly(m_bar(n, false)) == z_dpp_brute(n).specialize(Z, 1));
    }
    CHECK(genfunc_det(3).to_string() == "1+x+xz+x^2z+xyz+x^2z^2+x^3z^2");
}

TEST_CASE("w-refined determinant") {
    for (std::size_t n = 1; n <= 5; ++n) CHECK(genfunc_det_w(n) == z_dpp_brute_w(n));
}

TEST_CASE("determinant of M_DPP carries the factor") {
    for (std::size_t n = 1; n <= 5; ++n) {
        OmegaPoly factor(pconst(1), pz() - pconst(1));
        CHECK(det_omega(m_dpp(n, true)) == factor * OmegaPoly(genfunc_det(n)));
    }
}

TEST_CASE("omega relation") {
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(check_omega_relation(n, true));
        CHECK(check_omega_relation(n, false));
    }
}

TEST_CASE("omega relation negative control") {
    for (std::size_t n = 2; n <= 4; ++n) {
        OmegaMatrix a = m_asm(n, true);
        a(n - 1, 0) += OmegaPoly(px());
        CHECK_FALSE(omega_relation_holds(a, m_dpp(n, true)));
    }
}

TEST_CASE("rational determinant check on the variety") {
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(check_prop_asmdet_rational(n, 5, 100 + n, true) == 0);
        CHECK(check_prop_asmdet_rational(n, 5, 200 + n, false) == 0);
        CHECK(check_omega_spot(n, 4, 300 + n) == 0);
    }
}

TEST_CASE("auxiliary matrix relations") {
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(check_relation_prime(n, true));
        CHECK(check_relation_prime(n, false));
        CHECK(check_relation_dprime(n, true));
        CHECK(check_relation_dprime(n, false));
    }
}

TEST_CASE("symbolic L matrix") {
    for (std::size_t n = 1; n <= 5; ++n) {
        MultiPoly expect = (px() * py()).pow(unsigned(n * (n - 1) / 2));
        CHECK(det_poly(l_matrix_poly(n)) == expect);
    }
}

TEST_CASE("six-vertex weight determinant") {
    const Rational rho0 = make_rational(2, 3), q = 3;
    for (std::size_t n = 1; n <= 5; ++n) {
        auto [a, b, c] = homogeneous_weights(rho0, q);
        CHECK(six_vertex_weight_det(n, a, b, c) == partition_function(homogeneous_point(n, rho0, q)));
    }
}
