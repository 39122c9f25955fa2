#include <doctest.h>

#include "asmdpp/formulas.hpp"

#include <set>

using namespace asmdpp;

TEST_CASE("product formulas") {
    const long asm_n[] = {1, 2, 7, 42, 429, 7436, 218348};
    for (std::size_t n = 1; n <= 7; ++n) CHECK(asm_total(n) == asm_n[n - 1]);
    CHECK(vsasm_total(1) == 1);
    CHECK(vsasm_total(2) == 3);
    CHECK(vsasm_total(3) == 26);
    CHECK(refined_total(3, 0) == 2);
    CHECK(refined_total(3, 1) == 3);
    CHECK(refined_total(3, 2) == 2);
    CHECK_THROWS_AS(refined_total(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(asm_total(0), std::invalid_argument);
}

TEST_CASE("refined counts sum to the total and match enumeration") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<Integer> by_k(n, 0);
        for_each_asm(n, [&](const Asm& a) { by_k[std::size_t(asm_stats(a).rho)] += 1; });
        Integer sum = 0;
        for (std::size_t k = 0; k < n; ++k) {
            CHECK(refined_total(n, k) == by_k[k]);
            sum += refined_total(n, k);
        }
        CHECK(sum == asm_total(n));
    }
}

TEST_CASE("q-product matches the sum of parts") {
    for (std::size_t n = 1; n <= 6; ++n) CHECK(q_product(n) == q_sum_of_parts(n));
}

TEST_CASE("m = 0 generating polynomial") {
    CHECK(z_mu_zero(1).to_string() == "1");
    CHECK(z_mu_zero(3) == (pconst(1) + px() * pz() + px(2) * pz(2)) * (pconst(1) + px()));
    for (std::size_t n = 1; n <= 6; ++n) {
        MultiPoly m0, z = z_asm_brute(n);
        for (const auto& [e, c] : z.terms())
            if (e[Y] == 0) m0.add_term(e, c);
        CHECK(z_mu_zero(n) == m0);
    }
}

TEST_CASE("m = 0 bijection") {
    CHECK(m0_asm_to_dpp(Asm::permutation({1, 0})) == Dpp::from_rows({{2}}));
    for (std::size_t n = 1; n <= 6; ++n) {
        std::set<std::string> images;
        for_each_asm(n, [&](const Asm& a) {
            if (!a.is_permutation()) return;
            Dpp d = m0_asm_to_dpp(a);
            AsmStats s = asm_stats(a);
            DppStats t = dpp_stats(d, n);
            CHECK(t == DppStats{s.nu, s.mu, s.rho});
            CHECK(m0_dpp_to_asm(d, n) == a);
            images.insert(d.to_compact());
        });
        CHECK(images.size() == std::size_t(factorial(long(n)).get_si()));
    }
    CHECK_THROWS_AS(m0_asm_to_dpp(Asm::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(m0_dpp_to_asm(Dpp::from_rows({{3, 1}}), 3), std::invalid_argument);
}

TEST_CASE("parity identities") {
    StantonCounts s = stanton_parity(3);
    CHECK(s.even_minus_odd == 3);
    CHECK(s.mod4_gap == 1);
    CHECK(s.half_turn == 3);
    CHECK(s.quarter_turn == 1);
    for (std::size_t n = 1; n <= 5; ++n) {
        StantonCounts t = stanton_parity(n);
        CHECK(t.even_minus_odd == t.half_turn);
        CHECK(t.mod4_gap == t.quarter_turn);
    }
}

TEST_CASE("statistic table") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const TableRow& r : stat_table(n)) CHECK(r.equal());
    bool found = false;
    for (const TableRow& r : stat_table(5))
        if (r.p == 3 && r.m == 1 && r.k == 2) {
            found = true;
            CHECK(r.asm_count == 10);
        }
    CHECK(found);
}

TEST_CASE("reflection symmetry") {
    CHECK(count_reflection_invariant(3) == vsasm_total(1));
    CHECK(count_reflection_invariant(5) == vsasm_total(2));
    CHECK(count_reflection_invariant(4) == 0);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(dpp_symmetry_multiset_holds(n));
}
