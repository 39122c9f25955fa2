#pragma once

#include "asmdpp/asm.hpp"
#include "asmdpp/dpp.hpp"

#include <vector>

namespace asmdpp {

// prod_{i=0}^{n-1} (3i+1)! / (n+i)!
Integer asm_total(std::size_t n);
// Number of ASMs of order n whose first-row 1 has k zeros to its left.
Integer refined_total(std::size_t n, std::size_t k);
// prod_{i=1}^{n} (6i-2)! / (2n+2i)!
Integer vsasm_total(std::size_t n);

// prod_{i=0}^{n-1} [3i+1]_q! / [n+i]_q!, as a polynomial in q.
MultiPoly q_product(std::size_t n);
// [n]_{xz} [n-1]_x!
MultiPoly z_mu_zero(std::size_t n);

// Statistic-preserving bijection between permutation matrices and DPPs
// without special parts.
Dpp m0_asm_to_dpp(const Asm& a);
Asm m0_dpp_to_asm(const Dpp& d, std::size_t n);

struct StantonCounts {
    Integer even_minus_odd, mod4_gap, half_turn, quarter_turn;
};
StantonCounts stanton_parity(std::size_t n);

// Number of ASMs of the given order fixed by the vertical reflection.
Integer count_reflection_invariant(std::size_t order);
// The multiset of DPP statistics (nu, mu, rho) is stable under
// (nu, mu, rho) -> (n(n-1)/2 - nu - mu, mu, n-1-rho).
bool dpp_symmetry_multiset_holds(std::size_t n);

struct TableRow {
    int p, m, k;
    Integer asm_count, dpp_count;
    bool equal() const { return asm_count == dpp_count; }
};
// Every (nu, mu, rho) cell occurring on either side, sorted.
std::vector<TableRow> stat_table(std::size_t n);

}  // namespace asmdpp
