#pragma once

#include "asmdpp/matrix.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace asmdpp {

enum class MatrixFamily { M_ASM, M_DPP, M_BAR, M_BAR_W, M_PRIME, M_DPRIME, S, B, L };

const char* family_name(MatrixFamily f);
MatrixFamily family_from_name(const std::string& name);

// Indices run over 0..n-1. "refined" selects the z-dependent last column;
// the unrefined matrices are the z = 1 versions.
OmegaMatrix m_asm(std::size_t n, bool refined = true);
OmegaMatrix m_dpp(std::size_t n, bool refined = true);
PolyMatrix m_bar(std::size_t n, bool refined = true);
PolyMatrix m_bar_w(std::size_t n, bool refined = true);
PolyMatrix m_prime(std::size_t n, bool refined = true);
PolyMatrix m_dprime(std::size_t n, bool refined = true);
PolyMatrix b_matrix(std::size_t n);       // C(i-1, i-j) y^{i-j}
PolyMatrix l_matrix_poly(std::size_t n);  // L(alpha, beta) with alpha = x, beta = y

using AnyMatrix = std::variant<PolyMatrix, OmegaMatrix>;
AnyMatrix build(MatrixFamily f, std::size_t n, bool refined = true);

// det of M-bar: the DPP generating polynomial in (x, y, z).
MultiPoly genfunc_det(std::size_t n);
// det of M-bar with the w factor: sum of w^{rows+1} x^nu y^mu z^rho.
MultiPoly genfunc_det_w(std::size_t n);

// (I + (x - w y - 1) S) M_ASM - M_DPP (I + (w - 1) S^t)
OmegaMatrix omega_relation_difference(const OmegaMatrix& asm_m, const OmegaMatrix& dpp_m);
bool omega_relation_holds(const OmegaMatrix& asm_m, const OmegaMatrix& dpp_m);
bool check_omega_relation(std::size_t n, bool refined = true);

// det M_ASM at random rational (w, y, z) with x = w(yw + 1 - y)/(w - 1),
// compared to (1 + w(z - 1)) Z_ASM(x, y, z). Returns the number of
// disagreeing trials.
int check_prop_asmdet_rational(std::size_t n, int trials, std::uint64_t seed, bool refined = true);

// Rational spot check: det M_ASM = det M_DPP on the variety y w^2 + (1-x-y) w + x = 0.
int check_omega_spot(std::size_t n, int points, std::uint64_t seed);

// (I - S) M' = M-bar (I - S^t)
bool check_relation_prime(std::size_t n, bool refined = true);
// B(y) M'' = M-bar
bool check_relation_dprime(std::size_t n, bool refined = true);

// c^n det(-b^{2i} delta_{i,j+1} + sum_k C(i-1,i-k) C(j+1,k) a^{2k} c^{2(i-k)})
Rational six_vertex_weight_det(std::size_t n, const Rational& a, const Rational& b, const Rational& c);

}  // namespace asmdpp
