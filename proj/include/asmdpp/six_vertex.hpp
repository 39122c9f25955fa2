#pragma once

#include "asmdpp/asm.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace asmdpp {

enum class VertexType { a1, a2, b1, b2, c1, c2 };
inline constexpr std::size_t kVertexTypes = 6;

const char* type_name(VertexType t);
VertexType type_from_name(const std::string& name);

// Edge labels around a vertex: 0 is a right/up arrow, 1 a left/down arrow.
struct EdgeLabels {
    int left, right, top, bottom;
};
EdgeLabels edge_labels(VertexType t);

// Six-vertex configuration with domain wall boundary conditions.
class SixVertexConfig {
public:
    // Validates arrow conservation between neighbours and the boundary.
    static SixVertexConfig from_types(const std::vector<std::vector<VertexType>>& grid);

    std::size_t n() const { return grid_.size(); }
    VertexType at(std::size_t i, std::size_t j) const { return grid_[i][j]; }
    const std::vector<std::vector<VertexType>>& grid() const { return grid_; }

    friend bool operator==(const SixVertexConfig&, const SixVertexConfig&) = default;

private:
    explicit SixVertexConfig(std::vector<std::vector<VertexType>> g) : grid_(std::move(g)) {}
    std::vector<std::vector<VertexType>> grid_;
};

SixVertexConfig asm_to_6v(const Asm& a);
Asm six_v_to_asm(const SixVertexConfig& c);
std::vector<SixVertexConfig> enumerate_configs(std::size_t n);

// Indexed by VertexType.
using TypeCounts = std::array<int, kVertexTypes>;
TypeCounts type_counts(const SixVertexConfig& c);
// Same, restricted to the first row.
TypeCounts first_row_counts(const SixVertexConfig& c);

// Spectral parameters: u_i = s_i^2 per row, v_j = t_j^2 per column.
struct IkPoint {
    std::vector<Rational> s, t;
    Rational q;
};

// Throws std::domain_error if the determinant formula is singular at p.
void check_ik_point(const IkPoint& p);
IkPoint random_ik_point(std::size_t n, std::mt19937_64& rng);

// a = uq - 1/(vq), b = u/q - q/v, c = (q^2 - q^-2) s/t.
Rational vertex_weight(VertexType t, const Rational& s, const Rational& t_col, const Rational& q);

// Sum over configurations of the product of vertex weights.
Rational partition_function(const IkPoint& p);
// Izergin-Korepin determinant evaluated at p.
Rational ik_determinant(const IkPoint& p);

// Homogeneous point: every s_i = t_j = rho0.
struct HomogeneousWeights {
    Rational a, b, c;
};
HomogeneousWeights homogeneous_weights(const Rational& rho0, const Rational& q);
// b^{n(n-1)} c^n Z_ASM(n, (a/b)^2, (c/b)^2, 1)
Rational homogeneous_from_generating(std::size_t n, const MultiPoly& z_asm, const Rational& rho0, const Rational& q);
// First row parameter sigma, everything else rho0:
// b^{(n-1)^2} b'^{n-1} c^{n-1} c' Z_ASM(n, (a/b)^2, (c/b)^2, a' b / (a b'))
Rational refined_from_generating(std::size_t n, const MultiPoly& z_asm, const Rational& sigma, const Rational& rho0,
                                 const Rational& q);
IkPoint homogeneous_point(std::size_t n, const Rational& rho0, const Rational& q);
IkPoint refined_point(std::size_t n, const Rational& sigma, const Rational& rho0, const Rational& q);

}  // namespace asmdpp
