#pragma once

#include "asmdpp/dpp.hpp"
#include "asmdpp/multipoly.hpp"

#include <string>
#include <vector>

namespace asmdpp {

struct Point {
    int x = 0, y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// Monotone path built from unit steps 'R' (x+1) and 'D' (y-1).
struct LatticePath {
    Point start;
    std::string steps;

    Point end() const;
    std::vector<Point> vertices() const;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

using PathFamily = std::vector<LatticePath>;

struct PathStats {
    int above = 0;  // right steps on or above the line through (i, i-1)
    int below = 0;  // right steps below it (nonnegative height only)
    int top = 0;    // right steps in row n-1
    int paths = 0;
};

// Family on G_{n,n}: path i runs from (0, lambda_{i-1} - 1) to (lambda_i, 0)
// with lambda_0 = n, one extra all-down path closes the family.
PathFamily dpp_to_nilp(const Dpp& d, std::size_t n);
Dpp nilp_to_dpp(const PathFamily& f, std::size_t n);
// Throws std::invalid_argument on wrong endpoints, leaving the grid or
// touching paths.
void validate_nilp(const PathFamily& f, std::size_t n);
PathStats nilp_statistics(const PathFamily& f, std::size_t n);

// Family on columns 1..n-1, rows -1..n-1: path i runs from (1, D_ii - 1)
// to (D_ii - 1, -1); right steps at height -1 are padding.
PathFamily dpp_to_nilp_prime(const Dpp& d, std::size_t n);
Dpp nilp_prime_to_dpp(const PathFamily& f, std::size_t n);
void validate_nilp_prime(const PathFamily& f, std::size_t n);
// nu = paths + above, mu = below.
PathStats nilp_prime_statistics(const PathFamily& f, std::size_t n);

// Weight of the right step starting at (a, h): x if a <= h, y otherwise,
// and x z in the top row when refined.
MultiPoly step_weight(std::size_t n, int a, int h, bool refined);
MultiPoly path_weight(const LatticePath& p, std::size_t n, bool refined);

// Closed form for the weighted sum over paths (0, j) -> (i, 0).
MultiPoly path_weight_sum(std::size_t n, std::size_t i, std::size_t j, bool refined);
// Same sum by walking every path.
MultiPoly path_weight_sum_direct(std::size_t n, std::size_t i, std::size_t j, bool refined);

// Weighted sum over all nonintersecting families, enumerated directly.
MultiPoly nilp_family_sum(std::size_t n, bool refined);
// det(-S + P) with P_ij = path_weight_sum(n, i, j); checked against
// nilp_family_sum (std::logic_error on mismatch).
MultiPoly lgv_nilp_sum(std::size_t n, bool refined);

}  // namespace asmdpp
