#pragma once

#include "asmdpp/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace testutil {

using namespace asmdpp;

inline MultiPoly random_poly(std::mt19937_64& rng, int terms = 3, int max_exp = 2) {
    std::uniform_int_distribution<int> coeff(-4, 4), ex(0, max_exp);
    MultiPoly p;
    for (int t = 0; t < terms; ++t) {
        Exponents e{};
        e[X] = ex(rng), e[Y] = ex(rng), e[Z] = ex(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

inline PolyMatrix random_poly_matrix(std::mt19937_64& rng, std::size_t n, int terms = 2) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(rng, terms, 1);
    return m;
}

inline Rational random_rational(std::mt19937_64& rng, bool nonzero = true) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    while (true) {
        Rational r = make_rational(num(rng), den(rng));
        if (!nonzero || r != 0) return r;
    }
}

// Leibniz sum over permutations; slow but obviously right.
template <class T>
T leibniz_det(const Matrix<T>& a, const T& zero) {
    std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        T term = a(0, perm[0]);
        for (std::size_t i = 1; i < n; ++i) term = term * a(i, perm[i]);
        if (inv % 2)
            total -= term;
        else
            total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace testutil
