#include "asmdpp/matrix.hpp"

namespace asmdpp {

MultiPoly det_poly(const PolyMatrix& a) {
    MultiPoly d = det_minor_expansion(a);
    // a zero result may come back with a default arity; normalize
    if (d.is_zero()) return MultiPoly(a(0, 0).arity());
    return d;
}

OmegaPoly det_omega(const OmegaMatrix& a) { return det_minor_expansion(a); }

MultiPoly det_bareiss(const PolyMatrix& input) {
    if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    PolyMatrix a = input;
    std::size_t ar = a(0, 0).arity();
    MultiPoly prev = MultiPoly::constant(1, ar);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return MultiPoly(ar);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).divide_exact(prev);
            a(i, k) = MultiPoly(ar);
        }
        prev = a(k, k);
    }
    MultiPoly d = a(n - 1, n - 1);
    return negate ? -d : d;
}

Rational det_rat(const RatMatrix& input) {
    if (!input.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    RatMatrix a = input;
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

RatMatrix eval_matrix(const PolyMatrix& a, std::span<const Rational> point) {
    return a.map([&](const MultiPoly& p) { return p.eval(point); });
}

RatMatrix eval_matrix(const OmegaMatrix& a, std::span<const Rational> point, const Rational& omega) {
    return a.map([&](const OmegaPoly& p) { return p.eval(point, omega); });
}

PolyMatrix poly_identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(1);
    return m;
}

PolyMatrix poly_shift(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = MultiPoly::constant(1);
    return m;
}

RatMatrix rat_identity(std::size_t n) {
    RatMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix l_matrix(std::size_t n, const Rational& alpha, const Rational& beta) {
    RatMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            m(i, j) = Rational(binom(long(i), long(j))) * rpow(alpha, long(i)) * rpow(beta, long(j));
    return m;
}

}  // namespace asmdpp
