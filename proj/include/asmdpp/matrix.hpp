#pragma once

#include "asmdpp/multipoly.hpp"
#include "asmdpp/omega_poly.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace asmdpp {

inline bool is_zero(const Rational& r) { return r == 0; }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Submatrix on the given (ordered) row and column index lists.
    Matrix sub(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
        Matrix m(r.size(), c.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = (*this)(r[i], c[j]);
        return m;
    }

    template <class F>
    auto map(F f) const {
        using U = decltype(f((*this)(0, 0)));
        Matrix<U> m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same(b);
        Matrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_ || a.cols_ == 0) throw std::invalid_argument("matrix dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) {
                T acc = a(i, 0) * b(0, j);
                for (std::size_t k = 1; k < a.cols_; ++k)
                    if (!is_zero(a(i, k)) && !is_zero(b(k, j))) acc += a(i, k) * b(k, j);
                r(i, j) = acc;
            }
        return r;
    }

private:
    void check_same(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using PolyMatrix = Matrix<MultiPoly>;
using OmegaMatrix = Matrix<OmegaPoly>;
using RatMatrix = Matrix<Rational>;

inline constexpr std::size_t kMaxMinorDet = 20;

// Division-free determinant by Laplace expansion along rows, memoized on the
// set of columns still available. O(2^n n) ring multiplications.
template <class T>
T det_minor_expansion(const Matrix<T>& a) {
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    if (n > kMaxMinorDet) throw std::invalid_argument("matrix too large for minor expansion");
    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    std::vector<T> memo(std::size_t(1) << n);
    // Masks of popcount p describe the bottom p rows.
    std::vector<std::vector<std::uint32_t>> by_count(n + 1);
    for (std::uint32_t m = 1; m <= full; ++m) by_count[std::popcount(m)].push_back(m);
    for (std::uint32_t m : by_count[1]) {
        memo[m] = a(n - 1, std::countr_zero(m));
    }
    for (std::size_t p = 2; p <= n; ++p) {
        std::size_t row = n - p;
        for (std::uint32_t m : by_count[p]) {
            bool have = false;
            T acc{};
            int rank = 0;
            for (std::uint32_t rest = m; rest; rest &= rest - 1, ++rank) {
                std::size_t c = std::countr_zero(rest);
                std::uint32_t sub = m & ~(std::uint32_t(1) << c);
                if (is_zero(a(row, c)) || is_zero(memo[sub])) continue;
                T term = a(row, c) * memo[sub];
                if (rank % 2) term = -term;
                if (have)
                    acc += term;
                else
                    acc = term, have = true;
            }
            if (!have) acc = a(row, 0) - a(row, 0);
            memo[m] = std::move(acc);
        }
        // free the layer below; it is no longer needed
        for (std::uint32_t m : by_count[p - 1]) memo[m] = T{};
    }
    return memo[full];
}

MultiPoly det_poly(const PolyMatrix& a);
OmegaPoly det_omega(const OmegaMatrix& a);
// Fraction-free elimination; every division is checked to be exact.
MultiPoly det_bareiss(const PolyMatrix& a);
Rational det_rat(const RatMatrix& a);

RatMatrix eval_matrix(const PolyMatrix& a, std::span<const Rational> point);
RatMatrix eval_matrix(const OmegaMatrix& a, std::span<const Rational> point, const Rational& omega);

PolyMatrix poly_identity(std::size_t n);
// S_{ij} = delta_{i, j+1}
PolyMatrix poly_shift(std::size_t n);
RatMatrix rat_identity(std::size_t n);

// L(alpha, beta)_{ij} = C(i, j) alpha^i beta^j.
RatMatrix l_matrix(std::size_t n, const Rational& alpha, const Rational& beta);

}  // namespace asmdpp
