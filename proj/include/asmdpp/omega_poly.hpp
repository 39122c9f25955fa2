#pragma once

#include "asmdpp/multipoly.hpp"

#include <array>

namespace asmdpp {

// c0 + c1*omega + c2*omega^2 with polynomial coefficients. Anything that
// would need omega^3 is a hard error (std::domain_error).
class OmegaPoly {
public:
    static constexpr std::size_t kMaxDegree = 2;

    OmegaPoly() : c_{MultiPoly(), MultiPoly(), MultiPoly()} {}
    OmegaPoly(const MultiPoly& c0);  // NOLINT(implicit)
    OmegaPoly(const MultiPoly& c0, const MultiPoly& c1, const MultiPoly& c2 = MultiPoly());

    static OmegaPoly omega();

    const MultiPoly& coeff(std::size_t k) const { return c_.at(k); }
    // -1 for the zero element.
    int degree() const;
    bool is_zero() const { return degree() < 0; }

    OmegaPoly& operator+=(const OmegaPoly& o);
    OmegaPoly& operator-=(const OmegaPoly& o);
    OmegaPoly operator-() const;
    friend OmegaPoly operator+(OmegaPoly a, const OmegaPoly& b) { return a += b; }
    friend OmegaPoly operator-(OmegaPoly a, const OmegaPoly& b) { return a -= b; }
    friend OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b);
    OmegaPoly& operator*=(const OmegaPoly& o) { return *this = *this * o; }
    friend bool operator==(const OmegaPoly& a, const OmegaPoly& b) { return a.c_ == b.c_; }

    Rational eval(std::span<const Rational> point, const Rational& omega) const;
    // Substitutes a polynomial value for omega (e.g. omega -> x at the end of a check).
    MultiPoly substitute(const MultiPoly& omega) const;

    std::string to_string() const;

private:
    std::array<MultiPoly, 3> c_;
};

inline bool is_zero(const OmegaPoly& p) { return p.is_zero(); }

// True iff d vanishes modulo y*w^2 + (1-x-y)*w + x over Q(x, y).
bool omega_congruent_zero(const OmegaPoly& d);

}  // namespace asmdpp
