#pragma once

#include "asmdpp/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asmdpp {

// Global variable order. Polynomials of lower arity use a prefix of it.
enum Var : std::size_t { X = 0, Y = 1, Z = 2, W = 3, Q = 4 };
inline constexpr std::size_t kMaxVars = 5;
inline constexpr char kVarNames[kMaxVars + 1] = "xyzwq";

using Exponents = std::array<std::uint16_t, kMaxVars>;

unsigned total_degree(const Exponents& e);

// Printing order: total degree ascending, then x-exponent descending,
// then y, z, w, q. The last element is also the leading term used by
// exact division (this is a valid monomial order).
struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    using TermMap = std::map<Exponents, Integer, TermOrder>;

    explicit MultiPoly(std::size_t arity = kMaxVars);

    static MultiPoly constant(const Integer& c, std::size_t arity = kMaxVars);
    static MultiPoly variable(Var v, std::size_t arity = kMaxVars);
    static MultiPoly monomial(const Exponents& e, const Integer& c, std::size_t arity = kMaxVars);
    // Parses the printed form, e.g. "1+x^3z^2-2xy". Whitespace and '*' are allowed.
    static MultiPoly parse(std::string_view text, std::size_t arity = kMaxVars);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Integer coefficient(const Exponents& e) const;
    unsigned degree(Var v) const;
    unsigned total_degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Integer& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
    friend MultiPoly operator*(const Integer& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned e) const;

    // Substitutes an integer for one variable.
    MultiPoly specialize(Var v, const Integer& value) const;
    Rational eval(std::span<const Rational> point) const;

    // Throws std::domain_error if `d` does not divide *this exactly.
    MultiPoly divide_exact(const MultiPoly& d) const;

    std::string to_string() const;

    // Adds c * x^e without building an intermediate polynomial.
    void add_term(const Exponents& e, const Integer& c);

private:
    void check_arity(const MultiPoly& o) const;

    std::size_t arity_;
    TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

// Shorthands for building polynomials in (x, y, z, w, q).
MultiPoly px(unsigned e = 1);
MultiPoly py(unsigned e = 1);
MultiPoly pz(unsigned e = 1);
MultiPoly pw(unsigned e = 1);
MultiPoly pq(unsigned e = 1);
MultiPoly pconst(const Integer& c);

}  // namespace asmdpp
