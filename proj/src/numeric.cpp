#include "asmdpp/numeric.hpp"

#include <stdexcept>

namespace asmdpp {

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binom(long a, long b) {
    if (b < 0) return 0;
    if (b == 0) return 1;
    if (a >= 0) {
        if (b > a) return 0;
        Integer r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
        return r;
    }
    Integer r = binom(b - a - 1, b);
    return (b % 2 == 0) ? r : Integer(-r);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer to_integer(const Rational& r) {
    if (r.get_den() != 1) throw std::domain_error("rational is not integral: " + r.get_str());
    return r.get_num();
}

std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

Rational rpow(const Rational& r, long e) {
    if (e < 0) {
        if (r == 0) throw std::domain_error("zero to a negative power");
        return rpow(Rational(1) / r, -e);
    }
    Rational result = 1, base = r;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

}  // namespace asmdpp
