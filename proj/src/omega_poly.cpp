#include "asmdpp/omega_poly.hpp"

#include <stdexcept>

namespace asmdpp {

OmegaPoly::OmegaPoly(const MultiPoly& c0) : c_{c0, MultiPoly(c0.arity()), MultiPoly(c0.arity())} {}

OmegaPoly::OmegaPoly(const MultiPoly& c0, const MultiPoly& c1, const MultiPoly& c2) : c_{c0, c1, c2} {
    if (c0.arity() != c1.arity() || c0.arity() != c2.arity())
        throw std::invalid_argument("polynomial arity mismatch");
}

OmegaPoly OmegaPoly::omega() {
    return OmegaPoly(MultiPoly(), MultiPoly::constant(1), MultiPoly());
}

int OmegaPoly::degree() const {
    for (int k = 2; k >= 0; --k)
        if (!c_[k].is_zero()) return k;
    return -1;
}

OmegaPoly& OmegaPoly::operator+=(const OmegaPoly& o) {
    for (std::size_t k = 0; k < 3; ++k) c_[k] += o.c_[k];
    return *this;
}

OmegaPoly& OmegaPoly::operator-=(const OmegaPoly& o) {
    for (std::size_t k = 0; k < 3; ++k) c_[k] -= o.c_[k];
    return *this;
}

OmegaPoly OmegaPoly::operator-() const { return OmegaPoly(-c_[0], -c_[1], -c_[2]); }

OmegaPoly operator*(const OmegaPoly& a, const OmegaPoly& b) {
    int da = a.degree(), db = b.degree();
    std::size_t arity = a.c_[0].arity();
    if (da < 0 || db < 0) return OmegaPoly(MultiPoly(arity));
    if (da + db > int(OmegaPoly::kMaxDegree)) throw std::domain_error("omega degree exceeds 2");
    OmegaPoly r{MultiPoly(arity)};
    for (int i = 0; i <= da; ++i)
        for (int j = 0; j <= db; ++j) {
            if (a.c_[i].is_zero() || b.c_[j].is_zero()) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    return r;
}

Rational OmegaPoly::eval(std::span<const Rational> point, const Rational& omega) const {
    return c_[0].eval(point) + omega * (c_[1].eval(point) + omega * c_[2].eval(point));
}

MultiPoly OmegaPoly::substitute(const MultiPoly& omega) const {
    return c_[0] + omega * (c_[1] + omega * c_[2]);
}

std::string OmegaPoly::to_string() const {
    return "[" + c_[0].to_string() + "; " + c_[1].to_string() + "; " + c_[2].to_string() + "]";
}

bool omega_congruent_zero(const OmegaPoly& d) {
    std::size_t ar = d.coeff(0).arity();
    MultiPoly x = MultiPoly::variable(X, ar), y = MultiPoly::variable(Y, ar);
    MultiPoly one = MultiPoly::constant(1, ar);
    // Remainder modulo y w^2 + (1-x-y) w + x is
    //   (d1 - d2 (1-x-y)/y) w + (d0 - d2 x/y).
    return y * d.coeff(0) == x * d.coeff(2) && y * d.coeff(1) == (one - x - y) * d.coeff(2);
}

}  // namespace asmdpp
