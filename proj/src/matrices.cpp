#include "asmdpp/matrices.hpp"

#include "asmdpp/asm.hpp"
#include "asmdpp/lattice_paths.hpp"

#include <random>
#include <stdexcept>

namespace asmdpp {

namespace {

constexpr const char* kFamilyNames[] = {"M_ASM", "M_DPP", "M_BAR", "M_BAR_W", "M_PRIME", "M_DPRIME", "S", "B", "L"};

MultiPoly mono(const Integer& c, long ex, long ey, long ez = 0) {
    if (ex < 0 || ey < 0 || ez < 0) throw std::logic_error("negative exponent in matrix formula");
    Exponents e{};
    e[X] = static_cast<std::uint16_t>(ex);
    e[Y] = static_cast<std::uint16_t>(ey);
    e[Z] = static_cast<std::uint16_t>(ez);
    return MultiPoly::monomial(e, c);
}

MultiPoly delta(std::size_t a, std::size_t b) { return a == b ? pconst(1) : MultiPoly(); }

void check_size(std::size_t n) {
    if (n == 0) throw std::invalid_argument("matrix size must be positive");
}

// sum_k C(i,k) C(j,k) x^k y^{i-k}
MultiPoly asm_sum(long i, long j) {
    MultiPoly s;
    for (long k = 0; k <= std::min(i, j); ++k) s += mono(binom(i, k) * binom(j, k), k, i - k);
    return s;
}

// sum_k sum_l C(i,k) C(n-l-2,k-l) x^k y^{i-k} z^{l+1}
MultiPoly asm_sum_last(long n, long i) {
    MultiPoly s;
    for (long k = 0; k <= i; ++k)
        for (long l = 0; l <= k; ++l) s += mono(binom(i, k) * binom(n - l - 2, k - l), k, i - k, l + 1);
    return s;
}

PolyMatrix bar_impl(std::size_t n, bool refined, bool with_w) {
    check_size(n);
    PolyMatrix m(n, n);
    MultiPoly wv = pw();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly p = path_weight_sum(n, i, j, refined);
            if (with_w) p *= wv;
            m(i, j) = p - (i == j + 1 ? pconst(1) : MultiPoly());
        }
    return m;
}

}  // namespace

const char* family_name(MatrixFamily f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

MatrixFamily family_from_name(const std::string& name) {
    for (std::size_t k = 0; k < std::size(kFamilyNames); ++k)
        if (name == kFamilyNames[k]) return static_cast<MatrixFamily>(k);
    throw std::invalid_argument("unknown matrix family '" + name + "'");
}

OmegaMatrix m_asm(std::size_t n, bool refined) {
    check_size(n);
    OmegaMatrix m(n, n);
    OmegaPoly w = OmegaPoly::omega(), one(pconst(1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly s = (refined && j + 1 == n) ? asm_sum_last(long(n), long(i)) : asm_sum(long(i), long(j));
            m(i, j) = (one - w) * OmegaPoly(delta(i, j)) + w * OmegaPoly(s);
        }
    return m;
}

OmegaMatrix m_dpp(std::size_t n, bool refined) {
    PolyMatrix bar = m_bar(n, refined);
    OmegaMatrix m = bar.map([](const MultiPoly& p) { return OmegaPoly(p); });
    if (refined) {
        // (1 + w(z - 1)) multiplies the path sum of the last column only
        OmegaPoly factor(pconst(1), pz() - pconst(1));
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = factor * OmegaPoly(path_weight_sum(n, i, n - 1, true));
    }
    return m;
}

PolyMatrix m_bar(std::size_t n, bool refined) { return bar_impl(n, refined, false); }
PolyMatrix m_bar_w(std::size_t n, bool refined) { return bar_impl(n, refined, true); }

PolyMatrix m_prime(std::size_t n, bool refined) {
    check_size(n);
    PolyMatrix m(n, n);
    const long ln = long(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long li = long(i), lj = long(j);
            MultiPoly s = delta(i, j);
            if (refined && j + 1 == n) {
                for (long k = 0; k <= li - 1; ++k)
                    for (long l = 0; l <= k; ++l)
                        for (long mm = 0; mm <= l; ++mm)
                            s += mono(binom(ln - mm - 2, l - mm) * binom(k, l), l + 1, k - l, mm + 1);
            } else {
                for (long k = 0; k <= li - 1; ++k)
                    for (long l = 0; l <= std::min(lj, k); ++l) s += mono(binom(lj, l) * binom(k, l), l + 1, k - l);
            }
            m(i, j) = s;
        }
    return m;
}

PolyMatrix m_dprime(std::size_t n, bool refined) {
    check_size(n);
    PolyMatrix m(n, n);
    const long ln = long(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long li = long(i), lj = long(j);
            MultiPoly s;
            if (refined && j + 1 == n) {
                for (long k = 0; k <= li; ++k) s += mono(binom(ln - k - 1, li - k), li, 0, k);
            } else {
                s = mono(binom(lj + 1, li), li, 0);
                long e = li - lj - 1;
                if (e >= 0) {
                    // (-y)^e
                    Integer c = binom(li - 1, e);
                    if (e % 2) c = -c;
                    s -= mono(c, 0, e);
                }
            }
            m(i, j) = s;
        }
    return m;
}

PolyMatrix b_matrix(std::size_t n) {
    check_size(n);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = mono(binom(long(i) - 1, long(i) - long(j)), 0, long(i - j));
    return m;
}

PolyMatrix l_matrix_poly(std::size_t n) {
    check_size(n);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = mono(binom(long(i), long(j)), long(i), long(j));
    return m;
}

AnyMatrix build(MatrixFamily f, std::size_t n, bool refined) {
    switch (f) {
        case MatrixFamily::M_ASM: return m_asm(n, refined);
        case MatrixFamily::M_DPP: return m_dpp(n, refined);
        case MatrixFamily::M_BAR: return m_bar(n, refined);
        case MatrixFamily::M_BAR_W: return m_bar_w(n, refined);
        case MatrixFamily::M_PRIME: return m_prime(n, refined);
        case MatrixFamily::M_DPRIME: return m_dprime(n, refined);
        case MatrixFamily::S: check_size(n); return poly_shift(n);
        case MatrixFamily::B: return b_matrix(n);
        case MatrixFamily::L: return l_matrix_poly(n);
    }
    throw std::invalid_argument("unknown matrix family");
}

MultiPoly genfunc_det(std::size_t n) { return det_poly(m_bar(n, true)); }
MultiPoly genfunc_det_w(std::size_t n) { return det_poly(m_bar_w(n, true)); }

OmegaMatrix omega_relation_difference(const OmegaMatrix& asm_m, const OmegaMatrix& dpp_m) {
    const std::size_t n = asm_m.rows();
    if (!asm_m.square() || !dpp_m.square() || dpp_m.rows() != n) throw std::invalid_argument("matrix dimension mismatch");
    OmegaPoly w = OmegaPoly::omega(), one(pconst(1));
    OmegaMatrix left(n, n), right(n, n);
    OmegaPoly lfac = OmegaPoly(px() - pconst(1)) - w * OmegaPoly(py());
    OmegaPoly rfac = w - one;
    for (std::size_t i = 0; i < n; ++i) {
        left(i, i) = one;
        right(i, i) = one;
        if (i >= 1) left(i, i - 1) = lfac;   // S: delta_{i, j+1}
        if (i + 1 < n) right(i, i + 1) = rfac;  // S^t: delta_{j, i+1}
    }
    return left * asm_m - dpp_m * right;
}

bool omega_relation_holds(const OmegaMatrix& asm_m, const OmegaMatrix& dpp_m) {
    OmegaMatrix d = omega_relation_difference(asm_m, dpp_m);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (!omega_congruent_zero(d(i, j))) return false;
    return true;
}

bool check_omega_relation(std::size_t n, bool refined) {
    return omega_relation_holds(m_asm(n, refined), m_dpp(n, refined));
}

namespace {

Rational draw(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 7);
    return make_rational(num(rng), den(rng));
}

// (w, x, y, z) on the variety, with w not in {0, 1}
std::vector<Rational> variety_point(std::mt19937_64& rng, Rational& w) {
    while (true) {
        w = draw(rng);
        if (w == 0 || w == 1) continue;
        Rational y = draw(rng), z = draw(rng);
        Rational x = w * (y * w + 1 - y) / (w - 1);
        return {x, y, z, Rational(1), Rational(1)};
    }
}

}  // namespace

int check_prop_asmdet_rational(std::size_t n, int trials, std::uint64_t seed, bool refined) {
    std::mt19937_64 rng(seed);
    OmegaMatrix m = m_asm(n, refined);
    MultiPoly z = z_asm_brute(n);
    if (!refined) z = z.specialize(Z, 1);
    int bad = 0;
    for (int t = 0; t < trials; ++t) {
        Rational w;
        auto pt = variety_point(rng, w);
        Rational lhs = det_rat(eval_matrix(m, pt, w));
        Rational factor = refined ? Rational(1 + w * (pt[Z] - 1)) : Rational(1);
        if (lhs != factor * z.eval(pt)) ++bad;
    }
    return bad;
}

int check_omega_spot(std::size_t n, int points, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    OmegaMatrix a = m_asm(n, true), d = m_dpp(n, true);
    int bad = 0;
    for (int t = 0; t < points; ++t) {
        Rational w;
        auto pt = variety_point(rng, w);
        if (det_rat(eval_matrix(a, pt, w)) != det_rat(eval_matrix(d, pt, w))) ++bad;
    }
    return bad;
}

bool check_relation_prime(std::size_t n, bool refined) {
    PolyMatrix id = poly_identity(n), s = poly_shift(n);
    return (id - s) * m_prime(n, refined) == m_bar(n, refined) * (id - s.transpose());
}

bool check_relation_dprime(std::size_t n, bool refined) {
    return b_matrix(n) * m_dprime(n, refined) == m_bar(n, refined);
}

Rational six_vertex_weight_det(std::size_t n, const Rational& a, const Rational& b, const Rational& c) {
    check_size(n);
    RatMatrix m(n, n, Rational(0));
    Rational a2 = a * a, b2 = b * b, c2 = c * c;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long li = long(i), lj = long(j);
            Rational s = 0;
            for (long k = 0; k <= std::min(li, lj + 1); ++k)
                s += Rational(binom(li - 1, li - k) * binom(lj + 1, k)) * rpow(a2, k) * rpow(c2, li - k);
            if (i == j + 1) s -= rpow(b2, li);
            m(i, j) = s;
        }
    return rpow(c, long(n)) * det_rat(m);
}

}  // namespace asmdpp
