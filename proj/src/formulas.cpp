#include "asmdpp/formulas.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace asmdpp {

namespace {

void check_n(std::size_t n) {
    if (n == 0) throw std::invalid_argument("n must be positive");
}

Integer exact_quotient(const Integer& a, const Integer& b) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::logic_error("product formula is not integral");
    return a / b;
}

// [m]_q! = prod_{k=1}^{m} (1 + q + ... + q^{k-1})
MultiPoly q_factorial(long m) {
    MultiPoly f = pconst(1), bracket = pconst(0);
    for (long k = 1; k <= m; ++k) {
        bracket += pq(unsigned(k - 1));
        f *= bracket;
    }
    return f;
}

}  // namespace

Integer asm_total(std::size_t n) {
    check_n(n);
    Integer num = 1, den = 1;
    for (long i = 0; i < long(n); ++i) {
        num *= factorial(3 * i + 1);
        den *= factorial(long(n) + i);
    }
    return exact_quotient(num, den);
}

Integer refined_total(std::size_t n, std::size_t k) {
    check_n(n);
    if (k >= n) throw std::invalid_argument("k must be below n");
    const long ln = long(n), lk = long(k);
    Integer num = factorial(ln + lk - 1) * factorial(2 * ln - lk - 2);
    Integer den = factorial(2 * ln - 2) * factorial(lk) * factorial(ln - lk - 1);
    for (long i = 0; i <= ln - 2; ++i) {
        num *= factorial(3 * i + 1);
        den *= factorial(ln + i - 1);
    }
    return exact_quotient(num, den);
}

Integer vsasm_total(std::size_t n) {
    check_n(n);
    Integer num = 1, den = 1;
    for (long i = 1; i <= long(n); ++i) {
        num *= factorial(6 * i - 2);
        den *= factorial(2 * long(n) + 2 * i);
    }
    return exact_quotient(num, den);
}

MultiPoly q_product(std::size_t n) {
    check_n(n);
    MultiPoly num = pconst(1), den = pconst(1);
    for (long i = 0; i < long(n); ++i) {
        num *= q_factorial(3 * i + 1);
        den *= q_factorial(long(n) + i);
    }
    return num.divide_exact(den);
}

MultiPoly z_mu_zero(std::size_t n) {
    check_n(n);
    MultiPoly xz = px() * pz(), first, rest = pconst(1), bracket;
    for (unsigned i = 0; i < n; ++i) first += xz.pow(i);
    for (unsigned k = 1; k < n; ++k) {
        bracket += px(k - 1);
        rest *= bracket;
    }
    return first * rest;
}

Dpp m0_asm_to_dpp(const Asm& a) {
    if (!a.is_permutation()) throw std::invalid_argument("bijection needs a permutation matrix");
    const std::size_t n = a.n();
    std::vector<int> pi(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j) == 1) pi[i] = int(j);
    // chi_i copies of n+1-i, already in weakly decreasing order
    std::vector<int> parts;
    for (std::size_t i = 0; i < n; ++i) {
        int chi = 0;
        for (std::size_t i2 = i + 1; i2 < n; ++i2) chi += pi[i2] < pi[i];
        parts.insert(parts.end(), std::size_t(chi), int(n - i));
    }
    std::vector<std::vector<int>> rows;
    for (int v : parts) {
        if (!rows.empty() && int(rows.back().size()) + 1 <= v)
            rows.back().push_back(v);
        else
            rows.push_back({v});
    }
    return Dpp::from_rows(rows);
}

Asm m0_dpp_to_asm(const Dpp& d, std::size_t n) {
    if (dpp_stats(d, n).mu != 0) throw std::invalid_argument("bijection needs a DPP without special parts");
    std::vector<int> remaining;
    for (std::size_t v = 0; v < n; ++v) remaining.push_back(int(v));
    std::vector<std::size_t> pi;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t chi = 0;
        for (const auto& r : d.rows())
            for (int v : r) chi += v == int(n - i);
        if (chi >= remaining.size()) throw std::invalid_argument("DPP is not in the image of the bijection");
        // chi counts the later entries that are smaller
        pi.push_back(std::size_t(remaining[chi]));
        remaining.erase(remaining.begin() + long(chi));
    }
    return Asm::permutation(pi);
}

StantonCounts stanton_parity(std::size_t n) {
    StantonCounts s{0, 0, 0, 0};
    for_each_dpp(n, [&](const Dpp& d) {
        long sz = d.part_sum();
        s.even_minus_odd += sz % 2 == 0 ? 1 : -1;
        if (sz % 4 == 0) s.mod4_gap += 1;
        if (sz % 4 == 2) s.mod4_gap -= 1;
    });
    for_each_asm(n, [&](const Asm& a) {
        if (a.rotate_half() == a) s.half_turn += 1;
        if (a.rotate_quarter() == a) s.quarter_turn += 1;
    });
    return s;
}

Integer count_reflection_invariant(std::size_t order) {
    Integer c = 0;
    for_each_asm(order, [&](const Asm& a) {
        if (a.reflect() == a) c += 1;
    });
    return c;
}

bool dpp_symmetry_multiset_holds(std::size_t n) {
    std::map<std::tuple<int, int, int>, long long> seen, mapped;
    const int half = int(n * (n - 1) / 2);
    for_each_dpp(n, [&](const Dpp& d) {
        DppStats s = dpp_stats(d, n);
        ++seen[{s.nu, s.mu, s.rho}];
        ++mapped[{half - s.nu - s.mu, s.mu, int(n) - 1 - s.rho}];
    });
    return seen == mapped;
}

std::vector<TableRow> stat_table(std::size_t n) {
    std::map<std::tuple<int, int, int>, std::pair<long long, long long>> cells;
    for_each_asm(n, [&](const Asm& a) {
        AsmStats s = asm_stats(a);
        ++cells[{s.nu, s.mu, s.rho}].first;
    });
    for_each_dpp(n, [&](const Dpp& d) {
        DppStats s = dpp_stats(d, n);
        ++cells[{s.nu, s.mu, s.rho}].second;
    });
    std::vector<TableRow> out;
    for (const auto& [k, c] : cells)
        out.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), Integer(long(c.first)), Integer(long(c.second))});
    return out;
}

}  // namespace asmdpp
