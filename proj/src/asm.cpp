#include "asmdpp/asm.hpp"

#include "asmdpp/limits.hpp"

#include <future>
#include <map>
#include <stdexcept>
#include <tuple>

namespace asmdpp {

namespace {

void validate(std::size_t n, const std::vector<signed char>& e) {
    std::vector<int> col(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            int v = e[i * n + j];
            if (v < -1 || v > 1) throw std::invalid_argument("ASM entry outside {-1,0,1}");
            row += v;
            col[j] += v;
            if (row < 0 || row > 1) throw std::invalid_argument("ASM row partial sum outside {0,1}");
            if (col[j] < 0 || col[j] > 1) throw std::invalid_argument("ASM column partial sum outside {0,1}");
        }
        if (row != 1) throw std::invalid_argument("ASM row sum is not 1");
    }
    for (int c : col)
        if (c != 1) throw std::invalid_argument("ASM column sum is not 1");
}

}  // namespace

Asm Asm::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("empty ASM");
    std::vector<signed char> e;
    e.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("ASM is not square");
        for (int v : r) {
            if (v < -1 || v > 1) throw std::invalid_argument("ASM entry outside {-1,0,1}");
            e.push_back(static_cast<signed char>(v));
        }
    }
    validate(n, e);
    return Asm(n, std::move(e));
}

Asm Asm::from_compact(const std::string& text) {
    std::vector<std::vector<int>> rows(1);
    for (char ch : text) {
        switch (ch) {
            case '/': rows.emplace_back(); break;
            case '+': rows.back().push_back(1); break;
            case '-': rows.back().push_back(-1); break;
            case '0': rows.back().push_back(0); break;
            default: throw std::invalid_argument("bad character in compact ASM");
        }
    }
    return from_rows(rows);
}

Asm Asm::permutation(const std::vector<std::size_t>& pi) {
    std::size_t n = pi.size();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (pi[i] >= n) throw std::invalid_argument("permutation entry out of range");
        rows[i][pi[i]] = 1;
    }
    return from_rows(rows);
}

std::vector<std::vector<int>> Asm::rows() const {
    std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i][j] = at(i, j);
    return r;
}

std::string Asm::to_compact() const {
    std::string s;
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < n_; ++j) s += at(i, j) == 1 ? '+' : at(i, j) == -1 ? '-' : '0';
    }
    return s;
}

Asm Asm::reflect() const {
    std::vector<signed char> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[i * n_ + j] = e_[i * n_ + (n_ - 1 - j)];
    return Asm(n_, std::move(e));
}

Asm Asm::rotate_half() const {
    std::vector<signed char> e(e_.rbegin(), e_.rend());
    return Asm(n_, std::move(e));
}

Asm Asm::rotate_quarter() const {
    // (i, j) -> (j, n-1-i)
    std::vector<signed char> e(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) e[j * n_ + (n_ - 1 - i)] = e_[i * n_ + j];
    return Asm(n_, std::move(e));
}

bool Asm::is_permutation() const {
    for (auto v : e_)
        if (v < 0) return false;
    return true;
}

int nu_first_form(const Asm& a) {
    const std::size_t n = a.n();
    // below[j] = sum over rows strictly below the current row, columns <= j
    std::vector<int> below(n, 0);
    int nu = 0;
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j)) nu += a.at(i, j) * below[j];
        int run = 0;
        for (std::size_t j = 0; j < n; ++j) {
            run += a.at(i, j);
            below[j] += run;
        }
    }
    return nu;
}

int nu_second_form(const Asm& a) {
    const std::size_t n = a.n();
    int nu = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!a.at(i, j)) continue;
            int s = 0;
            for (std::size_t i2 = i; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < j; ++j2) s += a.at(i2, j2);
            nu += a.at(i, j) * s;
        }
    return nu;
}

AsmStats asm_stats(const Asm& a) {
    AsmStats s;
    s.nu = nu_first_form(a);
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) s.mu += a.at(i, j) == -1;
    while (a.at(0, s.rho) != 1) ++s.rho;
    return s;
}

int isolated_ones(const Asm& a) {
    const std::size_t n = a.n();
    std::vector<int> row_nz(n, 0), col_nz(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j)) ++row_nz[i], ++col_nz[j];
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) count += a.at(i, j) == 1 && row_nz[i] == 1 && col_nz[j] == 1;
    return count;
}

class AsmEnumerator {
public:
    AsmEnumerator(std::size_t n, const std::function<void(const Asm&)>& visit, std::optional<std::size_t> first)
        : n_(n), visit_(visit), first_(first), cur_(n, std::vector<signed char>(n * n, 0)), col_(n, 0) {}

    void run() { step(0, 0, 0); }

private:
    // Cell (i, j) with row partial sum `row` so far; values tried in
    // increasing order, which yields lexicographic output.
    void step(std::size_t i, std::size_t j, int row) {
        if (j == n_) {
            if (row != 1) return;
            if (i + 1 == n_) {
                visit_(cur_);
                return;
            }
            step(i + 1, 0, 0);
            return;
        }
        auto& e = cur_.e_[i * n_ + j];
        for (int v = -1; v <= 1; ++v) {
            int r = row + v, c = col_[j] + v;
            if (r < 0 || r > 1 || c < 0 || c > 1) continue;
            if (i == 0 && first_ && (v == 1) != (j == *first_)) continue;
            e = static_cast<signed char>(v);
            col_[j] = c;
            step(i, j + 1, r);
            col_[j] -= v;
        }
        e = 0;
    }

    std::size_t n_;
    const std::function<void(const Asm&)>& visit_;
    std::optional<std::size_t> first_;
    Asm cur_;
    std::vector<int> col_;
};

void for_each_asm(std::size_t n, const std::function<void(const Asm&)>& visit, std::optional<std::size_t> first_one_col) {
    if (n == 0) throw std::invalid_argument("ASM size must be positive");
    check_enumeration_limit(n, "ASM enumeration");
    if (first_one_col && *first_one_col >= n) throw std::invalid_argument("first-row column out of range");
    AsmEnumerator(n, visit, first_one_col).run();
}

std::vector<Asm> enumerate_asms(std::size_t n) {
    std::vector<Asm> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

MultiPoly z_asm_brute(std::size_t n) {
    if (n == 0) throw std::invalid_argument("ASM size must be positive");
    check_enumeration_limit(n, "ASM enumeration");
    using Key = std::tuple<int, int, int>;
    // One task per first-row column; merged afterwards so the result does
    // not depend on scheduling.
    std::vector<std::future<std::map<Key, long long>>> parts;
    for (std::size_t c = 0; c < n; ++c)
        parts.push_back(std::async(std::launch::async, [n, c] {
            std::map<Key, long long> counts;
            for_each_asm(n, [&](const Asm& a) {
                AsmStats s = asm_stats(a);
                ++counts[{s.nu, s.mu, s.rho}];
            }, c);
            return counts;
        }));
    MultiPoly z;
    for (auto& f : parts)
        for (const auto& [k, cnt] : f.get()) {
            Exponents e{};
            e[X] = static_cast<std::uint16_t>(std::get<0>(k));
            e[Y] = static_cast<std::uint16_t>(std::get<1>(k));
            e[Z] = static_cast<std::uint16_t>(std::get<2>(k));
            z.add_term(e, Integer(static_cast<long>(cnt)));
        }
    return z;
}

Integer count_no_isolated(std::size_t i, int m) {
    if (i == 0) return m == 0 ? 1 : 0;
    Integer count = 0;
    for_each_asm(i, [&](const Asm& a) {
        if (isolated_ones(a) == 0 && asm_stats(a).mu == m) ++count;
    });
    return count;
}

Integer isolated_ones_expansion(std::size_t n, int m) {
    Integer total = 0;
    Integer nf = factorial(long(n));
    for (std::size_t i = 0; i <= n && i <= std::size_t(3 * m); ++i) {
        Integer c = count_no_isolated(i, m);
        if (c == 0) continue;
        Integer fi = factorial(long(i));
        total += nf * nf / (fi * fi * factorial(long(n - i))) * c;
    }
    return total;
}

}  // namespace asmdpp
