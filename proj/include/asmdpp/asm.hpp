#pragma once

#include "asmdpp/multipoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace asmdpp {

// Alternating sign matrix. Construction always validates.
class Asm {
public:
    static Asm from_rows(const std::vector<std::vector<int>>& rows);
    // Rows separated by '/', entries written as '+', '-' or '0'.
    static Asm from_compact(const std::string& text);
    static Asm permutation(const std::vector<std::size_t>& pi);  // A_{i, pi[i]} = 1

    std::size_t n() const { return n_; }
    int at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    std::vector<std::vector<int>> rows() const;
    std::string to_compact() const;

    Asm reflect() const;      // A*_{ij} = A_{i, n+1-j}
    Asm rotate_half() const;
    Asm rotate_quarter() const;
    bool is_permutation() const;

    friend bool operator==(const Asm& a, const Asm& b) = default;
    friend auto operator<=>(const Asm& a, const Asm& b) = default;

private:
    friend class AsmEnumerator;
    Asm(std::size_t n, std::vector<signed char> e) : n_(n), e_(std::move(e)) {}
    std::size_t n_ = 0;
    std::vector<signed char> e_;
};

struct AsmStats {
    int nu = 0, mu = 0, rho = 0;
    friend bool operator==(const AsmStats&, const AsmStats&) = default;
};

AsmStats asm_stats(const Asm& a);
// nu as sum over i < i', j' <= j of A_ij A_i'j'.
int nu_first_form(const Asm& a);
// nu as sum over i <= i', j' < j of A_ij A_i'j'.
int nu_second_form(const Asm& a);
int isolated_ones(const Asm& a);

// Visits ASM(n) in lexicographic order of the row-major entry sequence,
// comparing entries as integers (-1 < 0 < 1). With first_one_col set, only
// the matrices whose first row has its 1 in that column are visited; the
// union over all columns is the whole set, in the same order.
void for_each_asm(std::size_t n, const std::function<void(const Asm&)>& visit,
                  std::optional<std::size_t> first_one_col = std::nullopt);
std::vector<Asm> enumerate_asms(std::size_t n);

// sum over ASM(n) of x^nu y^mu z^rho.
MultiPoly z_asm_brute(std::size_t n);

// Number of i x i ASMs with m entries -1 and no isolated 1. C(0, 0) = 1.
Integer count_no_isolated(std::size_t i, int m);
// sum_{i=0}^{min(n, 3m)} (n!)^2 / ((i!)^2 (n-i)!) * C(i, m)
Integer isolated_ones_expansion(std::size_t n, int m);

}  // namespace asmdpp
