#pragma once

#include "asmdpp/multipoly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace asmdpp {

// Descending plane partition. Row i (1-based) starts in column i.
class Dpp {
public:
    // Validates shape, row/column monotonicity and the diagonal chain.
    static Dpp from_rows(const std::vector<std::vector<int>>& rows);
    // Rows separated by '/', parts by ','; the empty DPP is "".
    static Dpp from_compact(const std::string& text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::size_t row_count() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    int max_part() const;
    long part_sum() const;
    std::string to_compact() const;

    friend bool operator==(const Dpp&, const Dpp&) = default;

private:
    friend class DppEnumerator;
    explicit Dpp(std::vector<std::vector<int>> r) : rows_(std::move(r)) {}
    std::vector<std::vector<int>> rows_;
};

struct DppStats {
    int nu = 0, mu = 0, rho = 0;
    friend bool operator==(const DppStats&, const DppStats&) = default;
};

// Throws std::invalid_argument if a part exceeds n.
DppStats dpp_stats(const Dpp& d, std::size_t n);

// Order: row count, then diagonal parts, then row lengths, then the
// remaining parts in reading order; each compared lexicographically.
void for_each_dpp(std::size_t n, const std::function<void(const Dpp&)>& visit);
std::vector<Dpp> enumerate_dpps(std::size_t n);

// sum over DPP(n) of x^nu y^mu z^rho
MultiPoly z_dpp_brute(std::size_t n);
// sum over DPP(n) of w^{rows+1} x^nu y^mu z^rho
MultiPoly z_dpp_brute_w(std::size_t n);
// sum over DPP(n) of q^{|D|}
MultiPoly q_sum_of_parts(std::size_t n);

}  // namespace asmdpp
