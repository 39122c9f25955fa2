#include "asmdpp/dpp.hpp"

#include "asmdpp/limits.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace asmdpp {

Dpp Dpp::from_rows(const std::vector<std::vector<int>>& rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.empty()) throw std::invalid_argument("DPP row is empty");
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k] < 1) throw std::invalid_argument("DPP parts must be positive");
            if (k && r[k] > r[k - 1]) throw std::invalid_argument("DPP row is not weakly decreasing");
        }
        // diagonal chain: D_ii > lambda_i >= D_{i+1,i+1}
        if (r[0] <= int(r.size())) throw std::invalid_argument("DPP row is not shorter than its first part");
        if (i + 1 < rows.size() && rows[i + 1][0] > int(r.size()))
            throw std::invalid_argument("DPP diagonal part exceeds the previous row length");
        if (i > 0) {
            // row i sits one column to the right of row i-1
            const auto& up = rows[i - 1];
            for (std::size_t k = 0; k < r.size(); ++k) {
                if (k + 1 >= up.size()) throw std::invalid_argument("DPP row extends beyond the row above");
                if (r[k] >= up[k + 1]) throw std::invalid_argument("DPP column is not strictly decreasing");
            }
        }
    }
    return Dpp(rows);
}

Dpp Dpp::from_compact(const std::string& text) {
    std::vector<std::vector<int>> rows;
    if (text.empty()) return from_rows(rows);
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, '/')) {
        rows.emplace_back();
        std::stringstream ps(row);
        std::string part;
        while (std::getline(ps, part, ',')) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(part, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad DPP part '" + part + "'");
            }
            if (used != part.size()) throw std::invalid_argument("bad DPP part '" + part + "'");
            rows.back().push_back(v);
        }
    }
    if (!text.empty() && text.back() == '/') throw std::invalid_argument("trailing '/' in DPP");
    return from_rows(rows);
}

int Dpp::max_part() const { return rows_.empty() ? 0 : rows_[0][0]; }

long Dpp::part_sum() const {
    long s = 0;
    for (const auto& r : rows_)
        for (int v : r) s += v;
    return s;
}

std::string Dpp::to_compact() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += '/';
        for (std::size_t k = 0; k < rows_[i].size(); ++k) {
            if (k) s += ',';
            s += std::to_string(rows_[i][k]);
        }
    }
    return s;
}

DppStats dpp_stats(const Dpp& d, std::size_t n) {
    DppStats s;
    for (const auto& r : d.rows())
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k] > int(n)) throw std::invalid_argument("DPP part exceeds n");
            // part in column j of row i is special iff D_ij <= j - i = k
            if (r[k] > int(k))
                ++s.nu;
            else
                ++s.mu;
            s.rho += r[k] == int(n);
        }
    return s;
}

class DppEnumerator {
public:
    DppEnumerator(int n, const std::function<void(const Dpp&)>& visit) : n_(n), visit_(visit) {}

    void run() {
        for (int t = 0; t < n_; ++t) {
            diag_.clear();
            diagonals(t);
        }
    }

private:
    void diagonals(int t) {
        if (int(diag_.size()) == t) {
            len_.assign(t, 0);
            lengths(0);
            return;
        }
        int hi = diag_.empty() ? n_ : diag_.back() - 1;
        for (int d = 2; d <= hi; ++d) {
            diag_.push_back(d);
            diagonals(t);
            diag_.pop_back();
        }
    }

    void lengths(std::size_t i) {
        std::size_t t = diag_.size();
        if (i == t) {
            cur_.rows_.assign(t, {});
            for (std::size_t r = 0; r < t; ++r) {
                cur_.rows_[r].assign(len_[r], 0);
                cur_.rows_[r][0] = diag_[r];
            }
            fill(0, 1);
            return;
        }
        int lo = i + 1 < t ? diag_[i + 1] : 1;
        for (int l = lo; l <= diag_[i] - 1; ++l) {
            len_[i] = l;
            lengths(i + 1);
        }
    }

    // Cell (row r, position k >= 1) in reading order; values ascending.
    void fill(std::size_t r, std::size_t k) {
        auto& rows = cur_.rows_;
        if (r == rows.size()) {
            visit_(cur_);
            return;
        }
        if (k == rows[r].size()) {
            if (r + 1 < rows.size() && rows[r + 1][0] >= rows[r][1]) return;  // diagonal below must be smaller
            fill(r + 1, 1);
            return;
        }
        int hi = rows[r][k - 1];
        if (r > 0) hi = std::min(hi, rows[r - 1][k + 1] - 1);
        int lo = 1;
        if (k == 1 && r + 1 < rows.size()) lo = rows[r + 1][0] + 1;
        for (int v = lo; v <= hi; ++v) {
            rows[r][k] = v;
            fill(r, k + 1);
        }
    }

    int n_;
    const std::function<void(const Dpp&)>& visit_;
    std::vector<int> diag_, len_;
    Dpp cur_{std::vector<std::vector<int>>{}};
};

void for_each_dpp(std::size_t n, const std::function<void(const Dpp&)>& visit) {
    if (n == 0) throw std::invalid_argument("DPP size must be positive");
    check_enumeration_limit(n, "DPP enumeration");
    DppEnumerator(int(n), visit).run();
}

std::vector<Dpp> enumerate_dpps(std::size_t n) {
    std::vector<Dpp> out;
    for_each_dpp(n, [&](const Dpp& d) { out.push_back(d); });
    return out;
}

namespace {

MultiPoly tally(std::size_t n, bool with_rows) {
    std::map<std::tuple<int, int, int, int>, long long> counts;
    for_each_dpp(n, [&](const Dpp& d) {
        DppStats s = dpp_stats(d, n);
        ++counts[{s.nu, s.mu, s.rho, with_rows ? int(d.row_count()) + 1 : 0}];
    });
    MultiPoly z;
    for (const auto& [k, c] : counts) {
        Exponents e{};
        e[X] = static_cast<std::uint16_t>(std::get<0>(k));
        e[Y] = static_cast<std::uint16_t>(std::get<1>(k));
        e[Z] = static_cast<std::uint16_t>(std::get<2>(k));
        e[W] = static_cast<std::uint16_t>(std::get<3>(k));
        z.add_term(e, Integer(static_cast<long>(c)));
    }
    return z;
}

}  // namespace

MultiPoly z_dpp_brute(std::size_t n) { return tally(n, false); }
MultiPoly z_dpp_brute_w(std::size_t n) { return tally(n, true); }

MultiPoly q_sum_of_parts(std::size_t n) {
    std::map<long, long long> counts;
    for_each_dpp(n, [&](const Dpp& d) { ++counts[d.part_sum()]; });
    MultiPoly z;
    for (const auto& [s, c] : counts) {
        Exponents e{};
        e[Q] = static_cast<std::uint16_t>(s);
        z.add_term(e, Integer(static_cast<long>(c)));
    }
    return z;
}

}  // namespace asmdpp
