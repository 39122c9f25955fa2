#include <doctest.h>

#include "asmdpp/dpp.hpp"

#include <algorithm>
#include <set>

using namespace asmdpp;

namespace {

// Oracle: rows are arbitrary weakly decreasing words over [1, n]; prefixes
// are kept only if the validating constructor accepts them.
void grow(int n, std::vector<std::vector<int>>& rows, std::set<std::vector<std::vector<int>>>& out) {
    out.insert(rows);
    std::vector<int> word;
    std::function<void(int)> extend = [&](int top) {
        if (!word.empty()) {
            rows.push_back(word);
            bool ok = true;
            try {
                Dpp::from_rows(rows);
            } catch (const std::invalid_argument&) {
                ok = false;
            }
            if (ok) grow(n, rows, out);
            rows.pop_back();
        }
        if (int(word.size()) >= n) return;
        for (int v = 1; v <= top; ++v) {
            word.push_back(v);
            extend(v);
            word.pop_back();
        }
    };
    extend(n);
}

std::set<std::vector<std::vector<int>>> oracle(int n) {
    std::set<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> rows;
    grow(n, rows, out);
    return out;
}

}  // namespace

TEST_CASE("DPP counts match the ASM numbers") {
    const std::size_t expect[] = {1, 2, 7, 42, 429, 7436};
    for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_dpps(n).size() == expect[n - 1]);
}

TEST_CASE("enumeration agrees with the prefix-filter oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::set<std::vector<std::vector<int>>> got;
        auto all = enumerate_dpps(std::size_t(n));
        for (const Dpp& d : all) got.insert(d.rows());
        CHECK(got.size() == all.size());
        CHECK(got == oracle(n));
    }
}

TEST_CASE("listing order for n = 3") {
    std::vector<std::string> got;
    for (const Dpp& d : enumerate_dpps(3)) got.push_back(d.to_compact());
    CHECK(got == std::vector<std::string>{"", "2", "3", "3,1", "3,2", "3,3", "3,3/2"});
}

TEST_CASE("same set as the hand listing for n = 3") {
    std::set<std::string> hand = {"", "3,3/2", "2", "3,3", "3", "3,2", "3,1"}, got;
    for (const Dpp& d : enumerate_dpps(3)) got.insert(d.to_compact());
    CHECK(got == hand);
}

TEST_CASE("statistics of a worked example") {
    Dpp d = Dpp::from_rows({{6, 6, 6, 5, 2}, {4, 4, 1}, {3}});
    CHECK(dpp_stats(d, 6) == DppStats{7, 2, 3});
    CHECK(d.part_sum() == 37);
    CHECK_THROWS_AS(dpp_stats(d, 5), std::invalid_argument);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Dpp::from_rows({{2, 2}}), std::invalid_argument);          // length not below first part
    CHECK_THROWS_AS(Dpp::from_rows({{3, 4}}), std::invalid_argument);          // increasing row
    CHECK_THROWS_AS(Dpp::from_rows({{3, 3}, {3}}), std::invalid_argument);     // column not strict
    CHECK_THROWS_AS(Dpp::from_rows({{4, 3, 3}, {2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(Dpp::from_rows({{4, 1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(Dpp::from_rows({{0}}), std::invalid_argument);
    CHECK_NOTHROW(Dpp::from_rows({{4, 4, 3}, {3, 2}}));
}

TEST_CASE("compact round trip") {
    for (const Dpp& d : enumerate_dpps(5)) CHECK(Dpp::from_compact(d.to_compact()) == d);
    CHECK(Dpp::from_compact("").empty());
    CHECK_THROWS_AS(Dpp::from_compact("3,x"), std::invalid_argument);
}

TEST_CASE("ordering key is respected") {
    auto all = enumerate_dpps(5);
    auto key = [](const Dpp& d) {
        std::vector<int> diag, len, rest;
        for (const auto& r : d.rows()) {
            diag.push_back(r[0]);
            len.push_back(int(r.size()));
            rest.insert(rest.end(), r.begin() + 1, r.end());
        }
        return std::make_tuple(d.row_count(), diag, len, rest);
    };
    for (std::size_t k = 1; k < all.size(); ++k) CHECK(key(all[k - 1]) < key(all[k]));
}

TEST_CASE("small generating polynomials") {
    CHECK(z_dpp_brute(2).to_string() == "1+xz");
    CHECK(z_dpp_brute_w(2).to_string() == "w+xzw^2");
    CHECK(q_sum_of_parts(3).to_string() == "1+q^2+q^3+q^4+q^5+q^6+q^8");
}
