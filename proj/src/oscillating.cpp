#include "asmdpp/oscillating.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace asmdpp {

namespace {

// squares in exactly one of a, b
int distance(const Partition& a, const Partition& b) {
    int d = 0;
    std::size_t rows = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < rows; ++i) {
        int x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        d += std::abs(x - y);
    }
    return d;
}

void check_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= 0 || (i && p[i] > p[i - 1])) throw std::invalid_argument("not a partition");
}

}  // namespace

std::vector<OscTableau> enumerate_osc(const Partition& target, std::size_t length) {
    check_partition(target);
    std::vector<OscTableau> out;
    OscTableau cur;
    cur.shapes.push_back({});
    std::function<void()> go = [&] {
        const Partition sh = cur.shapes.back();
        std::size_t done = cur.cells.size();
        int left = int(length - done);
        int dist = distance(sh, target);
        if (dist > left || (left - dist) % 2) return;
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        // additions, rows top to bottom, then removals
        for (std::size_t i = 0; i <= sh.size(); ++i) {
            int len = i < sh.size() ? sh[i] : 0;
            if (i > 0 && sh[i - 1] <= len) continue;
            Partition next = sh;
            if (i == sh.size())
                next.push_back(1);
            else
                ++next[i];
            cur.cells.push_back({int(i) + 1, len + 1});
            cur.shapes.push_back(next);
            go();
            cur.shapes.pop_back();
            cur.cells.pop_back();
        }
        for (std::size_t i = 0; i < sh.size(); ++i) {
            if (i + 1 < sh.size() && sh[i + 1] == sh[i]) continue;
            Partition next = sh;
            if (--next[i] == 0) next.pop_back();
            cur.cells.push_back({int(i) + 1, sh[i]});
            cur.shapes.push_back(next);
            go();
            cur.shapes.pop_back();
            cur.cells.pop_back();
        }
    };
    go();
    return out;
}

bool content_precedes(int d, int d2) {
    int a = std::abs(d), b = std::abs(d2);
    if (a != b) return a > b;
    return d < d2;
}

int ascents(const OscTableau& t) {
    int asc = 0;
    for (std::size_t k = 0; k + 1 < t.cells.size(); ++k) {
        int c1 = t.cells[k].second - t.cells[k].first;
        int c2 = t.cells[k + 1].second - t.cells[k + 1].first;
        asc += content_precedes(c1, c2);
    }
    return asc;
}

Partition delta_diagram(const Partition& kappa) {
    for (std::size_t i = 0; i < kappa.size(); ++i)
        if (kappa[i] <= 0 || (i && kappa[i] >= kappa[i - 1]))
            throw std::invalid_argument("kappa must be a strict partition");
    std::set<std::pair<int, int>> cells;
    for (std::size_t r = 0; r < kappa.size(); ++r) {
        int i = int(r) + 1, a = kappa[r], b = kappa[r] - 1;
        for (int j = i; j <= i + a; ++j) cells.insert({i, j});
        for (int k = i + 1; k <= i + b; ++k) cells.insert({k, i});
    }
    Partition shape;
    for (auto [i, j] : cells) {
        if (int(shape.size()) < i) shape.resize(std::size_t(i), 0);
        ++shape[std::size_t(i - 1)];
    }
    check_partition(shape);
    return shape;
}

std::vector<Partition> strict_partitions(int p) {
    if (p < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> go = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, cap); v >= 1; --v) {
            cur.push_back(v);
            go(rest - v, v - 1);
            cur.pop_back();
        }
    };
    go(p, p);
    return out;
}

namespace {
void tally(std::vector<Integer>& dist, const std::vector<OscTableau>& ts) {
    for (const auto& t : ts) {
        std::size_t a = std::size_t(ascents(t));
        if (dist.size() <= a) dist.resize(a + 1, 0);
        dist[a] += 1;
    }
}
}  // namespace

std::vector<Integer> ascent_distribution_empty(int p) {
    if (p < 0) throw std::invalid_argument("negative p");
    std::vector<Integer> d;
    tally(d, enumerate_osc({}, std::size_t(2 * p)));
    return d;
}

std::vector<Integer> ascent_distribution_delta(int p) {
    if (p < 0) throw std::invalid_argument("negative p");
    std::vector<Integer> d;
    for (const auto& kappa : strict_partitions(p)) tally(d, enumerate_osc(delta_diagram(kappa), std::size_t(2 * p)));
    return d;
}

OscCounts osc_counts(std::size_t n, int p) {
    if (p < 0) throw std::invalid_argument("negative p");
    const std::size_t len = std::size_t(2 * p);
    OscCounts c{0, 0};
    for (const auto& t : enumerate_osc({}, len)) c.asm_side += binom(long(n) + ascents(t), 2 * p);
    for (const auto& kappa : strict_partitions(p))
        for (const auto& t : enumerate_osc(delta_diagram(kappa), len)) c.dpp_side += binom(long(n) + ascents(t), 2 * p);
    return c;
}

}  // namespace asmdpp
