#include "asmdpp/lattice_paths.hpp"

#include "asmdpp/limits.hpp"
#include "asmdpp/matrix.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace asmdpp {

Point LatticePath::end() const {
    Point p = start;
    for (char c : steps) {
        if (c == 'R')
            ++p.x;
        else if (c == 'D')
            --p.y;
        else
            throw std::invalid_argument("path steps must be 'R' or 'D'");
    }
    return p;
}

std::vector<Point> LatticePath::vertices() const {
    std::vector<Point> v{start};
    Point p = start;
    for (char c : steps) {
        if (c == 'R')
            ++p.x;
        else if (c == 'D')
            --p.y;
        else
            throw std::invalid_argument("path steps must be 'R' or 'D'");
        v.push_back(p);
    }
    return v;
}

namespace {

// Emits down steps to each target height, a right step there, then downs
// to `floor`.
std::string walk(int from, const std::vector<int>& heights, int floor) {
    std::string s;
    int h = from;
    for (int target : heights) {
        if (target > h) throw std::logic_error("right-step heights must not increase");
        s.append(std::size_t(h - target), 'D');
        s += 'R';
        h = target;
    }
    s.append(std::size_t(h - floor), 'D');
    return s;
}

void check_disjoint(const PathFamily& f) {
    std::set<Point> seen;
    for (const auto& p : f)
        for (const Point& v : p.vertices())
            if (!seen.insert(v).second) throw std::invalid_argument("paths intersect");
}

// right steps as (x at the start of the step, height)
std::vector<Point> right_steps(const LatticePath& p) {
    std::vector<Point> out;
    Point cur = p.start;
    for (char c : p.steps) {
        if (c == 'R') out.push_back(cur), ++cur.x;
        else --cur.y;
    }
    return out;
}

}  // namespace

PathFamily dpp_to_nilp(const Dpp& d, std::size_t n) {
    dpp_stats(d, n);  // rejects parts above n
    PathFamily f;
    int prev = int(n);
    for (const auto& row : d.rows()) {
        std::vector<int> h;
        for (int v : row) h.push_back(v - 1);
        f.push_back({{0, prev - 1}, walk(prev - 1, h, 0)});
        prev = int(row.size());
    }
    f.push_back({{0, prev - 1}, std::string(std::size_t(prev - 1), 'D')});
    return f;
}

void validate_nilp(const PathFamily& f, std::size_t n) {
    if (f.empty()) throw std::invalid_argument("empty path family");
    int prev = int(n);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto& p = f[i];
        if (!(p.start == Point{0, prev - 1})) throw std::invalid_argument("path starts at the wrong point");
        Point e = p.end();
        if (e.y != 0 || e.x < 0 || e.x > int(n) - 1) throw std::invalid_argument("path ends at the wrong point");
        bool last = i + 1 == f.size();
        if (last != (e.x == 0)) throw std::invalid_argument("only the last path may end at the origin");
        if (!last && e.x >= prev) throw std::invalid_argument("end points must strictly decrease");
        prev = e.x;
    }
    check_disjoint(f);
}

Dpp nilp_to_dpp(const PathFamily& f, std::size_t n) {
    validate_nilp(f, n);
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        rows.emplace_back();
        for (const Point& s : right_steps(f[i])) rows.back().push_back(s.y + 1);
    }
    return Dpp::from_rows(rows);
}

PathStats nilp_statistics(const PathFamily& f, std::size_t n) {
    validate_nilp(f, n);
    PathStats st;
    st.paths = int(f.size());
    for (const auto& p : f)
        for (const Point& s : right_steps(p)) {
            if (s.y >= s.x)
                ++st.above;
            else
                ++st.below;
            st.top += s.y == int(n) - 1;
        }
    return st;
}

PathFamily dpp_to_nilp_prime(const Dpp& d, std::size_t n) {
    dpp_stats(d, n);
    PathFamily f;
    for (const auto& row : d.rows()) {
        int delta = row[0] - 1;
        std::vector<int> h;
        for (std::size_t k = 1; k < row.size(); ++k) h.push_back(row[k] - 1);
        while (int(h.size()) < delta - 1) h.push_back(-1);
        LatticePath p{{1, delta}, walk(delta, h, -1)};
        f.push_back(p);
    }
    return f;
}

void validate_nilp_prime(const PathFamily& f, std::size_t n) {
    int prev = int(n);
    for (const auto& p : f) {
        int delta = p.start.y;
        if (p.start.x != 1 || delta < 1 || delta >= prev) throw std::invalid_argument("path starts at the wrong point");
        if (!(p.end() == Point{delta, -1})) throw std::invalid_argument("path ends at the wrong point");
        prev = delta;
    }
    check_disjoint(f);
}

Dpp nilp_prime_to_dpp(const PathFamily& f, std::size_t n) {
    validate_nilp_prime(f, n);
    std::vector<std::vector<int>> rows;
    for (const auto& p : f) {
        rows.push_back({p.start.y + 1});
        for (const Point& s : right_steps(p))
            if (s.y >= 0) rows.back().push_back(s.y + 1);
    }
    return Dpp::from_rows(rows);
}

PathStats nilp_prime_statistics(const PathFamily& f, std::size_t n) {
    validate_nilp_prime(f, n);
    PathStats st;
    st.paths = int(f.size());
    for (const auto& p : f)
        for (const Point& s : right_steps(p)) {
            if (s.y < 0) continue;
            if (s.y >= s.x)
                ++st.above;
            else
                ++st.below;
            st.top += s.y == int(n) - 1;
        }
    return st;
}

MultiPoly step_weight(std::size_t n, int a, int h, bool refined) {
    if (refined && h == int(n) - 1) return px() * pz();
    return a <= h ? px() : py();
}

MultiPoly path_weight(const LatticePath& p, std::size_t n, bool refined) {
    MultiPoly w = pconst(1);
    for (const Point& s : right_steps(p)) w *= step_weight(n, s.x, s.y, refined);
    return w;
}

MultiPoly path_weight_sum(std::size_t n, std::size_t i, std::size_t j, bool refined) {
    if (i >= n || j >= n) throw std::invalid_argument("path end points outside the grid");
    const long li = long(i), lj = long(j), ln = long(n);
    MultiPoly s;
    auto add = [&](const Integer& c, long kx, long ky, long kz) {
        if (c == 0) return;
        Exponents e{};
        e[X] = static_cast<std::uint16_t>(kx);
        e[Y] = static_cast<std::uint16_t>(ky);
        e[Z] = static_cast<std::uint16_t>(kz);
        s.add_term(e, c);
    };
    if (refined && lj == ln - 1) {
        for (long k = 0; k <= li; ++k)
            for (long l = 0; l <= k; ++l) add(binom(li - 1, li - k) * binom(ln - l - 1, k - l), k, li - k, l);
    } else {
        for (long k = 0; k <= std::min(li, lj + 1); ++k) add(binom(li - 1, li - k) * binom(lj + 1, k), k, li - k, 0);
    }
    return s;
}

MultiPoly path_weight_sum_direct(std::size_t n, std::size_t i, std::size_t j, bool refined) {
    if (i >= n || j >= n) throw std::invalid_argument("path end points outside the grid");
    MultiPoly total;
    std::string steps;
    std::function<void(int, int)> go = [&](int x, int y) {
        if (x == int(i) && y == 0) {
            total += path_weight({{0, int(j)}, steps}, n, refined);
            return;
        }
        if (x < int(i)) {
            steps += 'R';
            go(x + 1, y);
            steps.pop_back();
        }
        if (y > 0) {
            steps += 'D';
            go(x, y - 1);
            steps.pop_back();
        }
    };
    go(0, int(j));
    return total;
}

MultiPoly nilp_family_sum(std::size_t n, bool refined) {
    check_enumeration_limit(n, "path family enumeration");
    // all paths between two points, grouped by end points
    auto all_paths = [&](Point from, Point to) {
        std::vector<LatticePath> out;
        std::string steps;
        std::function<void(int, int)> go = [&](int x, int y) {
            if (x == to.x && y == to.y) {
                out.push_back({from, steps});
                return;
            }
            if (x < to.x) steps += 'R', go(x + 1, y), steps.pop_back();
            if (y > to.y) steps += 'D', go(x, y - 1), steps.pop_back();
        };
        go(from.x, from.y);
        return out;
    };
    MultiPoly total;
    // chosen end abscissae lambda_1 > lambda_2 > ... > 0, then a final path to the origin
    std::vector<LatticePath> chosen;
    std::set<Point> used;
    std::function<void(int)> place = [&](int prev) {
        Point from{0, prev - 1};
        std::vector<int> ends;
        for (int e = std::min(prev - 1, int(n) - 1); e >= 0; --e) ends.push_back(e);
        for (int e : ends) {
            for (const auto& p : all_paths(from, {e, 0})) {
                auto vs = p.vertices();
                bool clash = false;
                for (const Point& v : vs) clash = clash || used.count(v);
                if (clash) continue;
                for (const Point& v : vs) used.insert(v);
                chosen.push_back(p);
                if (e == 0) {
                    MultiPoly w = pconst(1);
                    for (const auto& c : chosen) w *= path_weight(c, n, refined);
                    total += w;
                } else {
                    place(e);
                }
                chosen.pop_back();
                for (const Point& v : vs) used.erase(v);
            }
        }
    };
    place(int(n));
    return total;
}

MultiPoly lgv_nilp_sum(std::size_t n, bool refined) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = path_weight_sum(n, i, j, refined);
            if (i == j + 1) m(i, j) -= pconst(1);
        }
    MultiPoly det = det_poly(m);
    if (det != nilp_family_sum(n, refined)) throw std::logic_error("LGV determinant disagrees with path families");
    return det;
}

}  // namespace asmdpp
