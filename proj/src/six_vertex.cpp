#include "asmdpp/six_vertex.hpp"

#include "asmdpp/matrix.hpp"

#include <stdexcept>

namespace asmdpp {

namespace {
constexpr const char* kNames[kVertexTypes] = {"a1", "a2", "b1", "b2", "c1", "c2"};
// left, right, top, bottom
constexpr EdgeLabels kEdges[kVertexTypes] = {
    {0, 0, 0, 0}, {1, 1, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {1, 0, 1, 0},
};
}  // namespace

const char* type_name(VertexType t) { return kNames[static_cast<std::size_t>(t)]; }

VertexType type_from_name(const std::string& name) {
    for (std::size_t k = 0; k < kVertexTypes; ++k)
        if (name == kNames[k]) return static_cast<VertexType>(k);
    throw std::invalid_argument("unknown vertex type '" + name + "'");
}

EdgeLabels edge_labels(VertexType t) { return kEdges[static_cast<std::size_t>(t)]; }

SixVertexConfig SixVertexConfig::from_types(const std::vector<std::vector<VertexType>>& grid) {
    const std::size_t n = grid.size();
    if (n == 0) throw std::invalid_argument("empty six-vertex configuration");
    for (const auto& row : grid)
        if (row.size() != n) throw std::invalid_argument("six-vertex grid is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            EdgeLabels e = edge_labels(grid[i][j]);
            int left = j == 0 ? 0 : edge_labels(grid[i][j - 1]).right;
            int top = i == 0 ? 0 : edge_labels(grid[i - 1][j]).bottom;
            if (e.left != left || e.top != top)
                throw std::invalid_argument("arrow conservation violated at (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ")");
            if (j + 1 == n && e.right != 1) throw std::invalid_argument("right boundary arrow must point in");
            if (i + 1 == n && e.bottom != 1) throw std::invalid_argument("bottom boundary arrow must point out");
        }
    return SixVertexConfig(grid);
}

SixVertexConfig asm_to_6v(const Asm& a) {
    const std::size_t n = a.n();
    std::vector<std::vector<VertexType>> g(n, std::vector<VertexType>(n));
    std::vector<int> col(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            int left = row, top = col[j];
            row += a.at(i, j);
            col[j] += a.at(i, j);
            int right = row, bottom = col[j];
            bool found = false;
            for (std::size_t k = 0; k < kVertexTypes && !found; ++k) {
                const EdgeLabels& e = kEdges[k];
                if (e.left == left && e.right == right && e.top == top && e.bottom == bottom) {
                    g[i][j] = static_cast<VertexType>(k);
                    found = true;
                }
            }
            if (!found) throw std::logic_error("ASM produced an impossible vertex");
        }
    }
    return SixVertexConfig::from_types(g);
}

Asm six_v_to_asm(const SixVertexConfig& c) {
    const std::size_t n = c.n();
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            EdgeLabels e = edge_labels(c.at(i, j));
            rows[i][j] = e.right - e.left;
        }
    return Asm::from_rows(rows);
}

std::vector<SixVertexConfig> enumerate_configs(std::size_t n) {
    std::vector<SixVertexConfig> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(asm_to_6v(a)); });
    return out;
}

TypeCounts type_counts(const SixVertexConfig& c) {
    TypeCounts t{};
    for (const auto& row : c.grid())
        for (VertexType v : row) ++t[static_cast<std::size_t>(v)];
    return t;
}

TypeCounts first_row_counts(const SixVertexConfig& c) {
    TypeCounts t{};
    for (VertexType v : c.grid()[0]) ++t[static_cast<std::size_t>(v)];
    return t;
}

void check_ik_point(const IkPoint& p) {
    const std::size_t n = p.s.size();
    if (n == 0 || p.t.size() != n) throw std::invalid_argument("spectral parameter count mismatch");
    if (p.q == 0) throw std::domain_error("q must be nonzero");
    Rational q2 = p.q * p.q, qm2 = 1 / q2;
    for (std::size_t i = 0; i < n; ++i) {
        if (p.s[i] == 0 || p.t[i] == 0) throw std::domain_error("spectral parameters must be nonzero");
        for (std::size_t j = 0; j < i; ++j) {
            if (p.s[i] * p.s[i] == p.s[j] * p.s[j]) throw std::domain_error("row parameters u_i must be distinct");
            if (p.t[i] * p.t[i] == p.t[j] * p.t[j]) throw std::domain_error("column parameters v_j must be distinct");
        }
    }
    for (const auto& s : p.s)
        for (const auto& t : p.t) {
            Rational uv = s * s * t * t;
            if (uv == q2 || uv == qm2) throw std::domain_error("u_i v_j hits q^2 or q^-2");
        }
}

IkPoint random_ik_point(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 12), den(1, 5), sign(0, 1);
    auto draw = [&] {
        Rational r = make_rational(num(rng), den(rng));
        return sign(rng) ? Rational(-r) : r;
    };
    while (true) {
        IkPoint p;
        for (std::size_t i = 0; i < n; ++i) p.s.push_back(draw()), p.t.push_back(draw());
        p.q = draw();
        try {
            check_ik_point(p);
            return p;
        } catch (const std::domain_error&) {
            // degenerate sample; draw again
        }
    }
}

Rational vertex_weight(VertexType type, const Rational& s, const Rational& t, const Rational& q) {
    Rational u = s * s, v = t * t;
    switch (type) {
        case VertexType::a1:
        case VertexType::a2: return u * q - 1 / (v * q);
        case VertexType::b1:
        case VertexType::b2: return u / q - q / v;
        default: return (q * q - 1 / (q * q)) * s / t;
    }
}

Rational partition_function(const IkPoint& p) {
    const std::size_t n = p.s.size();
    if (p.t.size() != n) throw std::invalid_argument("spectral parameter count mismatch");
    // weight table per cell and type, then sum over configurations
    std::vector<std::array<Rational, kVertexTypes>> w(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < kVertexTypes; ++k)
                w[i * n + j][k] = vertex_weight(static_cast<VertexType>(k), p.s[i], p.t[j], p.q);
    Rational z = 0;
    for_each_asm(n, [&](const Asm& a) {
        SixVertexConfig c = asm_to_6v(a);
        Rational prod = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) prod *= w[i * n + j][static_cast<std::size_t>(c.at(i, j))];
        z += prod;
    });
    return z;
}

Rational ik_determinant(const IkPoint& p) {
    check_ik_point(p);
    const std::size_t n = p.s.size();
    const Rational& q = p.q;
    Rational q2 = q * q, qm2 = 1 / q2;
    std::vector<Rational> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = p.s[i] * p.s[i], v[i] = p.t[i] * p.t[i];
    Rational num = 1;
    for (std::size_t i = 0; i < n; ++i) num *= p.s[i] * rpow(p.t[i], long(2 * n + 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            num *= vertex_weight(VertexType::a1, p.s[i], p.t[j], q) * vertex_weight(VertexType::b1, p.s[i], p.t[j], q);
    Rational den = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) den *= (u[i] - u[j]) * (v[i] - v[j]);
    RatMatrix m(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = 1 / (u[i] * v[j] - q2) - 1 / (u[i] * v[j] - qm2);
    return num / den * det_rat(m);
}

HomogeneousWeights homogeneous_weights(const Rational& rho0, const Rational& q) {
    return {vertex_weight(VertexType::a1, rho0, rho0, q), vertex_weight(VertexType::b1, rho0, rho0, q),
            vertex_weight(VertexType::c1, rho0, rho0, q)};
}

Rational homogeneous_from_generating(std::size_t n, const MultiPoly& z_asm, const Rational& rho0, const Rational& q) {
    auto [a, b, c] = homogeneous_weights(rho0, q);
    if (b == 0) throw std::domain_error("b weight vanishes");
    std::vector<Rational> pt = {(a / b) * (a / b), (c / b) * (c / b), Rational(1), Rational(1), Rational(1)};
    return rpow(b, long(n * (n - 1))) * rpow(c, long(n)) * z_asm.eval(pt);
}

Rational refined_from_generating(std::size_t n, const MultiPoly& z_asm, const Rational& sigma, const Rational& rho0,
                                 const Rational& q) {
    auto [a, b, c] = homogeneous_weights(rho0, q);
    Rational at = vertex_weight(VertexType::a1, sigma, rho0, q);
    Rational bt = vertex_weight(VertexType::b1, sigma, rho0, q);
    Rational ct = vertex_weight(VertexType::c1, sigma, rho0, q);
    if (b == 0 || a == 0 || bt == 0) throw std::domain_error("degenerate refined weights");
    std::vector<Rational> pt = {(a / b) * (a / b), (c / b) * (c / b), at * b / (a * bt), Rational(1), Rational(1)};
    long m = long(n) - 1;
    return rpow(b, m * m) * rpow(bt, m) * rpow(c, m) * ct * z_asm.eval(pt);
}

IkPoint homogeneous_point(std::size_t n, const Rational& rho0, const Rational& q) {
    return IkPoint{std::vector<Rational>(n, rho0), std::vector<Rational>(n, rho0), q};
}

IkPoint refined_point(std::size_t n, const Rational& sigma, const Rational& rho0, const Rational& q) {
    IkPoint p = homogeneous_point(n, rho0, q);
    p.s[0] = sigma;
    return p;
}

}  // namespace asmdpp
