#include "asmdpp/serialize.hpp"

#include <stdexcept>

namespace asmdpp {

namespace {

std::vector<std::vector<int>> int_rows(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument(std::string(what) + " rows must be arrays");
        rows.emplace_back();
        for (const auto& v : r) {
            if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
            rows.back().push_back(v.get<int>());
        }
    }
    return rows;
}

}  // namespace

json to_json(const Asm& a) { return a.rows(); }
Asm asm_from_json(const json& j) { return Asm::from_rows(int_rows(j, "ASM")); }

json to_json(const Dpp& d) { return d.rows(); }
Dpp dpp_from_json(const json& j) { return Dpp::from_rows(int_rows(j, "DPP")); }

json to_json(const SixVertexConfig& c) {
    json out = json::array();
    for (const auto& row : c.grid()) {
        json r = json::array();
        for (VertexType t : row) r.push_back(type_name(t));
        out.push_back(r);
    }
    return out;
}

SixVertexConfig sixvertex_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("configuration must be a JSON array");
    std::vector<std::vector<VertexType>> g;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("configuration rows must be arrays");
        g.emplace_back();
        for (const auto& v : r) {
            if (!v.is_string()) throw std::invalid_argument("vertex types must be strings");
            g.back().push_back(type_from_name(v.get<std::string>()));
        }
    }
    return SixVertexConfig::from_types(g);
}

json to_json(const PathFamily& f) {
    json out = json::array();
    for (const auto& p : f) out.push_back(p.steps);
    return out;
}

PathFamily nilp_from_json(const json& j, std::size_t n) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("path family must be a non-empty JSON array");
    PathFamily f;
    int start = int(n) - 1;
    for (const auto& s : j) {
        if (!s.is_string()) throw std::invalid_argument("paths must be step strings");
        LatticePath p{{0, start}, s.get<std::string>()};
        start = p.end().x - 1;
        f.push_back(p);
    }
    validate_nilp(f, n);
    return f;
}

json to_json(const MultiPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) {
        json ex = json::array();
        for (auto v : e) ex.push_back(v);
        out.push_back(json::array({c.get_str(), ex}));
    }
    return out;
}

MultiPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a term list");
    MultiPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_array() || t[1].size() != kMaxVars)
            throw std::invalid_argument("bad polynomial term");
        Exponents e{};
        for (std::size_t k = 0; k < kMaxVars; ++k) e[k] = t[1][k].get<std::uint16_t>();
        p.add_term(e, Integer(t[0].get<std::string>()));
    }
    return p;
}

json to_json(const PolyMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
        out.push_back(r);
    }
    return out;
}

json to_json(const OmegaMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(json::array({to_json(m(i, j).coeff(0)), to_json(m(i, j).coeff(1)), to_json(m(i, j).coeff(2))}));
        out.push_back(r);
    }
    return out;
}

}  // namespace asmdpp
