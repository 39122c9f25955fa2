#pragma once

#include "asmdpp/asm.hpp"
#include "asmdpp/dpp.hpp"
#include "asmdpp/lattice_paths.hpp"
#include "asmdpp/matrix.hpp"
#include "asmdpp/six_vertex.hpp"

#include <json.hpp>

namespace asmdpp {

using json = nlohmann::json;

json to_json(const Asm& a);            // [[0,1,0],[1,-1,1],[0,1,0]]
Asm asm_from_json(const json& j);

json to_json(const Dpp& d);            // [[3,3],[2]]
Dpp dpp_from_json(const json& j);

json to_json(const SixVertexConfig& c);  // [["b1","c1"],["c1","b2"]]
SixVertexConfig sixvertex_from_json(const json& j);

// NILP family on G_{n,n} as its step strings; start points follow from n.
json to_json(const PathFamily& f);
PathFamily nilp_from_json(const json& j, std::size_t n);

// Term list: [[coefficient as string, [e_x, e_y, e_z, e_w, e_q]], ...]
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);
json to_json(const PolyMatrix& m);
json to_json(const OmegaMatrix& m);  // each entry: term lists for w^0, w^1, w^2

}  // namespace asmdpp
