#pragma once

#include "asmdpp/numeric.hpp"

#include <utility>
#include <vector>

namespace asmdpp {

using Partition = std::vector<int>;  // weakly decreasing positive parts

// Sequence of shapes from the empty partition, one square added or removed
// per step. cells[k] is the (row, column), 1-based, of the square changed
// between shapes[k] and shapes[k+1].
struct OscTableau {
    std::vector<Partition> shapes;
    std::vector<std::pair<int, int>> cells;
};

std::vector<OscTableau> enumerate_osc(const Partition& target, std::size_t length);

// d < d' in the order ... -2, 2, -1, 1, 0.
bool content_precedes(int d, int d2);
int ascents(const OscTableau& t);

// Shape with Frobenius coordinates (kappa | kappa - 1); kappa strict.
Partition delta_diagram(const Partition& kappa);
std::vector<Partition> strict_partitions(int p);

// Index s holds the number of tableaux with s ascents.
std::vector<Integer> ascent_distribution_empty(int p);                 // OT(empty, 2p)
std::vector<Integer> ascent_distribution_delta(int p);                 // union of OT(Delta(kappa), 2p)

struct OscCounts {
    Integer asm_side, dpp_side;
};
// asm_side = sum over OT(empty, 2p) of C(n + asc, 2p);
// dpp_side = sum over strict kappa of p, eta in OT(Delta(kappa), 2p).
OscCounts osc_counts(std::size_t n, int p);

}  // namespace asmdpp
