#pragma once

#include "tautpoly/triangulation.hpp"

namespace tautpoly {

// One simplicial 1-cycle in the dual graph, as a coefficient vector over the
// faces (= dual edges, oriented upward).
using DualCycle = std::vector<Int>;

// Signed flow balance at every dual-graph vertex.
bool is_dual_cycle(const TransverseTaut& tt, const DualCycle& c);

// Monomial labels on the faces encoding a free abelian cover: the label of a
// face records the deck translation crossing it upward, relative to the
// fundamental domain cut out by the spanning tree. Tree faces carry the
// identity.
struct FaceLaurents {
    int rank = 0;
    std::vector<ExpVec> lam;   // per face class
    std::vector<int> tree;     // the spanning-tree faces used
};

// Cover determined by killing the cycles in C (empty C = maximal free abelian
// cover). Throws domain_error if a vector in C fails the cycle condition.
FaceLaurents triangulation_cover(const TransverseTaut& tt, const std::vector<DualCycle>& C);

int rank_of_cover(const TransverseTaut& tt, const std::vector<DualCycle>& C);

// Image of a face-coefficient vector in the cover group (exponent vector),
// i.e. the sum of labels weighted by the vector.
ExpVec cycle_class(const FaceLaurents& fl, const DualCycle& c);

}  // namespace tautpoly
