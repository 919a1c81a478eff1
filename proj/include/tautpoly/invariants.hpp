#pragma once

#include "tautpoly/cover.hpp"
#include "tautpoly/laurent_matrix.hpp"

namespace tautpoly {

enum class Side { Lower, Upper };

// Switch-relation matrix of the lower track over the cover encoded by `fl`:
// rows indexed by edges, columns by faces. Column f carries +1 at the lower
// large edge of f and minus monomials at its other two edges.
LaurentMatrix taut_matrix(const VeeringTriangulation& vt, const FaceLaurents& fl);

// Same relations read off the upper track (used by the lower=upper tests).
LaurentMatrix taut_matrix_upper(const VeeringTriangulation& vt, const FaceLaurents& fl);

// Normalized gcd of the n+1 non-tree maximal minors over the cover with the
// cycles in C killed. Empty C = invariant of the maximal free abelian cover.
LaurentPoly taut_polynomial(const VeeringTriangulation& vt, const std::vector<DualCycle>& C = {});

// Four-term tetrahedron relation matrix with columns aligned to edges through
// top diagonals (lower) / bottom diagonals (upper); the determinant is then a
// well-defined element of the group ring, not just a unit class.
LaurentMatrix veering_matrix(const VeeringTriangulation& vt, const FaceLaurents& fl, Side side);

// Exact determinant (sign and monomial preserved).
LaurentPoly lower_veering_polynomial(const VeeringTriangulation& vt);

// Lower polynomial of the reversed triangulation, expressed in the basis of
// the original cover by inverting the face monomials in place.
LaurentPoly upper_veering_polynomial(const VeeringTriangulation& vt);

LaurentPoly veering_polynomial(const VeeringTriangulation& vt, Side side);

// Directed multigraph on the edge classes with three arrows per tetrahedron;
// `diagonal` marks the diagonal-to-diagonal arrow.
struct FlowGraph {
    struct Arc {
        int from, to;
        bool diagonal;
    };
    int num_vertices = 0;
    std::vector<Arc> arcs;
};

FlowGraph flow_graph(const VeeringTriangulation& vt, Side side);

// Isomorphism of bare directed multigraphs (the diagonal mark is ignored).
bool graphs_isomorphic(const FlowGraph& a, const FlowGraph& b);

std::string to_dot(const FlowGraph& g);

}  // namespace tautpoly
