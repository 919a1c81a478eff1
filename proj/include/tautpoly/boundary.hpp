#pragma once

#include "tautpoly/invariants.hpp"

namespace tautpoly {

// Cusp data: cusp_class (per tetrahedron vertex) and num_cusps live on the
// TransverseTaut skeleton already; this records the per-cusp view.
struct CuspStructure {
    int count = 0;
    std::vector<std::array<int, 4>> index;  // [tet][vertex] -> cusp
};

CuspStructure cusps(const TransverseTaut& tt);

// Nonnegative, nonzero, integral solution of every branch equation (w^T B = 0).
bool verify_carried(const TransverseTaut& tt, const std::vector<Int>& w);

// For each cusp, a 1-cycle in the dual graph homologous to the boundary of
// the carried surface on that cusp. Cusps the surface misses get zero vectors.
std::vector<DualCycle> boundary_cycles(const TransverseTaut& tt, const std::vector<Int>& w);

// Taut polynomial of the cover with the boundary cycles of the listed cusps
// killed. Empty fill list = plain taut polynomial.
LaurentPoly teichmueller_polynomial(const VeeringTriangulation& vt, const std::vector<Int>& w,
                                    const std::vector<int>& fill_cusps);

}  // namespace tautpoly
