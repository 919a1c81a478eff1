#include "tautpoly/boundary.hpp"

#include <map>

namespace tautpoly {

CuspStructure cusps(const TransverseTaut& tt) {
    CuspStructure c;
    c.count = tt.num_cusps;
    c.index = tt.cusp_class;
    return c;
}

bool verify_carried(const TransverseTaut& tt, const std::vector<Int>& w) {
    if ((int)w.size() != tt.num_faces) throw parse_error("weight vector has wrong length");
    bool nonzero = false;
    for (const Int& x : w) {
        if (x < 0) return false;
        if (x > 0) nonzero = true;
    }
    if (!nonzero) return false;
    IntMatrix B = branch_matrix(tt);
    for (int e = 0; e < tt.num_edges; ++e) {
        Int s = 0;
        for (int f = 0; f < tt.num_faces; ++f) s += w[f] * B.at(f, e);
        if (s != 0) return false;
    }
    return true;
}

std::vector<DualCycle> boundary_cycles(const TransverseTaut& tt, const std::vector<Int>& w) {
    if (!verify_carried(tt, w)) throw domain_error("weights are not a carried surface");

    // position of each face attachment in its edge link:
    // key = (tet, face slot, edge vertex pair within the tet)
    std::map<std::tuple<int, int, int, int>, std::tuple<int, int, int>> position;
    for (int e = 0; e < tt.num_edges; ++e)
        for (int s = 0; s < 2; ++s) {
            const auto& side = tt.links[e].side[s];
            for (size_t i = 0; i < side.size(); ++i)
                position[{side[i].tet, side[i].slot, side[i].pair[0], side[i].pair[1]}] = {e, s, (int)i};
        }

    std::vector<DualCycle> out(tt.num_cusps, DualCycle(tt.num_faces, 0));
    for (int f = 0; f < tt.num_faces; ++f) {
        if (w[f] == 0) continue;
        // work in the embedding where the face is cooriented outward
        auto [t, s] = tt.top_emb_of_face[f];
        int corners[3];
        int c = 0;
        for (int v = 0; v < 4; ++v)
            if (v != s) corners[c++] = v;
        // boundary orientation induced on the face, seen from the coorientation side
        const int sgn = ((s % 2 == 0) ? 1 : -1) * tt.orient[t];
        if (sgn < 0) std::swap(corners[0], corners[2]);
        for (int ci = 0; ci < 3; ++ci) {
            const int v = corners[ci];
            const int vprev = corners[(ci + 2) % 3];
            const int vnext = corners[(ci + 1) % 3];
            const int cusp = tt.cusp_class[t][v];
            // the corner arc runs from the edge behind the corner to the edge
            // ahead of it; its push-off collects the faces higher up the link
            const std::tuple<int, int, int, int> down_key{t, s, std::min(vprev, v), std::max(vprev, v)};
            const std::tuple<int, int, int, int> up_key{t, s, std::min(v, vnext), std::max(v, vnext)};
            {
                auto [e, sd, i] = position.at(down_key);
                const auto& side = tt.links[e].side[sd];
                for (size_t k = i + 1; k < side.size(); ++k) out[cusp][side[k].face] -= w[f];
            }
            {
                auto [e, sd, i] = position.at(up_key);
                const auto& side = tt.links[e].side[sd];
                for (size_t k = i + 1; k < side.size(); ++k) out[cusp][side[k].face] += w[f];
            }
        }
    }
    return out;
}

LaurentPoly teichmueller_polynomial(const VeeringTriangulation& vt, const std::vector<Int>& w,
                                    const std::vector<int>& fill_cusps) {
    for (int j : fill_cusps)
        if (j < 0 || j >= vt.num_cusps) throw parse_error("fill cusp index out of range");
    std::vector<DualCycle> all = boundary_cycles(vt, w);
    std::vector<DualCycle> C;
    for (int j : fill_cusps) C.push_back(all[j]);
    return taut_polynomial(vt, C);
}

}  // namespace tautpoly
