#include "tautpoly/cover.hpp"

namespace tautpoly {

bool is_dual_cycle(const TransverseTaut& tt, const DualCycle& c) {
    if ((int)c.size() != tt.num_faces) return false;
    std::vector<Int> balance(tt.tri.n, 0);
    for (int f = 0; f < tt.num_faces; ++f) {
        balance[tt.below_tet_of_face[f]] -= c[f];
        balance[tt.above_tet_of_face[f]] += c[f];
    }
    for (const Int& b : balance)
        if (b != 0) return false;
    return true;
}

FaceLaurents triangulation_cover(const TransverseTaut& tt, const std::vector<DualCycle>& C) {
    for (const auto& c : C) {
        if ((int)c.size() != tt.num_faces)
            throw parse_error("cycle vector has wrong length (need one entry per face)");
        if (!is_dual_cycle(tt, c)) throw domain_error("vector is not a 1-cycle in the dual graph");
    }
    IntMatrix B = branch_matrix(tt);
    std::vector<int> tree = spanning_tree(dual_graph(tt));
    std::vector<bool> in_tree(tt.num_faces, false);
    for (int f : tree) in_tree[f] = true;
    std::vector<int> nontree;
    for (int f = 0; f < tt.num_faces; ++f)
        if (!in_tree[f]) nontree.push_back(f);

    // (B|C) with the tree rows deleted
    const int rows = (int)nontree.size();
    const int cols = tt.num_edges + (int)C.size();
    IntMatrix M(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int e = 0; e < tt.num_edges; ++e) M.at(i, e) = B.at(nontree[i], e);
        for (int j = 0; j < (int)C.size(); ++j) M.at(i, tt.num_edges + j) = C[j][nontree[i]];
    }
    SnfResult snf = smith_normal_form(M);
    const int r = rows - snf.rank;

    FaceLaurents fl;
    fl.rank = r;
    fl.tree = tree;
    fl.lam.assign(tt.num_faces, ExpVec(r, 0));
    for (int i = 0; i < rows; ++i) {
        ExpVec v(r);
        for (int k = 0; k < r; ++k) {
            const Int& x = snf.U.at(rows - r + k, i);
            if (!x.fits_sint_p()) throw std::overflow_error("face Laurent exponent overflow");
            v[k] = (int)x.get_si();
        }
        fl.lam[nontree[i]] = std::move(v);
    }
    return fl;
}

int rank_of_cover(const TransverseTaut& tt, const std::vector<DualCycle>& C) {
    return triangulation_cover(tt, C).rank;
}

ExpVec cycle_class(const FaceLaurents& fl, const DualCycle& c) {
    ExpVec out(fl.rank, 0);
    for (size_t f = 0; f < c.size(); ++f) {
        if (c[f] == 0) continue;
        if (!c[f].fits_sint_p()) throw std::overflow_error("cycle coefficient overflow");
        long x = c[f].get_si();
        for (int k = 0; k < fl.rank; ++k) out[k] += (int)(x * fl.lam[f][k]);
    }
    return out;
}

}  // namespace tautpoly
