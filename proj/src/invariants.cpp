#include "tautpoly/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tautpoly {

namespace {

// running products of inverse face labels up one side of an edge link
ExpVec accumulate_inverse(const ExpVec& cur, const ExpVec& lam) { return exp_sub(cur, lam); }

LaurentMatrix taut_matrix_impl(const TransverseTaut& tt, const FaceLaurents& fl, bool upper) {
    LaurentMatrix D(tt.num_edges, tt.num_faces, fl.rank);
    for (int e = 0; e < tt.num_edges; ++e) {
        for (int s = 0; s < 2; ++s) {
            const auto& side = tt.links[e].side[s];
            ExpVec cur(fl.rank, 0);
            for (size_t i = 0; i < side.size(); ++i) {
                if (i > 0) cur = accumulate_inverse(cur, fl.lam[side[i - 1].face]);
                // +1 on the large edge of the face: lowermost attachment for the
                // lower track, uppermost for the upper track
                const bool large = upper ? (i + 1 == side.size()) : (i == 0);
                D.at(e, side[i].face).add_term(cur, large ? 1 : -1);
            }
        }
    }
    return D;
}

}  // namespace

LaurentMatrix taut_matrix(const VeeringTriangulation& vt, const FaceLaurents& fl) {
    return taut_matrix_impl(vt, fl, false);
}

LaurentMatrix taut_matrix_upper(const VeeringTriangulation& vt, const FaceLaurents& fl) {
    return taut_matrix_impl(vt, fl, true);
}

LaurentPoly taut_polynomial(const VeeringTriangulation& vt, const std::vector<DualCycle>& C) {
    FaceLaurents fl = triangulation_cover(vt, C);
    LaurentMatrix D = taut_matrix(vt, fl);
    std::vector<bool> in_tree(vt.num_faces, false);
    for (int f : fl.tree) in_tree[f] = true;
    std::vector<int> nontree;
    for (int f = 0; f < vt.num_faces; ++f)
        if (!in_tree[f]) nontree.push_back(f);
    return maximal_minors_gcd(D.select_columns(nontree));
}

namespace {

LaurentMatrix veering_matrix_lower(const TransverseTaut& tt, int rank,
                                   const std::vector<ExpVec>& lam) {
    const int n = tt.tri.n;
    LaurentMatrix N(tt.num_edges, n, rank);
    for (int e = 0; e < tt.num_edges; ++e) {
        const EdgeLink& link = tt.links[e];
        N.at(e, link.below_tet).add_term(ExpVec(rank, 0), 1);
        ExpVec top(rank, 0);
        for (const auto& entry : link.side[0]) top = exp_sub(top, lam[entry.face]);
        N.at(e, link.above_tet).add_term(top, -1);
        for (int s = 0; s < 2; ++s) {
            const auto& side = link.side[s];
            ExpVec cur(rank, 0);
            for (size_t i = 0; i + 1 < side.size(); ++i) {
                cur = exp_sub(cur, lam[side[i].face]);
                // the lowermost side tetrahedron on each side has its bottom
                // diagonal coloured like e and does not enter the relation
                if (i > 0) N.at(e, side[i].above).add_term(cur, -1);
            }
        }
    }
    // align columns: column i is the tetrahedron whose top diagonal is edge i
    std::vector<int> tet_of_edge(tt.num_edges, -1);
    for (int t = 0; t < n; ++t) tet_of_edge[tt.top_diag_edge(t)] = t;
    LaurentMatrix M(tt.num_edges, n, rank);
    for (int e = 0; e < tt.num_edges; ++e)
        for (int i = 0; i < n; ++i) M.at(e, i) = N.at(e, tet_of_edge[i]);
    return M;
}

std::vector<ExpVec> invert_all(const std::vector<ExpVec>& lam) {
    std::vector<ExpVec> out(lam.size());
    for (size_t i = 0; i < lam.size(); ++i) out[i] = exp_neg(lam[i]);
    return out;
}

}  // namespace

LaurentMatrix veering_matrix(const VeeringTriangulation& vt, const FaceLaurents& fl, Side side) {
    if (side == Side::Lower) return veering_matrix_lower(vt, fl.rank, fl.lam);
    VeeringTriangulation rev = reverse_triangulation(vt);
    return veering_matrix_lower(rev, fl.rank, invert_all(fl.lam));
}

LaurentPoly veering_polynomial(const VeeringTriangulation& vt, Side side) {
    FaceLaurents fl = triangulation_cover(vt, {});
    return laurent_det(veering_matrix(vt, fl, side));
}

LaurentPoly lower_veering_polynomial(const VeeringTriangulation& vt) {
    return veering_polynomial(vt, Side::Lower);
}

LaurentPoly upper_veering_polynomial(const VeeringTriangulation& vt) {
    return veering_polynomial(vt, Side::Upper);
}

FlowGraph flow_graph(const VeeringTriangulation& vt, Side side) {
    FlowGraph g;
    g.num_vertices = vt.num_edges;
    for (int t = 0; t < vt.tri.n; ++t) {
        const int top = vt.top_diag_edge(t);
        const int bottom = vt.bottom_diag_edge(t);
        const int src = (side == Side::Lower) ? top : bottom;
        const int dst = (side == Side::Lower) ? bottom : top;
        g.arcs.push_back({src, dst, true});
        // the two equatorial edges coloured unlike the opposite diagonal
        const Colour avoid = vt.colour[dst];
        int added = 0;
        for (int q = 0; q < 3; ++q) {
            if (q == vt.pi_pair[t]) continue;
            for (int half = 0; half < 2; ++half) {
                int e = vt.edge_class[t][kOppositePair[q][half]];
                if (vt.colour[e] != avoid) {
                    g.arcs.push_back({src, e, false});
                    ++added;
                }
            }
        }
        if (added != 2) throw domain_error("flow graph: tetrahedron is not veering");
    }
    return g;
}

namespace {

using AdjMatrix = std::vector<std::vector<int>>;

AdjMatrix adjacency(const FlowGraph& g) {
    AdjMatrix a(g.num_vertices, std::vector<int>(g.num_vertices, 0));
    for (const auto& arc : g.arcs) ++a[arc.from][arc.to];
    return a;
}

// vertex signatures refined by neighbour signatures until stable
std::vector<long> refine(const AdjMatrix& a) {
    const int n = (int)a.size();
    std::vector<long> sig(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<long> k{sig[v]};
            std::vector<long> outs, ins;
            for (int w = 0; w < n; ++w) {
                if (a[v][w]) outs.push_back(sig[w] * 64 + a[v][w]);
                if (a[w][v]) ins.push_back(sig[w] * 64 + a[w][v]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            k.push_back(-1);
            k.insert(k.end(), outs.begin(), outs.end());
            k.push_back(-2);
            k.insert(k.end(), ins.begin(), ins.end());
            keys[v] = std::move(k);
        }
        // canonical ids: rank of the key in sorted order, comparable across graphs
        std::map<std::vector<long>, long> index;
        for (int v = 0; v < n; ++v) index[keys[v]] = 0;
        long id = 0;
        for (auto& [k, val] : index) val = id++;
        std::vector<long> next(n);
        for (int v = 0; v < n; ++v) next[v] = index[keys[v]];
        if (next == sig) break;
        sig = std::move(next);
    }
    return sig;
}

bool extend(const AdjMatrix& a, const AdjMatrix& b, const std::vector<long>& sa,
            const std::vector<long>& sb, std::vector<int>& map, std::vector<bool>& used, int v) {
    const int n = (int)a.size();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || sa[v] != sb[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            if (a[v][u] != b[w][map[u]] || a[u][v] != b[map[u]][w]) ok = false;
        }
        if (a[v][v] != b[w][w]) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend(a, b, sa, sb, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool graphs_isomorphic(const FlowGraph& ga, const FlowGraph& gb) {
    if (ga.num_vertices != gb.num_vertices || ga.arcs.size() != gb.arcs.size()) return false;
    AdjMatrix a = adjacency(ga), b = adjacency(gb);
    std::vector<long> sa = refine(a), sb = refine(b);
    std::vector<long> ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return false;
    std::vector<int> map(a.size(), -1);
    std::vector<bool> used(a.size(), false);
    return extend(a, b, sa, sb, map, used, 0);
}

std::string to_dot(const FlowGraph& g) {
    std::ostringstream os;
    os << "digraph flow {\n";
    for (int v = 0; v < g.num_vertices; ++v) os << "  e" << v << ";\n";
    for (const auto& arc : g.arcs) {
        os << "  e" << arc.from << " -> e" << arc.to;
        if (arc.diagonal) os << " [style=bold, color=\"black:black\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace tautpoly
