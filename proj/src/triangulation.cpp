#include "tautpoly/triangulation.hpp"

#include <algorithm>
#include <sstream>

namespace tautpoly {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    // class indices in first-occurrence order
    std::vector<int> classes(int* count) {
        std::vector<int> idx(parent.size());
        std::vector<int> remap(parent.size(), -1);
        int k = 0;
        for (int x = 0; x < (int)parent.size(); ++x) {
            int r = find(x);
            if (remap[r] < 0) remap[r] = k++;
            idx[x] = remap[r];
        }
        *count = k;
        return idx;
    }
};

// pi-pair index of the edge of face `slot` that belongs to the opposite pair
// carrying the pi angles; a face contains exactly one edge of each pair.
int contained_pi_edge(int pi, int slot) {
    for (int half = 0; half < 2; ++half) {
        int es = kOppositePair[pi][half];
        if (kEdgePair[es][0] != slot && kEdgePair[es][1] != slot) return half;
    }
    throw std::logic_error("contained_pi_edge");
}

}  // namespace

void check_taut(const GluedTriangulation& tri, const TautStructure& taut) {
    if ((int)taut.pi_pair.size() != tri.n) throw parse_error("angle count mismatch");
    UnionFind uf(6 * tri.n);
    for (int t = 0; t < tri.n; ++t)
        for (int s = 0; s < 4; ++s) {
            const Gluing& g = tri.glue[t][s];
            for (int es = 0; es < 6; ++es) {
                auto [a, b] = kEdgePair[es];
                if (a == s || b == s) continue;
                uf.unite(t * 6 + es, g.tet * 6 + edge_slot(g.perm[a], g.perm[b]));
            }
        }
    int num_edges = 0;
    std::vector<int> eidx = uf.classes(&num_edges);
    std::vector<int> pi_count(num_edges, 0);
    for (int t = 0; t < tri.n; ++t)
        for (int half = 0; half < 2; ++half) ++pi_count[eidx[t * 6 + kOppositePair[taut.pi_pair[t]][half]]];
    for (int e = 0; e < num_edges; ++e)
        if (pi_count[e] != 2)
            throw domain_error("not taut: angle sum around edge " + std::to_string(e) +
                               " is " + std::to_string(pi_count[e]) + "*pi");
}

bool TransverseTaut::face_is_top(int tet, int slot) const {
    return contained_pi_edge(pi_pair[tet], slot) == top_choice[tet];
}

int TransverseTaut::top_diag_edge(int tet) const {
    return edge_class[tet][kOppositePair[pi_pair[tet]][top_choice[tet]]];
}

int TransverseTaut::bottom_diag_edge(int tet) const {
    return edge_class[tet][kOppositePair[pi_pair[tet]][1 - top_choice[tet]]];
}

namespace {

void build_skeleton(TransverseTaut& tt) {
    const GluedTriangulation& tri = tt.tri;
    const int n = tri.n;
    UnionFind edges(6 * n), faces(4 * n), verts(4 * n);
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < 4; ++s) {
            const Gluing& g = tri.glue[t][s];
            faces.unite(t * 4 + s, g.tet * 4 + g.perm[s]);
            for (int v = 0; v < 4; ++v)
                if (v != s) verts.unite(t * 4 + v, g.tet * 4 + g.perm[v]);
            for (int es = 0; es < 6; ++es) {
                auto [a, b] = kEdgePair[es];
                if (a == s || b == s) continue;
                edges.unite(t * 6 + es, g.tet * 6 + edge_slot(g.perm[a], g.perm[b]));
            }
        }
    std::vector<int> ec = edges.classes(&tt.num_edges);
    std::vector<int> fc = faces.classes(&tt.num_faces);
    std::vector<int> vc = verts.classes(&tt.num_cusps);
    tt.edge_class.assign(n, {});
    tt.face_class.assign(n, {});
    tt.cusp_class.assign(n, {});
    for (int t = 0; t < n; ++t) {
        for (int es = 0; es < 6; ++es) tt.edge_class[t][es] = ec[t * 6 + es];
        for (int s = 0; s < 4; ++s) {
            tt.face_class[t][s] = fc[t * 4 + s];
            tt.cusp_class[t][s] = vc[t * 4 + s];
        }
    }
    tt.face_emb.assign(tt.num_faces, {});
    std::vector<int> seen(tt.num_faces, 0);
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < 4; ++s) {
            int f = tt.face_class[t][s];
            if (seen[f] < 2) tt.face_emb[f][seen[f]] = {t, s};
            ++seen[f];
        }
    for (int f = 0; f < tt.num_faces; ++f)
        if (seen[f] != 2) throw parse_error("face with " + std::to_string(seen[f]) + " embeddings");
    // tetrahedron orientations: gluings reverse the induced boundary orientation
    tt.orient.assign(n, 0);
    tt.orient[0] = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int t = queue.back();
        queue.pop_back();
        for (int s = 0; s < 4; ++s) {
            const Gluing& g = tri.glue[t][s];
            int want = -tt.orient[t] * g.perm.sign();
            if (tt.orient[g.tet] == 0) {
                tt.orient[g.tet] = want;
                queue.push_back(g.tet);
            } else if (tt.orient[g.tet] != want) {
                throw domain_error("triangulation is not orientable");
            }
        }
    }
}

void build_links(TransverseTaut& tt) {
    const int n = tt.tri.n;
    std::vector<int> below(tt.num_edges, -1), above(tt.num_edges, -1);
    for (int t = 0; t < n; ++t) {
        int te = tt.top_diag_edge(t);
        if (below[te] >= 0) throw domain_error("edge is the top diagonal of two tetrahedra");
        below[te] = t;
        int be = tt.bottom_diag_edge(t);
        if (above[be] >= 0) throw domain_error("edge is the bottom diagonal of two tetrahedra");
        above[be] = t;
    }
    for (int e = 0; e < tt.num_edges; ++e)
        if (below[e] < 0 || above[e] < 0) throw domain_error("edge without top/bottom tetrahedron");

    tt.links.assign(tt.num_edges, {});
    for (int e = 0; e < tt.num_edges; ++e) {
        EdgeLink link;
        link.below_tet = below[e];
        link.above_tet = above[e];
        const int b0 = below[e];
        const auto pair0 = tt.top_pair[b0];
        int start_slots[2];
        int c = 0;
        for (int v = 0; v < 4; ++v)
            if (v != pair0[0] && v != pair0[1]) start_slots[c++] = v;
        for (int sidei = 0; sidei < 2; ++sidei) {
            int t = b0, va = pair0[0], vb = pair0[1], s = start_slots[sidei];
            for (;;) {
                const Gluing& g = tt.tri.glue[t][s];
                LinkEntry entry;
                entry.face = tt.face_class[t][s];
                entry.below = t;
                entry.above = g.tet;
                entry.tet = t;
                entry.slot = s;
                entry.pair = {std::min(va, vb), std::max(va, vb)};
                link.side[sidei].push_back(entry);
                int na = g.perm[va], nb = g.perm[vb];
                int s_in = g.perm[s];
                int d = g.tet;
                std::array<int, 2> p{std::min(na, nb), std::max(na, nb)};
                if (p == tt.bottom_pair[d]) break;  // reached the tetrahedron above e
                link.side_tets[sidei].push_back(d);
                int next = -1;
                for (int z = 0; z < 4; ++z)
                    if (z != na && z != nb && z != s_in) next = z;
                t = d;
                va = na;
                vb = nb;
                s = next;
            }
        }
        // deterministic side naming: lexicographically smaller face sequence on the left
        auto key = [](const std::vector<LinkEntry>& v) {
            std::vector<int> k;
            for (const auto& x : v) k.push_back(x.face);
            return k;
        };
        if (key(link.side[1]) < key(link.side[0])) {
            std::swap(link.side[0], link.side[1]);
            std::swap(link.side_tets[0], link.side_tets[1]);
        }
        tt.links[e] = std::move(link);
    }

    tt.below_tet_of_face.assign(tt.num_faces, -1);
    tt.above_tet_of_face.assign(tt.num_faces, -1);
    tt.top_emb_of_face.assign(tt.num_faces, {-1, -1});
    for (int f = 0; f < tt.num_faces; ++f)
        for (const auto& [t, s] : tt.face_emb[f]) {
            if (tt.face_is_top(t, s)) {
                tt.below_tet_of_face[f] = t;
                tt.top_emb_of_face[f] = {t, s};
            } else {
                tt.above_tet_of_face[f] = t;
            }
        }
    for (int f = 0; f < tt.num_faces; ++f)
        if (tt.below_tet_of_face[f] < 0 || tt.above_tet_of_face[f] < 0)
            throw domain_error("face coorientation inconsistent");
}

TransverseTaut build_transverse(const GluedTriangulation& tri, const TautStructure& taut,
                                int tet0_choice) {
    TransverseTaut tt;
    tt.tri = tri;
    tt.pi_pair = taut.pi_pair;
    build_skeleton(tt);
    const int n = tri.n;
    // propagate the binary top/bottom choice: a face is a top face of exactly
    // one of the two tetrahedra it bounds
    tt.top_choice.assign(n, -1);
    tt.top_choice[0] = tet0_choice;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int t = queue.back();
        queue.pop_back();
        for (int s = 0; s < 4; ++s) {
            const Gluing& g = tri.glue[t][s];
            int t2 = g.tet, s2 = g.perm[s];
            int c1 = contained_pi_edge(taut.pi_pair[t], s);
            int c2 = contained_pi_edge(taut.pi_pair[t2], s2);
            bool top1 = (c1 == tt.top_choice[t]);
            // the shared face must be bottom on the other side
            int need = top1 ? (1 - c2) : c2;
            if (tt.top_choice[t2] < 0) {
                tt.top_choice[t2] = need;
                queue.push_back(t2);
            } else if (tt.top_choice[t2] != need) {
                throw domain_error("taut structure admits no transverse structure");
            }
        }
    }
    tt.top_pair.assign(n, {});
    tt.bottom_pair.assign(n, {});
    for (int t = 0; t < n; ++t) {
        int te = kOppositePair[taut.pi_pair[t]][tt.top_choice[t]];
        int be = kOppositePair[taut.pi_pair[t]][1 - tt.top_choice[t]];
        tt.top_pair[t] = {kEdgePair[te][0], kEdgePair[te][1]};
        tt.bottom_pair[t] = {kEdgePair[be][0], kEdgePair[be][1]};
    }
    build_links(tt);
    return tt;
}

}  // namespace

TransverseTaut recover_transverse_taut(const GluedTriangulation& tri, const TautStructure& taut) {
    check_taut(tri, taut);
    // canonical sign: tetrahedron 0's top diagonal is the lexicographically
    // smaller pi-edge, i.e. the first half of its opposite pair
    return build_transverse(tri, taut, 0);
}

VeeringTriangulation recover_veering_colours(const TransverseTaut& tt) {
    const int n = tt.tri.n;
    for (int e = 0; e < tt.num_edges; ++e) {
        const EdgeLink& l = tt.links[e];
        if (l.degree() < 4 || l.side[0].size() < 2 || l.side[1].size() < 2)
            throw domain_error("not veering: edge " + std::to_string(e) +
                               " has fewer than two faces on a side");
    }
    VeeringTriangulation vt;
    static_cast<TransverseTaut&>(vt) = tt;
    std::vector<int> col(tt.num_edges, -1);  // 0 = Red, 1 = Blue
    col[0] = 0;
    // per tetrahedron the four equatorial edges alternate: opposite equatorial
    // edges share a colour, adjacent ones differ
    struct Con {
        int a, b;
        bool equal;
    };
    std::vector<Con> cons;
    for (int t = 0; t < n; ++t) {
        int pp = tt.pi_pair[t];
        int ids[2][2];
        int k = 0;
        for (int q = 0; q < 3; ++q) {
            if (q == pp) continue;
            ids[k][0] = tt.edge_class[t][kOppositePair[q][0]];
            ids[k][1] = tt.edge_class[t][kOppositePair[q][1]];
            ++k;
        }
        cons.push_back({ids[0][0], ids[0][1], true});
        cons.push_back({ids[1][0], ids[1][1], true});
        cons.push_back({ids[0][0], ids[1][0], false});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Con& c : cons) {
            for (auto [x, y] : {std::pair{c.a, c.b}, std::pair{c.b, c.a}}) {
                if (col[x] < 0) continue;
                int want = c.equal ? col[x] : 1 - col[x];
                if (col[y] < 0) {
                    col[y] = want;
                    changed = true;
                } else if (col[y] != want) {
                    throw domain_error("not veering: no consistent edge colouring");
                }
            }
        }
    }
    for (int e = 0; e < tt.num_edges; ++e)
        if (col[e] < 0) throw domain_error("not veering: uncoloured edge");
    vt.colour.resize(tt.num_edges);
    for (int e = 0; e < tt.num_edges; ++e) vt.colour[e] = col[e] ? Colour::Blue : Colour::Red;
    return vt;
}

VeeringTriangulation reverse_triangulation(const VeeringTriangulation& vt) {
    TautStructure taut{vt.pi_pair};
    TransverseTaut rev = build_transverse(vt.tri, taut, 1 - vt.top_choice[0]);
    VeeringTriangulation out;
    static_cast<TransverseTaut&>(out) = std::move(rev);
    out.colour.resize(vt.colour.size());
    for (size_t e = 0; e < vt.colour.size(); ++e) out.colour[e] = other(vt.colour[e]);
    return out;
}

VeeringTriangulation load_veering(const std::string& input, bool is_text) {
    auto [tri, taut] = is_text ? parse_text_format(input) : parse_census_string(input);
    return recover_veering_colours(recover_transverse_taut(tri, taut));
}

IntMatrix branch_matrix(const TransverseTaut& tt) {
    IntMatrix B(tt.num_faces, tt.num_edges);
    for (int e = 0; e < tt.num_edges; ++e) {
        for (const auto& entry : tt.links[e].side[0]) B.at(entry.face, e) += 1;
        for (const auto& entry : tt.links[e].side[1]) B.at(entry.face, e) -= 1;
    }
    return B;
}

DualGraph dual_graph(const TransverseTaut& tt) {
    DualGraph g;
    g.num_tets = tt.tri.n;
    g.arcs.resize(tt.num_faces);
    for (int f = 0; f < tt.num_faces; ++f) g.arcs[f] = {tt.below_tet_of_face[f], tt.above_tet_of_face[f]};
    return g;
}

std::vector<int> spanning_tree(const DualGraph& g) {
    std::vector<bool> seen(g.num_tets, false);
    seen[0] = true;
    int reached = 1;
    std::vector<int> tree;
    while (reached < g.num_tets) {
        int pick = -1;
        for (int f = 0; f < (int)g.arcs.size(); ++f) {
            auto [a, b] = g.arcs[f];
            if (seen[a] != seen[b]) {
                pick = f;
                break;
            }
        }
        if (pick < 0) throw domain_error("dual graph is disconnected");
        auto [a, b] = g.arcs[pick];
        seen[a] = seen[b] = true;
        tree.push_back(pick);
        ++reached;
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

// --- plain text fixture format ----------------------------------------------
//
//   tets 2
//   tet 0: 1 0132  1 2103  1 1023  1 0321
//   tet 1: ...
//   angles: 12
//
// Four "partner permutation" groups per tetrahedron, one per face slot; the
// permutation lists the images of vertices 0..3.

std::pair<GluedTriangulation, TautStructure> parse_text_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    GluedTriangulation tri;
    TautStructure taut;
    int seen_tets = 0;
    bool have_n = false, have_angles = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "tets") {
            if (!(ls >> tri.n) || tri.n <= 0) throw parse_error("text format: bad tets line");
            tri.glue.assign(tri.n, {});
            have_n = true;
        } else if (word == "tet") {
            if (!have_n) throw parse_error("text format: tet before tets");
            int t;
            char colon;
            if (!(ls >> t) || t < 0 || t >= tri.n) throw parse_error("text format: bad tet index");
            ls >> colon;
            for (int s = 0; s < 4; ++s) {
                int partner;
                std::string perm;
                if (!(ls >> partner >> perm) || perm.size() != 4)
                    throw parse_error("text format: bad gluing entry");
                Gluing g;
                g.tet = partner;
                std::array<bool, 4> used{false, false, false, false};
                for (int v = 0; v < 4; ++v) {
                    if (perm[v] < '0' || perm[v] > '3') throw parse_error("text format: bad permutation");
                    g.perm.img[v] = (uint8_t)(perm[v] - '0');
                    if (used[g.perm.img[v]]) throw parse_error("text format: not a permutation");
                    used[g.perm.img[v]] = true;
                }
                tri.glue[t][s] = g;
            }
            ++seen_tets;
        } else if (word == "angles:" || word == "angles") {
            std::string digits;
            if (!(ls >> digits)) throw parse_error("text format: bad angles line");
            for (char c : digits) {
                if (c < '0' || c > '2') throw parse_error("text format: angle digits must be 0..2");
                taut.pi_pair.push_back(c - '0');
            }
            have_angles = true;
        } else {
            throw parse_error("text format: unknown directive '" + word + "'");
        }
    }
    if (!have_n || seen_tets != tri.n) throw parse_error("text format: missing tetrahedra");
    if (!have_angles || (int)taut.pi_pair.size() != tri.n)
        throw parse_error("text format: angle digit count mismatch");
    tri.check_involution();
    check_taut(tri, taut);
    return {std::move(tri), std::move(taut)};
}

}  // namespace tautpoly
