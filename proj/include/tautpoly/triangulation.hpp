#pragma once

#include "tautpoly/int_matrix.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tautpoly {

// Malformed input: bad census string, unreadable fixture, wrong vector length.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Well-formed input outside the domain: not taut, not transverse, not veering,
// weights not carried, vectors failing the cycle condition.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Permutation of {0,1,2,3}.
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    int operator[](int i) const { return img[i]; }
    Perm4 inverse() const;
    int sign() const;
    static Perm4 from_lex_index(int idx);  // index in lexicographic order of images
    bool operator==(const Perm4& o) const { return img == o.img; }
};

// Vertex pairs of a tetrahedron indexing its six edges:
// 0:(01) 1:(02) 2:(03) 3:(12) 4:(13) 5:(23).
inline constexpr std::array<std::array<int, 2>, 6> kEdgePair = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
int edge_slot(int a, int b);

// The three opposite-edge pairs: 0:(01|23) 1:(02|13) 2:(03|12). The taut angle
// digit of a tetrahedron selects the pair carrying the two pi angles.
inline constexpr std::array<std::array<int, 2>, 3> kOppositePair = {{{0, 5}, {1, 4}, {2, 3}}};

struct Gluing {
    int tet = -1;
    Perm4 perm;  // vertex v of this tet -> perm[v] of the partner
};

// Ideal triangulation given by face gluings; every face slot glued.
struct GluedTriangulation {
    int n = 0;
    std::vector<std::array<Gluing, 4>> glue;  // [tet][face slot]

    void check_involution() const;  // throws parse_error
};

struct TautStructure {
    std::vector<int> pi_pair;  // per tetrahedron, 0..2
};

// One attachment of a face to an edge, crossed walking up one side of the
// edge link.
struct LinkEntry {
    int face = -1;        // face class
    int below = -1;       // tetrahedron immediately below the face
    int above = -1;       // tetrahedron immediately above the face
    int tet = -1;         // embedding crossed: face slot `slot` of `tet`
    int slot = -1;
    std::array<int, 2> pair{};  // the edge's vertex pair within `tet`
};

struct EdgeLink {
    int below_tet = -1;  // the edge is its top diagonal
    int above_tet = -1;  // the edge is its bottom diagonal
    std::array<std::vector<LinkEntry>, 2> side;  // bottom-to-top; side[0] = left
    std::array<std::vector<int>, 2> side_tets;   // strictly between below and above
    int degree() const { return (int)(side[0].size() + side[1].size()); }
};

enum class Colour : uint8_t { Red, Blue };
inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

// Transverse taut triangulation: gluings + taut structure + a coorientation,
// with the derived skeleton (edge/face/cusp classes, links, orientations).
struct TransverseTaut {
    GluedTriangulation tri;
    std::vector<int> pi_pair;

    // skeleton
    int num_edges = 0, num_faces = 0, num_cusps = 0;
    std::vector<std::array<int, 6>> edge_class;   // [tet][edge slot]
    std::vector<std::array<int, 4>> face_class;   // [tet][face slot]
    std::vector<std::array<int, 4>> cusp_class;   // [tet][vertex]
    std::vector<std::array<std::pair<int, int>, 2>> face_emb;  // class -> the 2 embeddings
    std::vector<int> orient;  // per-tet orientation sign (+-1)

    // transverse structure
    std::vector<int> top_choice;                  // which pi-edge is the top diagonal (0/1)
    std::vector<std::array<int, 2>> top_pair;     // vertex pair of the top diagonal
    std::vector<std::array<int, 2>> bottom_pair;
    std::vector<int> below_tet_of_face;           // face class -> tet it is a top face of
    std::vector<int> above_tet_of_face;
    std::vector<std::pair<int, int>> top_emb_of_face;  // the (tet, slot) embedding on the below side
    std::vector<EdgeLink> links;                  // per edge class

    bool face_is_top(int tet, int slot) const;
    int top_diag_edge(int tet) const;     // edge class of the top diagonal
    int bottom_diag_edge(int tet) const;
};

struct VeeringTriangulation : TransverseTaut {
    std::vector<Colour> colour;  // per edge class
};

// --- construction -----------------------------------------------------------

// "isoSig_angles"; throws parse_error on malformed strings and domain_error
// when the angle assignment is not taut.
std::pair<GluedTriangulation, TautStructure> parse_census_string(const std::string& s);

// Plain text fixture format (see README): "tets N", one "tet i: ..." line per
// tetrahedron, "angles: <digits>".
std::pair<GluedTriangulation, TautStructure> parse_text_format(const std::string& text);

// Decode only the isoSig part.
GluedTriangulation decode_isosig(const std::string& sig);

// Checks the taut condition: angle sum 2*pi around every edge.
void check_taut(const GluedTriangulation& tri, const TautStructure& taut);

// Coorientation recovery. Canonical choice: tetrahedron 0's top diagonal is
// its pi-edge with the lexicographically smaller vertex pair.
TransverseTaut recover_transverse_taut(const GluedTriangulation& tri, const TautStructure& taut);

// Edge colouring making every tetrahedron veering; edge 0 is Red.
VeeringTriangulation recover_veering_colours(const TransverseTaut& tt);

// Convenience: parse + taut check + transverse + colours.
VeeringTriangulation load_veering(const std::string& census_or_text, bool is_text = false);

// (T, -alpha, -nu): coorientations flipped, colours swapped.
VeeringTriangulation reverse_triangulation(const VeeringTriangulation& vt);

// --- combinatorics ----------------------------------------------------------

// Rows indexed by faces, columns by edges; column e = (left faces) - (right faces).
IntMatrix branch_matrix(const TransverseTaut& tt);

// Directed dual graph: vertex per tetrahedron, edge per face, oriented from
// below_tet to above_tet.
struct DualGraph {
    int num_tets = 0;
    std::vector<std::pair<int, int>> arcs;  // per face class: (below, above)
};
DualGraph dual_graph(const TransverseTaut& tt);

// Faces dual to a spanning tree of the dual graph: grown from tetrahedron 0,
// always attaching the lowest-index face that reaches a new tetrahedron.
std::vector<int> spanning_tree(const DualGraph& g);

}  // namespace tautpoly
