#include "tautpoly/triangulation.hpp"

namespace tautpoly {

Perm4 Perm4::inverse() const {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r.img[img[i]] = i;
    return r;
}

int Perm4::sign() const {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (img[i] > img[j]) s = -s;
    return s;
}

Perm4 Perm4::from_lex_index(int idx) {
    Perm4 p;
    std::array<int, 4> pool{0, 1, 2, 3};
    int npool = 4;
    const int fact[4] = {6, 2, 1, 1};
    for (int k = 0; k < 4; ++k) {
        int d = idx / fact[k];
        idx %= fact[k];
        p.img[k] = (uint8_t)pool[d];
        for (int t = d; t + 1 < npool; ++t) pool[t] = pool[t + 1];
        --npool;
    }
    return p;
}

int edge_slot(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < 6; ++i)
        if (kEdgePair[i][0] == a && kEdgePair[i][1] == b) return i;
    throw std::logic_error("edge_slot: bad pair");
}

void GluedTriangulation::check_involution() const {
    for (int t = 0; t < n; ++t)
        for (int s = 0; s < 4; ++s) {
            const Gluing& g = glue[t][s];
            if (g.tet < 0 || g.tet >= n) throw parse_error("gluing out of range");
            int s2 = g.perm[s];
            const Gluing& back = glue[g.tet][s2];
            if (back.tet != t || !(back.perm == g.perm.inverse()) || back.perm[s2] != s)
                throw parse_error("gluing is not an involution");
        }
}

namespace {

const char kSchars[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int sval(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return 26 + c - 'A';
    if (c >= '0' && c <= '9') return 52 + c - '0';
    if (c == '+') return 62;
    if (c == '-') return 63;
    return -1;
}

}  // namespace

GluedTriangulation decode_isosig(const std::string& sig) {
    size_t pos = 0;
    auto rd = [&]() -> int {
        if (pos >= sig.size()) throw parse_error("isoSig truncated");
        int v = sval(sig[pos++]);
        if (v < 0) throw parse_error("isoSig: invalid character");
        return v;
    };
    int first = rd();
    long n;
    int nchars;
    if (first < 63) {
        n = first;
        nchars = 1;
    } else {
        nchars = rd();
        if (nchars <= 0 || nchars > 8) throw parse_error("isoSig: bad size prefix");
        n = 0;
        for (int i = 0; i < nchars; ++i) n |= (long)rd() << (6 * i);
    }
    if (n <= 0) throw parse_error("isoSig: empty triangulation");
    const long nfacets = 4 * n;
    std::vector<int> actions;
    long used = 0;
    while (used < nfacets) {
        int c = rd();
        for (int j = 0; j < 3 && used < nfacets; ++j) {
            int a = (c >> (2 * j)) & 3;
            if (a == 3) throw parse_error("isoSig: invalid facet action");
            actions.push_back(a);
            used += (a == 0) ? 1 : 2;
        }
    }
    if (used != nfacets) throw parse_error("isoSig: facet count mismatch");
    long njoins = 0;
    for (int a : actions)
        if (a == 2) ++njoins;
    std::vector<long> dests(njoins);
    for (long i = 0; i < njoins; ++i) {
        long v = 0;
        for (int k = 0; k < nchars; ++k) v |= (long)rd() << (6 * k);
        dests[i] = v;
    }
    std::vector<int> gluing_idx(njoins);
    for (long i = 0; i < njoins; ++i) {
        int v = rd();
        if (v >= 24) throw parse_error("isoSig: bad permutation index");
        gluing_idx[i] = v;
    }
    if (pos != sig.size()) throw parse_error("isoSig: trailing characters");

    GluedTriangulation tri;
    tri.n = (int)n;
    tri.glue.assign(n, {});
    std::vector<std::array<bool, 4>> glued(n, {false, false, false, false});
    long ap = 0, jp = 0, next_unused = 1;
    for (long t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (glued[t][f]) continue;
            if (ap >= (long)actions.size()) throw parse_error("isoSig: ran out of facet actions");
            int a = actions[ap++];
            if (a == 0) throw parse_error("isoSig: boundary facet (triangulation not ideal)");
            if (a == 1) {
                if (next_unused >= n) throw parse_error("isoSig: too many new tetrahedra");
                long u = next_unused++;
                Perm4 id;
                tri.glue[t][f] = {(int)u, id};
                tri.glue[u][f] = {(int)t, id};
                glued[t][f] = glued[u][f] = true;
            } else {
                long d = dests[jp];
                Perm4 p = Perm4::from_lex_index(gluing_idx[jp]);
                ++jp;
                if (d >= next_unused) throw parse_error("isoSig: join to unseen tetrahedron");
                int f2 = p[f];
                if (glued[d][f2] || (d == t && f2 == f)) throw parse_error("isoSig: facet already glued");
                tri.glue[t][f] = {(int)d, p};
                tri.glue[d][f2] = {(int)t, p.inverse()};
                glued[t][f] = glued[d][f2] = true;
            }
        }
    tri.check_involution();
    return tri;
}

std::pair<GluedTriangulation, TautStructure> parse_census_string(const std::string& s) {
    auto us = s.find('_');
    if (us == std::string::npos || us == 0 || us + 1 >= s.size())
        throw parse_error("census string must be isoSig_angles");
    GluedTriangulation tri = decode_isosig(s.substr(0, us));
    std::string digits = s.substr(us + 1);
    if ((int)digits.size() != tri.n)
        throw parse_error("angle digit count does not match tetrahedron count");
    TautStructure taut;
    for (char c : digits) {
        if (c < '0' || c > '2') throw parse_error("angle digits must be 0, 1 or 2");
        taut.pi_pair.push_back(c - '0');
    }
    check_taut(tri, taut);
    return {std::move(tri), std::move(taut)};
}

}  // namespace tautpoly
