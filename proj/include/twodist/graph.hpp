#pragma once

#include <bitset>
#include <string>
#include <utility>
#include <vector>

#include "twodist/gf3.hpp"
#include "twodist/intmat.hpp"

namespace twodist {

// The graph on X u Y: X = 33 vertices (a,i) with a in GF(3), i in 1..11,
// arranged as the complete multipartite graph with 11 parts of size 3;
// Y = the 243 dual-code words. Vertex order: X first (by part index i, then
// by a), then Y in lexicographic codeword order.
struct Graph276 {
    static constexpr int kN = 276;
    static constexpr int kNX = 33;
    static constexpr int kNY = 243;

    std::vector<std::bitset<kN>> adj;            // symmetric, no loops
    std::vector<std::pair<int, int>> x_vertices;  // (a, i), i in 1..11
    std::vector<gf3::Word> y_vertices;

    bool adjacent(int u, int v) const { return adj[u][v]; }
    int degree(int v) const { return static_cast<int>(adj[v].count()); }
};

// Edges: (a,i)~(b,j) iff i != j; (a,i)~y iff y_i != a; y~y' iff wt(y-y') = 6.
// Rejects codes with |code| != 243 or word length != 11.
Graph276 build_gamma(const gf3::Code& y_code);

IntMatrix adjacency_matrix(const Graph276& g);

// S = 2A + I - J: zero diagonal, +1 for adjacent pairs, -1 otherwise.
IntMatrix seidel_matrix(const Graph276& g);

struct QuotientMatrix {
    long xx = 0, xy = 0;  // neighbors of an X-vertex inside X / inside Y
    long yx = 0, yy = 0;
};

// Verifies the partition X u Y is equitable (throws NotEquitable otherwise)
// and returns the quotient matrix.
QuotientMatrix quotient_matrix(const Graph276& g);

long edge_count(const Graph276& g);

std::string edge_list_text(const Graph276& g);   // 1-based "u v" per line
std::string adjacency_text(const Graph276& g);   // 276x276 0/1 matrix text

}  // namespace twodist
