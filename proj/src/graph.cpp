#include "twodist/graph.hpp"

#include <sstream>

#include "twodist/common.hpp"

namespace twodist {

Graph276 build_gamma(const gf3::Code& y_code) {
    check(static_cast<int>(y_code.codewords.size()) == Graph276::kNY,
          "build_gamma: Y code must have exactly 243 words");

    Graph276 g;
    g.adj.assign(Graph276::kN, {});
    g.x_vertices.reserve(Graph276::kNX);
    for (int i = 1; i <= 11; ++i)
        for (int a = 0; a < 3; ++a) g.x_vertices.emplace_back(a, i);
    g.y_vertices = y_code.codewords;  // already lexicographically sorted

    auto connect = [&g](int u, int v) {
        g.adj[u][v] = true;
        g.adj[v][u] = true;
    };

    for (int u = 0; u < Graph276::kNX; ++u)
        for (int v = u + 1; v < Graph276::kNX; ++v)
            if (g.x_vertices[u].second != g.x_vertices[v].second) connect(u, v);

    for (int u = 0; u < Graph276::kNX; ++u) {
        auto [a, i] = g.x_vertices[u];
        for (int w = 0; w < Graph276::kNY; ++w)
            if (g.y_vertices[w][i - 1] != a) connect(u, Graph276::kNX + w);
    }

    for (int w = 0; w < Graph276::kNY; ++w)
        for (int w2 = w + 1; w2 < Graph276::kNY; ++w2)
            if (gf3::weight(gf3::sub(g.y_vertices[w], g.y_vertices[w2])) == 6)
                connect(Graph276::kNX + w, Graph276::kNX + w2);

    return g;
}

IntMatrix adjacency_matrix(const Graph276& g) {
    IntMatrix a(Graph276::kN, Graph276::kN);
    for (int i = 0; i < Graph276::kN; ++i)
        for (int j = 0; j < Graph276::kN; ++j)
            if (g.adj[i][j]) a.at(i, j) = 1;
    return a;
}

IntMatrix seidel_matrix(const Graph276& g) {
    IntMatrix s(Graph276::kN, Graph276::kN);
    for (int i = 0; i < Graph276::kN; ++i)
        for (int j = 0; j < Graph276::kN; ++j) {
            if (i == j) continue;
            s.at(i, j) = g.adj[i][j] ? 1 : -1;
        }
    return s;
}

QuotientMatrix quotient_matrix(const Graph276& g) {
    std::bitset<Graph276::kN> xmask;
    for (int i = 0; i < Graph276::kNX; ++i) xmask[i] = true;

    QuotientMatrix q;
    for (int v = 0; v < Graph276::kN; ++v) {
        long in_x = static_cast<long>((g.adj[v] & xmask).count());
        long in_y = static_cast<long>(g.adj[v].count()) - in_x;
        bool is_x = v < Graph276::kNX;
        long& rx = is_x ? q.xx : q.yx;
        long& ry = is_x ? q.xy : q.yy;
        if (v == 0 || v == Graph276::kNX) {
            rx = in_x;
            ry = in_y;
        } else if (rx != in_x || ry != in_y) {
            fail("NotEquitable: vertex " + std::to_string(v + 1) + " has counts (" + std::to_string(in_x) +
                 "," + std::to_string(in_y) + ")");
        }
    }
    return q;
}

long edge_count(const Graph276& g) {
    long d = 0;
    for (int v = 0; v < Graph276::kN; ++v) d += g.degree(v);
    return d / 2;
}

std::string edge_list_text(const Graph276& g) {
    std::ostringstream os;
    for (int u = 0; u < Graph276::kN; ++u)
        for (int v = u + 1; v < Graph276::kN; ++v)
            if (g.adj[u][v]) os << (u + 1) << ' ' << (v + 1) << '\n';
    return os.str();
}

std::string adjacency_text(const Graph276& g) {
    std::ostringstream os;
    os << Graph276::kN << ' ' << Graph276::kN << '\n';
    for (int i = 0; i < Graph276::kN; ++i) {
        for (int j = 0; j < Graph276::kN; ++j) {
            if (j) os << ' ';
            os << (g.adj[i][j] ? '1' : '0');
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace twodist
