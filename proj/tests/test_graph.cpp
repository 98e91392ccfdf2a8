#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "twodist/common.hpp"
#include "twodist/graph.hpp"

using namespace twodist;

namespace {

const Graph276& gamma() {
    static Graph276 g = build_gamma(gf3::dual(gf3::ternary_golay()));
    return g;
}

}  // namespace

TEST_CASE("vertex counts and ordering") {
    const Graph276& g = gamma();
    CHECK(g.x_vertices.size() == 33);
    CHECK(g.y_vertices.size() == 243);
    // X ordered by part index, then by the field element.
    CHECK(g.x_vertices[0] == std::pair<int, int>{0, 1});
    CHECK(g.x_vertices[1] == std::pair<int, int>{1, 1});
    CHECK(g.x_vertices[2] == std::pair<int, int>{2, 1});
    CHECK(g.x_vertices[3] == std::pair<int, int>{0, 2});
    for (size_t i = 1; i < g.y_vertices.size(); ++i) CHECK(g.y_vertices[i - 1] < g.y_vertices[i]);
}

TEST_CASE("build_gamma rejects a wrong code") {
    CHECK_THROWS_AS(build_gamma(gf3::ternary_golay()), VerificationError);  // 729 words
}

TEST_CASE("X block is complete multipartite with 11 parts of size 3") {
    const Graph276& g = gamma();
    for (int u = 0; u < 33; ++u) {
        int within = 0;
        for (int v = 0; v < 33; ++v) {
            if (u == v) continue;
            bool same_part = g.x_vertices[u].second == g.x_vertices[v].second;
            CHECK(g.adjacent(u, v) == !same_part);
            within += g.adjacent(u, v);
        }
        CHECK(within == 30);  // 33 - 3
    }
}

TEST_CASE("X-Y adjacency rule") {
    const Graph276& g = gamma();
    for (int u : {0, 7, 32}) {
        auto [a, i] = g.x_vertices[u];
        for (int w = 0; w < 243; ++w) CHECK(g.adjacent(u, 33 + w) == (g.y_vertices[w][i - 1] != a));
    }
}

TEST_CASE("Y-Y adjacency rule on a sample") {
    const Graph276& g = gamma();
    for (int w = 0; w < 243; w += 37)
        for (int w2 = w + 1; w2 < 243; w2 += 11) {
            int wt = gf3::weight(gf3::sub(g.y_vertices[w], g.y_vertices[w2]));
            CHECK(g.adjacent(33 + w, 33 + w2) == (wt == 6));
        }
}

TEST_CASE("degrees and edge count") {
    const Graph276& g = gamma();
    for (int v = 0; v < 33; ++v) CHECK(g.degree(v) == 192);
    for (int v = 33; v < 276; ++v) CHECK(g.degree(v) == 154);
    CHECK(edge_count(g) == 21879);
}

TEST_CASE("equitable quotient matrix") {
    QuotientMatrix q = quotient_matrix(gamma());
    CHECK(q.xx == 30);
    CHECK(q.xy == 162);
    CHECK(q.yx == 22);
    CHECK(q.yy == 132);
    // Characteristic polynomial of the quotient: x^2 - 162x + 396.
    CHECK(q.xx + q.yy == 162);
    CHECK(q.xx * q.yy - q.xy * q.yx == 396);
    CHECK(162L * 162 - 4 * 396 == 24660);  // = 4 * 6165
}

TEST_CASE("NotEquitable on a damaged graph") {
    Graph276 g = gamma();
    g.adj[0][40] = !g.adj[0][40];
    g.adj[40][0] = !g.adj[40][0];
    CHECK_THROWS_WITH_AS(quotient_matrix(g), doctest::Contains("NotEquitable"), VerificationError);
}

TEST_CASE("Seidel matrix") {
    const Graph276& g = gamma();
    IntMatrix s = seidel_matrix(g);
    IntMatrix a = adjacency_matrix(g);
    SUBCASE("zero diagonal, +-1 off-diagonal") {
        for (int i = 0; i < 276; ++i)
            for (int j = 0; j < 276; ++j) {
                if (i == j)
                    CHECK(s.at(i, j) == 0);
                else
                    CHECK((s.at(i, j) == 1 || s.at(i, j) == -1));
            }
    }
    SUBCASE("S = 2A + I - J entrywise") {
        for (int i = 0; i < 276; ++i)
            for (int j = 0; j < 276; ++j) {
                Int expected = 2 * a.at(i, j) + (i == j ? 1 : 0) - 1;
                CHECK(s.at(i, j) == expected);
            }
    }
    SUBCASE("S = J - I - 2 A(complement)") {
        for (int i = 0; i < 276; ++i)
            for (int j = 0; j < 276; ++j) {
                Int a_comp = (i != j && !g.adjacent(i, j)) ? 1 : 0;
                Int expected = (i == j ? 0 : 1) - 2 * a_comp;
                CHECK(s.at(i, j) == expected);
            }
    }
}

TEST_CASE("adjacency text export round trip") {
    const Graph276& g = gamma();
    std::string text = adjacency_text(g);
    IntMatrix parsed = IntMatrix::from_text(text);
    CHECK(parsed == adjacency_matrix(g));
}

TEST_CASE("edge list export") {
    const Graph276& g = gamma();
    std::istringstream is(edge_list_text(g));
    long lines = 0;
    int u, v;
    while (is >> u >> v) {
        ++lines;
        CHECK(u >= 1);
        CHECK(u < v);
        CHECK(v <= 276);
        CHECK(g.adjacent(u - 1, v - 1));
    }
    CHECK(lines == edge_count(g));
}
