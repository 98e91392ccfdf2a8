#pragma once

#include <string>
#include <vector>

#include "twodist/graph.hpp"
#include "twodist/lattice.hpp"

namespace twodist {

// The 277-point configuration: the rank-24 lattice carrying the 276 embedded
// points plus the extension point u and the switching root r. Point order:
// u first, then X1..X33, then Y1..Y243. Every point z satisfies <r,z> = 1.
struct PointSet277 {
    GramLattice lattice;  // rank 24, integral Gram; named points X*/Y*
    std::vector<std::string> labels;
    std::vector<IntVec> points;  // 277 coordinate vectors
    IntVec root;

    int size() const { return static_cast<int>(points.size()); }
};

// Embeds the 276 vertices from the Gram matrix A + 3I: rank-24 lattice whose
// named points X1..X33, Y1..Y243 reproduce A + 3I exactly as inner products.
GramLattice embed_points(const Graph276& g);

// The unique (up to sign) norm-2 lattice vector; sign fixed by <r, X1> = 1,
// and <r, v> = 1 asserted for all 276 points. Also cross-checks the closed
// formula r = x1 + x2 + x3 - (4/33) sum(X) + (1/81) sum(Y) exactly.
IntVec find_switching_root(const GramLattice& l);

// u = x1 + x2 + x3 - r for the given part (1..11) of the multipartite block;
// requires the part's three points pairwise orthogonal, and asserts
// ||u||^2 = 5, <r,u> = 1.
IntVec build_u(const GramLattice& l, const IntVec& root, int part);

// Builds u from part 1, verifies all 11 parts give identical coordinates,
// and assembles the full labeled set with <r,z> = 1 checked for all 277.
PointSet277 assemble_point_set(const GramLattice& l, const IntVec& root);

struct DistanceReport {
    long count4 = 0;
    long count6 = 0;
};

// All C(277,2) squared distances via the Gram form; throws NotTwoDistance
// if any value outside {4,6} occurs. Spot-checks the distance law against
// direct coordinate computation on a sample.
DistanceReport verify_two_distance(const PointSet277& ps);

// Verifies that 2n vectors with Gram [[nI, J],[J, nI]] have equal part sums,
// from the Gram matrix alone: ||sum a - sum b||^2 = n^2 + n^2 - 2n^2 = 0.
bool verify_lemma_sum(int n, const IntMatrix& gram_check);

// Extracts the 6x6 Gram of two X-parts from the embedded lattice.
IntMatrix part_pair_gram(const GramLattice& l, int part_a, int part_b);

// Serialization: lattice block (Gram only), then 277 labeled coordinate rows
// and a final "root" row.
std::string pointset_to_text(const PointSet277& ps);
PointSet277 pointset_from_text(const std::string& text);

}  // namespace twodist
