#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "twodist/exactla.hpp"
#include "twodist/intmat.hpp"

namespace twodist {

// A lattice presented by the Gram matrix of a basis; points are integer
// coordinate vectors in that basis and every inner product goes through the
// Gram form. No floating-point embedding is ever materialized.
struct GramLattice {
    int rank = 0;
    RatMatrix gram;             // positive definite
    Int scale_denominator = 1;  // smallest d >= 1 with d*gram integral
    std::vector<std::pair<std::string, IntVec>> named_points;

    IntMatrix scaled_gram() const;  // d * gram
    const IntVec* find_point(const std::string& label) const;
};

// Verifies positive definiteness exactly (all leading principal minors > 0)
// and that every named point has length = rank.
GramLattice make_gram_lattice(RatMatrix gram, std::vector<std::pair<std::string, IntVec>> points = {});
GramLattice make_gram_lattice(const IntMatrix& gram, std::vector<std::pair<std::string, IntVec>> points = {});

Rat inner(const GramLattice& l, const IntVec& a, const IntVec& b);
Rat norm2(const GramLattice& l, const IntVec& a);

// Dual lattice: Gram = gram^{-1}, unrescaled. When the lattice is integral
// (scale_denominator 1) its named points re-express in dual coordinates by
// multiplication with the Gram matrix and are carried over.
GramLattice dual_lattice(const GramLattice& l);

struct EnumStats {
    uint64_t nodes = 0;
    uint64_t emitted = 0;
    bool bignum_path = false;  // arbitrary-precision fallback engaged
};

// Invoked once per canonical vector (sign fixed: first nonzero coordinate
// positive) with coordinates in the lattice's own basis and the exact
// squared norm. Return false to stop (honored in single-worker mode only).
// With workers > 1 the sink may run concurrently on several threads.
using ShortVectorSink = std::function<bool(const IntVec&, const Rat&)>;

// Yields every nonzero lattice vector with lo <= ||v||^2 <= hi, one
// representative per +- pair, each exactly once. Fincke-Pohst tree search on
// the exact fraction-free LDL^T of the (LLL-reduced) scaled Gram matrix; all
// pruning decisions and every emitted norm are exact integer arithmetic, and
// each emitted vector's norm is re-verified by a Gram-form product in the
// original basis. Requires 0 < lo <= hi. Counts and emitted sets are
// independent of the worker count; emission order is DFS order only when
// workers == 1.
EnumStats enumerate_short(const GramLattice& l, const Rat& lo, const Rat& hi, const ShortVectorSink& sink,
                          int workers = 1);

// Convenience: serial enumeration into a vector, DFS order.
std::vector<std::pair<IntVec, Rat>> collect_short(const GramLattice& l, const Rat& lo, const Rat& hi);

// Smallest squared norm of a nonzero lattice vector, by enumeration with a
// shrinking upper bound seeded from the reduced basis diagonal.
Rat lattice_minimum(const GramLattice& l);

// Lattice file format: "rank scale_denominator" on the first line, the
// scaled Gram matrix entries next, then the point count and one labeled
// coordinate row per point.
std::string lattice_to_text(const GramLattice& l);
GramLattice lattice_from_text(const std::string& text);

}  // namespace twodist
