#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twodist/construction.hpp"
#include "twodist/qsqrt3.hpp"

namespace twodist {

// Z' = Z - u, in ambient (rank-24) coordinates; zprime[0] is the zero vector
// (z = u). Norms are exact and land in {0, 4, 6}.
struct TranslatedSet {
    std::vector<IntVec> zprime;
    std::vector<Int> norms;
};
TranslatedSet translate_by_u(const PointSet277& ps);

// M = the integer span of Z', a rank-23 integral lattice inside the root's
// orthogonal complement. Basis: HNF of the coordinate span, LLL-reduced.
struct SpanLattice {
    GramLattice lattice;            // integral, rank 23
    IntMatrix basis_in_ambient;     // 23 x 24
    std::vector<IntVec> zprime_m;   // the 277 z' in M coordinates
    std::vector<Int> znorms;        // squared norms, aligned with zprime_m
};
SpanLattice build_m(const PointSet277& ps, const TranslatedSet& ts);

// Allowed inner products <z',v> for a new point of squared norm wnorm2:
// {h, h-1} if wnorm2 = 4, {h, h+1} if wnorm2 = 6, where h = znorm2/2.
std::pair<Rat, Rat> admissible_inner_set(const Rat& znorm2, int wnorm2);

// Coordinates of r/2 - u in the dual basis of M (the pairings with the
// basis rows). Verifies membership in M* directly: every pairing and all
// 277 inner products <z', r/2 - u> are integers, and ||r/2 - u||^2 = 9/2.
IntVec expected_extension_coords(const SpanLattice& m, const PointSet277& ps);

// Full-scan admissibility of a candidate given in dual coordinates.
bool admissible4(const SpanLattice& m, const IntVec& dual_coords);
bool admissible6(const SpanLattice& m, const IntVec& dual_coords);

// The bounded checks (no 16.7M enumeration): rank, Minimum(M*) = 5/2, the
// minimum of M itself, and the verdicts for r/2 - u.
struct MaximalityShort {
    int rank_m = 0;
    Rat m_minimum;
    Rat dual_minimum;
    IntVec expected;
    bool expected_adm6 = false;
    bool expected_adm4 = false;
};
MaximalityShort verify_maximality_short(const SpanLattice& m, const PointSet277& ps);

// Streaming certification of Proposition-style uniqueness: enumerate every
// canonical +- pair of M* with norm in [5/2, 6], test adm4/adm6 on both
// signs with early abort in a discrimination-ordered z' list, and compare
// the outcome with the expected record (8,344,585 pairs, no adm4 survivor,
// adm6 survivor set exactly { r/2 - u }). Throws CountMismatch /
// UnexpectedSurvivor / MissingExpectedSurvivor on any deviation.
struct EnumerationCertificate {
    long candidate_pairs = 0;
    long adm4_survivors = 0;
    std::vector<IntVec> adm6_survivors;  // signed, dual coordinates
    IntVec expected;
    uint64_t nodes = 0;
    bool bignum_path = false;
    double wall_seconds = 0.0;
    int workers = 1;
};
EnumerationCertificate certify_unique_extension(const SpanLattice& m, const PointSet277& ps, int workers);

// Exact identity in Q[sqrt(3)]: ||z - ((1+sqrt3)/2) r||^2 = ||z||^2 + 1 for
// all 277 points, i.e. 6 for z = u and 4 otherwise.
bool verify_w_extension(const PointSet277& ps);

inline constexpr long kExpectedCandidatePairs = 8344585;  // 16,689,170 signed

}  // namespace twodist
