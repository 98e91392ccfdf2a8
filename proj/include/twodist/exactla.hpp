#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twodist/intmat.hpp"

namespace twodist {

// Rank over the rationals by fraction-free (Bareiss) elimination. Every
// intermediate division is checked exact and throws otherwise. rank() may
// split row updates across OpenMP threads and exploits symmetry when the
// input is symmetric; rank_serial() is the plain textbook reference kernel
// kept for testing and benchmarking. Both return identical values.
int rank(const IntMatrix& m);
int rank_serial(const IntMatrix& m);

// Determinant by Bareiss elimination (square input).
Int det_bareiss(const IntMatrix& m);

// Row Hermite normal form: returns only the nonzero rows, pivots positive
// and strictly to the right as rows descend, entries above each pivot
// reduced into [0, pivot). Canonical for the integer row span.
IntMatrix hnf(const IntMatrix& m);

// Membership of v in the integer row span of an HNF matrix h (greedy
// back-substitution along pivots).
bool hnf_reduces_row_to_zero(const IntMatrix& h, const IntVec& v);

// Exact integer inverse of a unimodular matrix; throws if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& u);

// LLL reduction of a positive-definite integer Gram matrix (delta = 99/100),
// operating on the quadratic form only. gram = transform * g * transform^T.
struct LLLGram {
    IntMatrix transform;  // unimodular
    IntMatrix gram;
};
LLLGram lll_reduce_gram(const IntMatrix& g);

// Fraction-free symmetric elimination of a positive-definite integer matrix,
// with no pivoting (the basis order is kept). delta[i] is the leading i x i
// minor (delta[0] = 1); rows.at(i, j) for j >= i is the pivot row of step i,
// equal to the minor on rows {0..i-1, i} and columns {0..i-1, j}. The
// quadratic form decomposes as
//   x^T q x = sum_i (sum_{j>=i} rows(i,j) x_j)^2 / (delta[i] * delta[i+1]).
// Throws NotPositiveDefinite on a nonpositive pivot.
struct FractionFreeLDL {
    std::vector<Int> delta;  // size n+1
    IntMatrix rows;          // n x n, lower part unused
};
FractionFreeLDL fraction_free_ldl(const IntMatrix& q);

// Spectrum certificate: annihilating polynomial verified exactly, then
// multiplicities pinned by Bareiss ranks and the trace.
struct SpectrumCertificate {
    std::string matrix_name;
    int dimension = 0;
    std::vector<std::pair<long, int>> integer_eigenvalues;  // (value, multiplicity)
    bool has_quadratic_pair = false;
    long quad_trace = 0, quad_det = 0, quad_disc = 0;  // conjugate pair: roots of x^2 - trace x + det
    int quad_multiplicity_each = 0;
    std::string annihilator;
    std::vector<std::pair<std::string, int>> ranks;  // (label, computed rank)
};

// a = adjacency matrix of the 276-vertex graph; verifies
// (A - 27I)(A + 3I)(A^2 - 162A + 396I) = 0 and derives multiplicities.
SpectrumCertificate certify_spectrum_gamma(const IntMatrix& a);

// s = Seidel matrix; verifies (S - 55I)(S + 5I) = 0 and multiplicities.
SpectrumCertificate certify_spectrum_seidel(const IntMatrix& s);

// Lattice basis extraction from a positive semi-definite Gram matrix of
// rank r: returns an r x r positive-definite basis Gram B and an n x r
// integer coordinate matrix with coords * B * coords^T = g (verified
// entrywise on every call). The basis is LLL-reduced when reduce is set.
// Throws NotPSD when g is not positive semi-definite.
struct GramBasis {
    int rank = 0;
    IntMatrix basis_gram;
    IntMatrix coords;
};
GramBasis lattice_basis_from_gram(const IntMatrix& g, bool reduce = true);

}  // namespace twodist
