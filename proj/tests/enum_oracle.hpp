#pragma once

// Test-only brute-force short-vector oracle: enumerate the integer box
// |x_j| <= sqrt(hi * (gram^{-1})_jj) and filter by the exact Gram norm,
// keeping one canonical representative per +- pair. Independent of the
// tree-search implementation it cross-checks.

#include <set>
#include <vector>

#include "twodist/lattice.hpp"

namespace twodist::testing {

inline std::set<std::vector<long>> brute_force_short(const GramLattice& l, const Rat& lo, const Rat& hi) {
    const int n = l.rank;
    RatMatrix inv = l.gram.inverse();
    std::vector<long> bound(n);
    for (int j = 0; j < n; ++j) {
        Rat b = hi * inv.at(j, j);
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        if (sgn(fl) < 0) fl = 0;
        Int r;
        mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
        bound[j] = r.get_si() + 1;
    }
    std::set<std::vector<long>> out;
    std::vector<long> x(n);
    for (int j = 0; j < n; ++j) x[j] = -bound[j];
    while (true) {
        IntVec v(n);
        for (int j = 0; j < n; ++j) v[j] = x[j];
        Rat nn = norm2(l, v);
        bool nonzero = false;
        for (long e : x)
            if (e) nonzero = true;
        if (nonzero && nn >= lo && nn <= hi) {
            std::vector<long> c = x;
            for (int j = 0; j < n; ++j) {
                if (c[j] != 0) {
                    if (c[j] < 0)
                        for (long& e : c) e = -e;
                    break;
                }
            }
            out.insert(c);
        }
        int j = 0;
        while (j < n && x[j] == bound[j]) {
            x[j] = -bound[j];
            ++j;
        }
        if (j == n) break;
        ++x[j];
    }
    return out;
}

inline Rat brute_force_minimum(const GramLattice& l) {
    IntMatrix g = l.scaled_gram();
    Int seed = g.at(0, 0);
    for (int i = 1; i < l.rank; ++i)
        if (g.at(i, i) < seed) seed = g.at(i, i);
    Rat hi(seed);
    hi /= Rat(l.scale_denominator);
    Rat best = hi;
    for (const auto& c : brute_force_short(l, make_rat(1, 1000000000), hi)) {
        IntVec v(l.rank);
        for (int j = 0; j < l.rank; ++j) v[j] = c[j];
        Rat nn = norm2(l, v);
        if (nn < best) best = nn;
    }
    return best;
}

}  // namespace twodist::testing
