#include "twodist/maximality.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twodist/common.hpp"

namespace twodist {

TranslatedSet translate_by_u(const PointSet277& ps) {
    check(ps.labels[0] == "u", "translate_by_u: point set must start with u");
    check(ps.lattice.scale_denominator == 1, "translate_by_u: integral ambient lattice expected");
    const int r = ps.lattice.rank;
    const IntVec& u = ps.points[0];

    TranslatedSet ts;
    ts.zprime.reserve(ps.size());
    ts.norms.reserve(ps.size());
    for (int i = 0; i < ps.size(); ++i) {
        IntVec z(r);
        for (int j = 0; j < r; ++j) z[j] = ps.points[i][j] - u[j];
        Rat n = norm2(ps.lattice, z);
        check(n.get_den() == 1, "translate_by_u: non-integral norm");
        Int ni = n.get_num();
        check(ni == 0 || ni == 4 || ni == 6, "translate_by_u: ||z-u||^2 = " + ni.get_str() + " not in {0,4,6}");
        ts.zprime.push_back(std::move(z));
        ts.norms.push_back(ni);
    }
    check(sgn(ts.norms[0]) == 0, "translate_by_u: z' for z = u must be zero");
    return ts;
}

SpanLattice build_m(const PointSet277& ps, const TranslatedSet& ts) {
    const int ra = ps.lattice.rank;
    const int n = static_cast<int>(ts.zprime.size());
    IntMatrix stacked(n, ra);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < ra; ++j) stacked.at(i, j) = ts.zprime[i][j];
    IntMatrix h = hnf(stacked);
    if (h.rows() != 23) fail("RankMismatch: span of Z' has rank " + std::to_string(h.rows()) + " != 23");

    // Gram of the HNF basis in the ambient form, then LLL-reduce.
    IntMatrix amb = ps.lattice.scaled_gram();
    IntMatrix gm = h.mul(amb).mul(h.transpose());
    LLLGram red = lll_reduce_gram(gm);
    IntMatrix basis = red.transform.mul(h);  // 23 x 24

    // Express every z' in the reduced basis: back-substitute against the HNF
    // rows, then convert through the unimodular transform.
    IntMatrix uinv = unimodular_inverse(red.transform);
    std::vector<int> pivots(h.rows());
    for (int k = 0; k < h.rows(); ++k) {
        int p = -1;
        for (int j = 0; j < h.cols(); ++j)
            if (sgn(h.at(k, j)) != 0) {
                p = j;
                break;
            }
        pivots[k] = p;
    }

    SpanLattice m;
    m.basis_in_ambient = basis;
    m.zprime_m.reserve(n);
    for (int i = 0; i < n; ++i) {
        IntVec w = ts.zprime[i];
        IntVec ch(h.rows());
        for (int k = 0; k < h.rows(); ++k) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[pivots[k]].get_mpz_t(), h.at(k, pivots[k]).get_mpz_t());
            check(sgn(rem) == 0, "build_m: z' not in the HNF span");
            ch[k] = q;
            if (sgn(q) != 0)
                for (int j = pivots[k]; j < h.cols(); ++j) w[j] -= q * h.at(k, j);
        }
        for (const Int& v : w) check(sgn(v) == 0, "build_m: z' reduction left a remainder");
        IntVec c = IntMatrix::vec_mul(ch, uinv);
        // Exact reconstruction check in ambient coordinates.
        IntVec back = IntMatrix::vec_mul(c, basis);
        check(back == ts.zprime[i], "build_m: coordinate reconstruction failed");
        m.zprime_m.push_back(std::move(c));
    }
    m.znorms = ts.norms;

    // M lies in the orthogonal complement of the root.
    for (int k = 0; k < basis.rows(); ++k) {
        IntVec row(ra);
        for (int j = 0; j < ra; ++j) row[j] = basis.at(k, j);
        check(inner(ps.lattice, ps.root, row) == 0, "build_m: basis vector not orthogonal to the root");
    }

    std::vector<std::pair<std::string, IntVec>> points;
    for (size_t i = 0; i < m.zprime_m.size(); ++i) points.emplace_back("z" + std::to_string(i), m.zprime_m[i]);
    m.lattice = make_gram_lattice(red.gram, std::move(points));
    return m;
}

std::pair<Rat, Rat> admissible_inner_set(const Rat& znorm2, int wnorm2) {
    check(wnorm2 == 4 || wnorm2 == 6, "admissible_inner_set: wnorm2 must be 4 or 6");
    Rat h = znorm2 / 2;
    Rat other = wnorm2 == 4 ? Rat(h - 1) : Rat(h + 1);
    return {h, other};
}

IntVec expected_extension_coords(const SpanLattice& m, const PointSet277& ps) {
    const int ra = ps.lattice.rank;
    const IntVec& u = ps.points[0];
    const Rat half = make_rat(1, 2);

    // v = r/2 - u as a rational ambient vector.
    std::vector<Rat> v(ra);
    for (int j = 0; j < ra; ++j) v[j] = half * Rat(ps.root[j]) - Rat(u[j]);

    auto inner_with = [&](const IntVec& w) {
        Rat acc;
        for (int i = 0; i < ra; ++i) {
            if (sgn(v[i]) == 0) continue;
            Rat row;
            for (int j = 0; j < ra; ++j)
                if (sgn(w[j]) != 0) row += ps.lattice.gram.at(i, j) * Rat(w[j]);
            acc += v[i] * row;
        }
        return acc;
    };

    // ||v||^2 = 9/2, pinned by <r,r> = 2, <r,u> = 1, <u,u> = 5.
    Rat vnorm;
    for (int i = 0; i < ra; ++i) {
        if (sgn(v[i]) == 0) continue;
        Rat row;
        for (int j = 0; j < ra; ++j)
            if (sgn(v[j]) != 0) row += ps.lattice.gram.at(i, j) * v[j];
        vnorm += v[i] * row;
    }
    check(vnorm == make_rat(9, 2), "expected_extension_coords: ||r/2 - u||^2 != 9/2");

    // Dual coordinates are the pairings with the basis rows; integrality is
    // the direct membership certificate for M*.
    IntVec x(m.basis_in_ambient.rows());
    for (int k = 0; k < m.basis_in_ambient.rows(); ++k) {
        IntVec row(ra);
        for (int j = 0; j < ra; ++j) row[j] = m.basis_in_ambient.at(k, j);
        Rat p = inner_with(row);
        check(p.get_den() == 1, "expected_extension_coords: r/2 - u is not in the dual lattice");
        x[k] = p.get_num();
    }

    // Independent check against every z' generator (all 277 pairings
    // integral, and consistent with the dual-coordinate dot products).
    for (size_t i = 0; i < m.zprime_m.size(); ++i) {
        IntVec amb(ra);
        for (int j = 0; j < ra; ++j) amb[j] = ps.points[i][j] - u[j];
        Rat p = inner_with(amb);
        check(p.get_den() == 1, "expected_extension_coords: <z', r/2 - u> not integral");
        Int dot = 0;
        for (size_t k = 0; k < x.size(); ++k) dot += m.zprime_m[i][k] * x[k];
        check(p.get_num() == dot, "expected_extension_coords: pairing mismatch for z'" + std::to_string(i));
    }
    return x;
}

namespace {

bool admissible_full(const SpanLattice& m, const IntVec& x, int wnorm2) {
    for (size_t i = 0; i < m.zprime_m.size(); ++i) {
        Int dot = 0;
        for (size_t k = 0; k < x.size(); ++k) dot += m.zprime_m[i][k] * x[k];
        Int h = m.znorms[i] / 2;
        bool ok = (dot == h) || (wnorm2 == 4 ? dot == h - 1 : dot == h + 1);
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool admissible4(const SpanLattice& m, const IntVec& x) { return admissible_full(m, x, 4); }
bool admissible6(const SpanLattice& m, const IntVec& x) { return admissible_full(m, x, 6); }

MaximalityShort verify_maximality_short(const SpanLattice& m, const PointSet277& ps) {
    MaximalityShort out;
    out.rank_m = m.lattice.rank;
    out.m_minimum = lattice_minimum(m.lattice);
    GramLattice dual = dual_lattice(m.lattice);
    out.dual_minimum = lattice_minimum(dual);
    out.expected = expected_extension_coords(m, ps);
    out.expected_adm6 = admissible6(m, out.expected);
    out.expected_adm4 = admissible4(m, out.expected);
    return out;
}

namespace {

// Hot-path admissibility table: z' rows and half-norms in machine words,
// evaluated in a discrimination order fixed by a warmup sample. Both signs
// of a candidate share each dot product; early abort once both are dead.
struct AdmTable {
    int n = 0;
    std::vector<long> rows;  // one row of n entries per z'
    std::vector<long> h;     // znorm/2 per z'
    std::vector<int> order;

    std::pair<bool, bool> test_pair(const long* x, int wnorm2) const {
        bool pos = true, neg = true;
        const long off = wnorm2 == 4 ? -1 : 1;
        for (size_t oi = 0; oi < order.size(); ++oi) {
            const int i = order[oi];
            const long* row = rows.data() + static_cast<size_t>(i) * n;
            long dot = 0;
            for (int k = 0; k < n; ++k) dot += row[k] * x[k];
            const long hh = h[i];
            if (pos && dot != hh && dot != hh + off) pos = false;
            if (neg && -dot != hh && -dot != hh + off) neg = false;
            if (!pos && !neg) return {false, false};
        }
        return {pos, neg};
    }
};

AdmTable make_adm_table(const SpanLattice& m) {
    AdmTable t;
    t.n = m.lattice.rank;
    const size_t count = m.zprime_m.size();
    t.rows.resize(count * t.n);
    t.h.resize(count);
    for (size_t i = 0; i < count; ++i) {
        for (int k = 0; k < t.n; ++k) {
            check(m.zprime_m[i][k].fits_slong_p() != 0, "certify: z' coordinate exceeds machine range");
            t.rows[i * t.n + k] = mpz_get_si(m.zprime_m[i][k].get_mpz_t());
        }
        Int hh = m.znorms[i] / 2;
        t.h[i] = hh.get_si();
    }
    t.order.resize(count);
    std::iota(t.order.begin(), t.order.end(), 0);

    // Machine-range certificate for the dots: |x_k| = |<v,b_k>| is at most
    // sqrt(6 * ||b_k||^2) by Cauchy-Schwarz, with ||v||^2 <= 6.
    IntMatrix g = m.lattice.scaled_gram();
    Int worst = 0;
    for (size_t i = 0; i < count; ++i) {
        Int bound = 0;
        for (int k = 0; k < t.n; ++k) {
            Int xb;
            Int six_norm = 6 * g.at(k, k);
            mpz_sqrt(xb.get_mpz_t(), six_norm.get_mpz_t());
            bound += abs(m.zprime_m[i][k]) * (xb + 1);
        }
        if (bound > worst) worst = bound;
    }
    check(mpz_sizeinbase(worst.get_mpz_t(), 2) <= 60, "certify: admissibility dots exceed machine range");
    return t;
}

struct WorkerState {
    long pairs = 0;
    long adm4 = 0;
    std::vector<IntVec> adm6;
    std::vector<long> xbuf;
};

}  // namespace

EnumerationCertificate certify_unique_extension(const SpanLattice& m, const PointSet277& ps, int workers) {
    check(workers >= 1, "certify_unique_extension: workers must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    GramLattice dual = dual_lattice(m.lattice);
    const int n = dual.rank;

    // One-time exact inverse check ties the dual pairing route to the
    // primal Gram: G_M * (d * G_M^{-1}) = d * I.
    {
        IntMatrix prod = m.lattice.scaled_gram().mul(dual.gram.numerators_scaled(dual.scale_denominator));
        check(prod == IntMatrix::identity(n).scaled(dual.scale_denominator), "certify: dual Gram is not the exact inverse");
    }

    Rat dual_min = lattice_minimum(dual);
    check(dual_min == make_rat(5, 2), "certify: Minimum(M*) = " + dual_min.get_str() + " != 5/2");

    EnumerationCertificate cert;
    cert.workers = workers;
    cert.expected = expected_extension_coords(m, ps);

    AdmTable adm4t = make_adm_table(m);
    AdmTable adm6t = adm4t;

    const Rat lo = make_rat(5, 2);
    const Rat hi(6);

    // Warmup: order z' rows by how often they kill a candidate, measured on
    // the first 10^4 candidates with full (no-abort) evaluation.
    {
        const long sample_target = 10000;
        std::vector<long> viol4(adm4t.h.size(), 0), viol6(adm4t.h.size(), 0);
        std::vector<long> x(n);
        long seen = 0;
        enumerate_short(
            dual, lo, hi,
            [&](const IntVec& v, const Rat&) {
                for (int k = 0; k < n; ++k) x[k] = mpz_get_si(v[k].get_mpz_t());
                for (size_t i = 0; i < adm4t.h.size(); ++i) {
                    const long* row = adm4t.rows.data() + i * n;
                    long dot = 0;
                    for (int k = 0; k < n; ++k) dot += row[k] * x[k];
                    const long hh = adm4t.h[i];
                    if ((dot != hh && dot != hh - 1) || (-dot != hh && -dot != hh - 1)) ++viol4[i];
                    if ((dot != hh && dot != hh + 1) || (-dot != hh && -dot != hh + 1)) ++viol6[i];
                }
                return ++seen < sample_target;
            },
            1);
        std::stable_sort(adm4t.order.begin(), adm4t.order.end(), [&](int a, int b) { return viol4[a] > viol4[b]; });
        std::stable_sort(adm6t.order.begin(), adm6t.order.end(), [&](int a, int b) { return viol6[a] > viol6[b]; });
    }

    const int nthreads = std::max(workers, 1);
    std::vector<WorkerState> states(nthreads);
    for (auto& st : states) st.xbuf.resize(n);

    EnumStats stats = enumerate_short(
        dual, lo, hi,
        [&](const IntVec& v, const Rat& nrm) {
#ifdef _OPENMP
            WorkerState& st = states[omp_get_thread_num() % nthreads];
#else
            WorkerState& st = states[0];
#endif
            ++st.pairs;
            long* x = st.xbuf.data();
            for (int k = 0; k < n; ++k) {
                check(v[k].fits_slong_p() != 0, "certify: candidate coordinate exceeds machine range");
                x[k] = mpz_get_si(v[k].get_mpz_t());
            }

            auto [p4, n4] = adm4t.test_pair(x, 4);
            st.adm4 += (p4 ? 1 : 0) + (n4 ? 1 : 0);
            auto [p6, n6] = adm6t.test_pair(x, 6);
            if (p6) st.adm6.push_back(v);
            if (n6) {
                IntVec neg(v);
                for (Int& c : neg) c = -c;
                st.adm6.push_back(std::move(neg));
            }

            // ~1% sample: re-assert the emitted norm window exactly.
            if ((st.pairs & 127) == 1) check(nrm >= lo && nrm <= hi, "certify: emitted norm outside window");
            return true;
        },
        workers);

    cert.nodes = stats.nodes;
    cert.bignum_path = stats.bignum_path;

    for (const auto& st : states) {
        cert.candidate_pairs += st.pairs;
        cert.adm4_survivors += st.adm4;
        for (const auto& v : st.adm6) cert.adm6_survivors.push_back(v);
    }
    std::sort(cert.adm6_survivors.begin(), cert.adm6_survivors.end());

    if (cert.candidate_pairs != kExpectedCandidatePairs)
        fail("CountMismatch: enumerated " + std::to_string(cert.candidate_pairs) + " pairs, expected " +
             std::to_string(kExpectedCandidatePairs));
    if (cert.adm4_survivors != 0) fail("UnexpectedSurvivor: adm4 admits " + std::to_string(cert.adm4_survivors));
    if (cert.adm6_survivors.empty()) fail("MissingExpectedSurvivor: adm6 admits no vector");
    if (cert.adm6_survivors.size() != 1)
        fail("UnexpectedSurvivor: adm6 admits " + std::to_string(cert.adm6_survivors.size()) + " vectors");
    if (cert.adm6_survivors[0] != cert.expected) fail("UnexpectedSurvivor: adm6 survivor is not r/2 - u");

    cert.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cert;
}

bool verify_w_extension(const PointSet277& ps) {
    const QSqrt3 c(make_rat(1, 2), make_rat(1, 2));  // (1 + sqrt3)/2
    const QSqrt3 c2 = c * c;
    Rat rnorm = norm2(ps.lattice, ps.root);
    check(rnorm == 2, "verify_w_extension: ||r||^2 != 2");

    for (int i = 0; i < ps.size(); ++i) {
        Rat zz = norm2(ps.lattice, ps.points[i]);
        Rat zr = inner(ps.lattice, ps.points[i], ps.root);
        // ||z - c r||^2 = ||z||^2 - 2c<z,r> + c^2 ||r||^2, exact in Q[sqrt3].
        QSqrt3 val = QSqrt3(zz) - (c + c) * QSqrt3(zr) + c2 * QSqrt3(rnorm);
        Rat expected = (i == 0) ? Rat(6) : Rat(4);
        if (!(val == QSqrt3(expected))) fail("IdentityFails: extension identity fails for " + ps.labels[i]);
    }
    return true;
}

}  // namespace twodist
