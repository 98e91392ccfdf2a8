#include "twodist/exactla.hpp"

#include <algorithm>
#include <sstream>

#include "twodist/common.hpp"

namespace twodist {

namespace {

// (a*p - b*c) / prev with the exactness of the division asserted. t and rem
// are scratch registers owned by the caller (one pair per thread).
inline void bareiss_update(Int& out, const Int& a, const Int& p, const Int& b, const Int& c, const Int& prev,
                           Int& t, Int& rem) {
    mpz_mul(t.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    mpz_submul(t.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
    mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
    if (sgn(rem) != 0) fail("Bareiss: non-exact division");
}

// General fraction-free elimination with full pivoting, continuing from a
// given divisor chain value. Returns the number of further pivots.
int bareiss_rank_general(IntMatrix& m, int start, Int prev, bool parallel) {
    const int n = m.rows(), c = m.cols();
    int k = start;
    while (k < n && k < c) {
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = k; j < c; ++j)
                if (sgn(m.at(i, j)) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        m.swap_rows(k, pi);
        m.swap_cols(k, pj);
        const Int piv = m.at(k, k);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
        for (int i = k + 1; i < n; ++i) {
            Int t, rem;
            for (int j = k + 1; j < c; ++j) bareiss_update(m.at(i, j), m.at(i, j), piv, m.at(i, k), m.at(k, j), prev, t, rem);
            m.at(i, k) = 0;
        }
        prev = piv;
        ++k;
    }
    return k - start;
}

// Symmetric variant with diagonal pivoting: only the upper triangle is kept
// valid. Falls back to the general routine if the diagonal of the remaining
// block vanishes while off-diagonal entries survive.
int bareiss_rank_symmetric(IntMatrix m, bool parallel) {
    const int n = m.rows();
    Int prev = 1;
    int k = 0;
    while (k < n) {
        int pi = -1;
        for (int i = k; i < n; ++i)
            if (sgn(m.at(i, i)) != 0) {
                pi = i;
                break;
            }
        if (pi < 0) {
            bool rest_zero = true;
            for (int i = k; i < n && rest_zero; ++i)
                for (int j = i; j < n; ++j)
                    if (sgn(m.at(i, j)) != 0) {
                        rest_zero = false;
                        break;
                    }
            if (rest_zero) return k;
            // Rebuild the remaining block symmetrically and continue general.
            for (int i = k; i < n; ++i)
                for (int j = k; j < i; ++j) m.at(i, j) = m.at(j, i);
            return k + bareiss_rank_general(m, k, prev, parallel);
        }
        if (pi != k) {
            // Mirror the remaining block so a plain row/col swap keeps the
            // upper triangle valid.
            for (int i = k; i < n; ++i)
                for (int j = k; j < i; ++j) m.at(i, j) = m.at(j, i);
            m.swap_rows(k, pi);
            m.swap_cols(k, pi);
        }
        const Int piv = m.at(k, k);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
        for (int i = k + 1; i < n; ++i) {
            Int t, rem;
            const Int& rik = m.at(k, i);  // = m(i,k) by symmetry
            for (int j = i; j < n; ++j) bareiss_update(m.at(i, j), m.at(i, j), piv, rik, m.at(k, j), prev, t, rem);
        }
        prev = piv;
        ++k;
    }
    return k;
}

int rank_impl(const IntMatrix& m, bool parallel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.is_symmetric()) return bareiss_rank_symmetric(m, parallel);
    IntMatrix w = m;
    return bareiss_rank_general(w, 0, Int(1), parallel);
}

}  // namespace

int rank(const IntMatrix& m) { return rank_impl(m, true); }

int rank_serial(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMatrix w = m;
    return bareiss_rank_general(w, 0, Int(1), false);
}

Int det_bareiss(const IntMatrix& m) {
    check(m.rows() == m.cols(), "det: square matrix required");
    const int n = m.rows();
    if (n == 0) return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pi = -1;
        for (int i = k; i < n; ++i)
            if (sgn(w.at(i, k)) != 0) {
                pi = i;
                break;
            }
        if (pi < 0) return 0;
        if (pi != k) {
            w.swap_rows(k, pi);
            sign = -sign;
        }
        const Int piv = w.at(k, k);
        Int t, rem;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) bareiss_update(w.at(i, j), w.at(i, j), piv, w.at(i, k), w.at(k, j), prev, t, rem);
            w.at(i, k) = 0;
        }
        prev = piv;
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

IntMatrix hnf(const IntMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    IntMatrix w = m;
    int row = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < nc && row < nr; ++col) {
        int piv = -1;
        for (int i = row; i < nr; ++i)
            if (sgn(w.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        w.swap_rows(row, piv);
        // Clear below via unimodular two-row gcd transforms.
        for (int i = row + 1; i < nr; ++i) {
            if (sgn(w.at(i, col)) == 0) continue;
            Int a = w.at(row, col), b = w.at(i, col), g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int ag = a / g, bg = b / g;
            for (int j = col; j < nc; ++j) {
                Int top = u * w.at(row, j) + v * w.at(i, j);
                Int bot = ag * w.at(i, j) - bg * w.at(row, j);
                w.at(row, j) = top;
                w.at(i, j) = bot;
            }
        }
        if (sgn(w.at(row, col)) < 0)
            for (int j = col; j < nc; ++j) w.at(row, j) = -w.at(row, j);
        // Reduce the entries above the pivot into [0, pivot).
        const Int& p = w.at(row, col);
        for (int i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w.at(i, col).get_mpz_t(), p.get_mpz_t());
            if (sgn(q) == 0) continue;
            for (int j = col; j < nc; ++j) w.at(i, j) -= q * w.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    IntMatrix h(row, nc);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < nc; ++j) h.at(i, j) = w.at(i, j);
    return h;
}

bool hnf_reduces_row_to_zero(const IntMatrix& h, const IntVec& v) {
    check(static_cast<int>(v.size()) == h.cols(), "hnf membership: length mismatch");
    IntVec w = v;
    for (int i = 0; i < h.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < h.cols(); ++j)
            if (sgn(h.at(i, j)) != 0) {
                p = j;
                break;
            }
        if (p < 0) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[p].get_mpz_t(), h.at(i, p).get_mpz_t());
        if (sgn(rem) != 0) return false;
        if (sgn(q) != 0)
            for (int j = p; j < h.cols(); ++j) w[j] -= q * h.at(i, j);
    }
    for (const Int& x : w)
        if (sgn(x) != 0) return false;
    return true;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
    Int d = det_bareiss(u);
    check(d == 1 || d == -1, "unimodular_inverse: determinant is not +-1");
    RatMatrix inv = RatMatrix::from_int(u).inverse();
    check(inv.is_integral(), "unimodular_inverse: non-integer inverse");
    return inv.numerators_scaled(Int(1));
}

LLLGram lll_reduce_gram(const IntMatrix& g) {
    check(g.is_symmetric(), "lll: symmetric Gram required");
    const int n = g.rows();
    LLLGram out{IntMatrix::identity(n), g};
    if (n <= 1) {
        if (n == 1) check(sgn(g.at(0, 0)) > 0, "NotPositiveDefinite: lll pivot <= 0");
        return out;
    }
    IntMatrix& gm = out.gram;
    IntMatrix& u = out.transform;

    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
    std::vector<Rat> B(n);
    auto gso_row = [&](int i) {
        for (int j = 0; j < i; ++j) {
            Rat s(gm.at(i, j));
            for (int l = 0; l < j; ++l) s -= mu[i][l] * mu[j][l] * B[l];
            check(sgn(B[j]) > 0, "NotPositiveDefinite: lll GSO pivot <= 0");
            mu[i][j] = s / B[j];
        }
        Rat s(gm.at(i, i));
        for (int l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * B[l];
        check(sgn(s) > 0, "NotPositiveDefinite: lll GSO norm <= 0");
        B[i] = s;
    };
    for (int i = 0; i < n; ++i) gso_row(i);

    const Rat half = make_rat(1, 2);
    const Rat delta = make_rat(99, 100);

    // b_k -= q * b_j, applied to the transform, the Gram matrix and the GSO.
    auto reduce_pair = [&](int k, int j) {
        Rat q_rat = mu[k][j];
        if (abs(q_rat) <= half) return;
        Int q;
        // Nearest integer: floor(mu + 1/2).
        Rat shifted = q_rat + half;
        mpz_fdiv_q(q.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
        if (sgn(q) == 0) return;
        for (int c = 0; c < n; ++c) u.at(k, c) -= q * u.at(j, c);
        // Gram update: row/col k of <b_i, b_l>.
        Int qkk = q * q * gm.at(j, j) - 2 * q * gm.at(k, j);
        for (int c = 0; c < n; ++c) {
            if (c == k) continue;
            gm.at(k, c) -= q * gm.at(j, c);
            gm.at(c, k) = gm.at(k, c);
        }
        gm.at(k, k) += qkk;
        Rat qr(q);
        for (int l = 0; l < j; ++l) mu[k][l] -= qr * mu[j][l];
        mu[k][j] -= qr;
    };

    int k = 1;
    while (k < n) {
        reduce_pair(k, k - 1);
        if (B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
            for (int j = k - 2; j >= 0; --j) reduce_pair(k, j);
            ++k;
            continue;
        }
        // Swap b_{k-1} and b_k, then patch the GSO (standard update).
        u.swap_rows(k - 1, k);
        gm.swap_rows(k - 1, k);
        gm.swap_cols(k - 1, k);
        Rat mu_old = mu[k][k - 1];
        Rat Bp = B[k] + mu_old * mu_old * B[k - 1];
        check(sgn(Bp) > 0, "NotPositiveDefinite: lll swap norm <= 0");
        mu[k][k - 1] = mu_old * B[k - 1] / Bp;
        B[k] = B[k - 1] * B[k] / Bp;
        B[k - 1] = Bp;
        for (int j = 0; j < k - 1; ++j) std::swap(mu[k - 1][j], mu[k][j]);
        for (int i = k + 1; i < n; ++i) {
            Rat t = mu[i][k];
            mu[i][k] = mu[i][k - 1] - mu_old * t;
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
        }
        k = std::max(k - 1, 1);
    }
    return out;
}

FractionFreeLDL fraction_free_ldl(const IntMatrix& q) {
    check(q.is_symmetric(), "fraction_free_ldl: symmetric input required");
    const int n = q.rows();
    FractionFreeLDL out;
    out.delta.assign(n + 1, Int(1));
    out.rows = IntMatrix(n, n);
    IntMatrix m = q;
    Int prev = 1, t, rem;
    for (int k = 0; k < n; ++k) {
        const Int piv = m.at(k, k);
        if (sgn(piv) <= 0) fail("NotPositiveDefinite: pivot <= 0 at index " + std::to_string(k));
        out.delta[k + 1] = piv;
        for (int j = k; j < n; ++j) out.rows.at(k, j) = m.at(k, j);
        for (int i = k + 1; i < n; ++i) {
            const Int& rik = m.at(k, i);
            for (int j = i; j < n; ++j) bareiss_update(m.at(i, j), m.at(i, j), piv, rik, m.at(k, j), prev, t, rem);
        }
        prev = piv;
    }
    return out;
}

namespace {

void check_annihilated(const IntMatrix& z, const std::string& name) {
    if (!z.is_zero()) fail("AnnihilationFails: " + name);
}

}  // namespace

SpectrumCertificate certify_spectrum_gamma(const IntMatrix& a) {
    const int n = a.rows();
    check(n == 276 && a.cols() == 276, "certify_spectrum_gamma: 276x276 input required");
    check(a.is_symmetric(), "certify_spectrum_gamma: symmetric input required");
    for (int i = 0; i < n; ++i) {
        check(sgn(a.at(i, i)) == 0, "certify_spectrum_gamma: nonzero diagonal");
        for (int j = 0; j < n; ++j)
            if (i != j) check(a.at(i, j) == 0 || a.at(i, j) == 1, "certify_spectrum_gamma: entries not 0/1");
    }

    // p(x) = (x-27)(x+3)(x^2-162x+396) = (x^2-24x-81)(x^2-162x+396)
    IntMatrix a2 = a.mul(a);
    IntMatrix p1 = (a2 - a.scaled(24)).plus_scaled_identity(-81);
    IntMatrix p2 = (a2 - a.scaled(162)).plus_scaled_identity(396);
    check_annihilated(p1.mul(p2), "(A-27I)(A+3I)(A^2-162A+396I) != 0");

    int r27 = rank(a.plus_scaled_identity(-27));
    int r3 = rank(a.plus_scaled_identity(3));
    int m27 = n - r27;
    int m3 = n - r3;
    if (m27 + m3 + 2 != n) fail("MultiplicityMismatch: gamma multiplicities " + std::to_string(m27) + "+" + std::to_string(m3) + "+2 != 276");
    Int tr = a.trace();
    if (Int(27) * m27 - Int(3) * m3 + 162 != tr) fail("MultiplicityMismatch: gamma trace inconsistency");

    SpectrumCertificate c;
    c.matrix_name = "gamma_adjacency";
    c.dimension = n;
    c.integer_eigenvalues = {{27, m27}, {-3, m3}};
    c.has_quadratic_pair = true;
    c.quad_trace = 162;
    c.quad_det = 396;
    c.quad_disc = 162L * 162L - 4L * 396L;  // 24660 = 4 * 6165
    c.quad_multiplicity_each = 1;
    c.annihilator = "(x-27)(x+3)(x^2-162x+396)";
    c.ranks = {{"rank(A-27I)", r27}, {"rank(A+3I)", r3}};
    return c;
}

SpectrumCertificate certify_spectrum_seidel(const IntMatrix& s) {
    const int n = s.rows();
    check(n == 276 && s.cols() == 276, "certify_spectrum_seidel: 276x276 input required");
    check(s.is_symmetric(), "certify_spectrum_seidel: symmetric input required");
    for (int i = 0; i < n; ++i) {
        check(sgn(s.at(i, i)) == 0, "certify_spectrum_seidel: nonzero diagonal");
        for (int j = 0; j < n; ++j)
            if (i != j) check(s.at(i, j) == 1 || s.at(i, j) == -1, "certify_spectrum_seidel: entries not +-1");
    }

    IntMatrix s2 = s.mul(s);
    check_annihilated((s2 - s.scaled(50)).plus_scaled_identity(-275), "(S-55I)(S+5I) != 0");

    int r55 = rank(s.plus_scaled_identity(-55));
    int r5 = rank(s.plus_scaled_identity(5));
    int m55 = n - r55;
    int m5 = n - r5;
    if (m55 + m5 != n) fail("MultiplicityMismatch: seidel multiplicities");
    if (Int(55) * m55 - Int(5) * m5 != s.trace()) fail("MultiplicityMismatch: seidel trace inconsistency");

    SpectrumCertificate c;
    c.matrix_name = "seidel";
    c.dimension = n;
    c.integer_eigenvalues = {{55, m55}, {-5, m5}};
    c.annihilator = "(x-55)(x+5)";
    c.ranks = {{"rank(S-55I)", r55}, {"rank(S+5I)", r5}};
    return c;
}

GramBasis lattice_basis_from_gram(const IntMatrix& g, bool reduce) {
    check(g.is_symmetric(), "lattice_basis_from_gram: symmetric input required");
    const int n = g.rows();

    // Greedy selection of generators that are linearly independent, by
    // symmetric fraction-free elimination with diagonal pivoting. The pivot
    // order gives the frame; nonpositive pivots or a nonzero remainder with
    // an all-zero diagonal mean the input is not PSD.
    IntMatrix m = g;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> frame;
    Int prev = 1, t, rem;
    int k = 0;
    while (k < n) {
        int pi = -1;
        for (int i = k; i < n; ++i) {
            if (sgn(m.at(i, i)) < 0) fail("NotPSD: negative diagonal minor");
            if (sgn(m.at(i, i)) > 0) {
                pi = i;
                break;
            }
        }
        if (pi < 0) {
            for (int i = k; i < n; ++i)
                for (int j = i; j < n; ++j)
                    if (sgn(m.at(i, j)) != 0) fail("NotPSD: zero diagonal with nonzero remainder");
            break;
        }
        if (pi != k) {
            for (int i = k; i < n; ++i)
                for (int j = k; j < i; ++j) m.at(i, j) = m.at(j, i);
            m.swap_rows(k, pi);
            m.swap_cols(k, pi);
            std::swap(order[k], order[pi]);
        }
        const Int piv = m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Int& rik = m.at(k, i);
            for (int j = i; j < n; ++j) bareiss_update(m.at(i, j), m.at(i, j), piv, rik, m.at(k, j), prev, t, rem);
        }
        frame.push_back(order[k]);
        prev = piv;
        ++k;
    }
    const int r = static_cast<int>(frame.size());
    check(r > 0, "lattice_basis_from_gram: zero Gram matrix");

    // Rational coordinates of every generator in the frame: solve
    // g[frame,frame] * x_j = g[frame, j].
    RatMatrix gff(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gff.at(i, j) = Rat(g.at(frame[i], frame[j]));
    RatMatrix gff_inv = gff.inverse();
    RatMatrix rhs(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) rhs.at(i, j) = Rat(g.at(frame[i], j));
    RatMatrix sol = gff_inv.mul(rhs);  // column j = coords of generator j

    Int d = sol.lcm_denominator();
    IntMatrix w(n, r);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < r; ++i) {
            Rat v = sol.at(i, j) * Rat(d);
            w.at(j, i) = v.get_num();
        }

    IntMatrix h = hnf(w);
    check(h.rows() == r, "lattice_basis_from_gram: HNF rank mismatch");

    // Basis Gram: (1/d^2) * H * g[frame,frame] * H^T, integral because the
    // basis vectors lie in the integral lattice spanned by the generators.
    IntMatrix gff_int(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) gff_int.at(i, j) = g.at(frame[i], frame[j]);
    IntMatrix basis_gram_scaled = h.mul(gff_int).mul(h.transpose());
    Int d2 = d * d;
    IntMatrix basis_gram(r, r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Int q, rr;
            mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), basis_gram_scaled.at(i, j).get_mpz_t(), d2.get_mpz_t());
            check(sgn(rr) == 0, "lattice_basis_from_gram: basis Gram not integral");
            basis_gram.at(i, j) = q;
        }

    IntMatrix basis_rows = h;  // rows: d * (basis vector in frame coordinates)
    if (reduce) {
        LLLGram red = lll_reduce_gram(basis_gram);
        basis_gram = red.gram;
        basis_rows = red.transform.mul(h);
    }

    // Coordinates of every generator in the final basis: c_j * basis_rows =
    // d * x_j, solved through the exact inverse, then checked integral.
    RatMatrix br_inv = RatMatrix::from_int(basis_rows).inverse();
    IntMatrix coords(n, r);
    for (int j = 0; j < n; ++j) {
        for (int c = 0; c < r; ++c) {
            Rat acc;
            for (int i = 0; i < r; ++i) acc += Rat(w.at(j, i)) * br_inv.at(i, c);
            check(acc.get_den() == 1, "lattice_basis_from_gram: non-integer coordinate");
            coords.at(j, c) = acc.get_num();
        }
    }

    // Postcondition, checked exactly on every call.
    IntMatrix reproduced = coords.mul(basis_gram).mul(coords.transpose());
    check(reproduced == g, "lattice_basis_from_gram: coords * B * coords^T != g");

    GramBasis out;
    out.rank = r;
    out.basis_gram = basis_gram;
    out.coords = coords;
    return out;
}

}  // namespace twodist
