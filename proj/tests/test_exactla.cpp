#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twodist/common.hpp"
#include "twodist/exactla.hpp"

using namespace twodist;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c, int span) {
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
    return m;
}

IntMatrix random_pd_gram(std::mt19937_64& rng, int n, int span) {
    while (true) {
        IntMatrix r = random_matrix(rng, n, n, span);
        if (det_bareiss(r) != 0) return r.mul(r.transpose());
    }
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(IntMatrix(3, 3)) == 0);
    CHECK(rank(IntMatrix::identity(7)) == 7);
    IntMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    CHECK(rank(m) == 1);
    CHECK(rank_serial(m) == 1);
}

TEST_CASE("rank: optimized kernel agrees with the serial reference") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        IntMatrix m = random_matrix(rng, n, n + static_cast<int>(rng() % 3), 4);
        if (trial % 2 == 0) m = m.mul(m.transpose());  // symmetric path
        CHECK(rank(m) == rank_serial(m));
    }
}

TEST_CASE("rank of products is bounded by the inner dimension") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4), r = 1 + static_cast<int>(rng() % 3);
        IntMatrix a = random_matrix(rng, n, r, 3), b = random_matrix(rng, r, n, 3);
        CHECK(rank(a.mul(b)) <= r);
    }
}

TEST_CASE("det_bareiss") {
    CHECK(det_bareiss(IntMatrix::identity(5)) == 1);
    IntMatrix m(2, 2);
    m.at(0, 0) = 3;
    m.at(0, 1) = 7;
    m.at(1, 0) = 1;
    m.at(1, 1) = 4;
    CHECK(det_bareiss(m) == 5);
    m.swap_rows(0, 1);
    CHECK(det_bareiss(m) == -5);
}

TEST_CASE("matrix multiplication parallel/serial equality") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a = random_matrix(rng, 17, 23, 50), b = random_matrix(rng, 23, 9, 50);
        CHECK(a.mul(b) == a.mul_serial(b));
    }
}

TEST_CASE("hnf hand-checked cases") {
    CHECK(hnf(IntMatrix::identity(4)) == IntMatrix::identity(4));
    IntMatrix m(3, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 2;
    m.at(2, 0) = 1;
    m.at(2, 1) = 1;
    IntMatrix h = hnf(m);
    REQUIRE(h.rows() == 2);
    CHECK(h.at(0, 0) == 1);
    CHECK(h.at(0, 1) == 1);
    CHECK(h.at(1, 0) == 0);
    CHECK(h.at(1, 1) == 2);
}

TEST_CASE("hnf shape and span preservation on random matrices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m = random_matrix(rng, 5, 5, 9);
        if (trial % 3 == 0) {  // inject dependent rows
            for (int j = 0; j < 5; ++j) m.at(4, j) = m.at(0, j) * 2 - m.at(1, j);
        }
        IntMatrix h = hnf(m);

        // Echelon shape: positive pivots strictly moving right, entries above
        // each pivot reduced into [0, pivot).
        int prev_col = -1;
        for (int i = 0; i < h.rows(); ++i) {
            int p = -1;
            for (int j = 0; j < h.cols(); ++j)
                if (sgn(h.at(i, j)) != 0) {
                    p = j;
                    break;
                }
            REQUIRE(p > prev_col);
            CHECK(sgn(h.at(i, p)) > 0);
            for (int k = 0; k < i; ++k) {
                CHECK(h.at(k, p) >= 0);
                CHECK(h.at(k, p) < h.at(i, p));
            }
            prev_col = p;
        }

        // Row span membership in both directions.
        for (int i = 0; i < m.rows(); ++i) {
            IntVec row(m.cols());
            for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
            CHECK(hnf_reduces_row_to_zero(h, row));
        }
        IntMatrix stacked(m.rows() + h.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) stacked.at(i, j) = m.at(i, j);
        for (int i = 0; i < h.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) stacked.at(m.rows() + i, j) = h.at(i, j);
        CHECK(hnf(stacked) == h);  // HNF is canonical for the span

        CHECK(hnf(h) == h);
        CHECK(h.rows() == rank(m));
    }
}

TEST_CASE("unimodular_inverse") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        // Random unimodular matrix from elementary row operations.
        int n = 3 + static_cast<int>(rng() % 3);
        IntMatrix u = IntMatrix::identity(n);
        for (int step = 0; step < 12; ++step) {
            int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
            if (i == j) continue;
            long c = static_cast<long>(rng() % 5) - 2;
            for (int k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
        }
        IntMatrix inv = unimodular_inverse(u);
        CHECK(u.mul(inv) == IntMatrix::identity(n));
    }
    IntMatrix two = IntMatrix::identity(2).scaled(2);
    CHECK_THROWS_AS(unimodular_inverse(two), VerificationError);
}

TEST_CASE("lll_reduce_gram") {
    std::mt19937_64 rng(41);
    const Rat half = make_rat(1, 2);
    const Rat delta = make_rat(99, 100);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        IntMatrix g = random_pd_gram(rng, n, 6);
        LLLGram red = lll_reduce_gram(g);

        Int du = det_bareiss(red.transform);
        CHECK((du == 1 || du == -1));
        CHECK(red.transform.mul(g).mul(red.transform.transpose()) == red.gram);

        // Recompute the GSO and verify size reduction and Lovasz.
        RatMatrix gr = RatMatrix::from_int(red.gram);
        std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n));
        std::vector<Rat> B(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                Rat s = gr.at(i, j);
                for (int l = 0; l < j; ++l) s -= mu[i][l] * mu[j][l] * B[l];
                mu[i][j] = s / B[j];
            }
            Rat s = gr.at(i, i);
            for (int l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * B[l];
            B[i] = s;
            REQUIRE(sgn(B[i]) > 0);
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) CHECK(abs(mu[i][j]) <= half);
        for (int k = 1; k < n; ++k) CHECK(B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]);
    }
    IntMatrix bad(2, 2);
    bad.at(0, 1) = 1;
    bad.at(1, 0) = 1;
    CHECK_THROWS_WITH_AS(lll_reduce_gram(bad), doctest::Contains("NotPositiveDefinite"), VerificationError);
}

TEST_CASE("fraction_free_ldl decomposes the quadratic form") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        IntMatrix q = random_pd_gram(rng, n, 5);
        FractionFreeLDL ff = fraction_free_ldl(q);
        CHECK(ff.delta[0] == 1);
        for (int i = 1; i <= n; ++i) CHECK(sgn(ff.delta[i]) > 0);

        IntVec x(n);
        for (int j = 0; j < n; ++j) x[j] = static_cast<long>(rng() % 9) - 4;
        Rat direct;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) direct += Rat(q.at(i, j)) * Rat(x[i]) * Rat(x[j]);
        Rat sum;
        for (int i = 0; i < n; ++i) {
            Int dot = 0;
            for (int j = i; j < n; ++j) dot += ff.rows.at(i, j) * x[j];
            sum += Rat(dot * dot) / Rat(ff.delta[i] * ff.delta[i + 1]);
        }
        CHECK(sum == direct);
    }
    IntMatrix bad(1, 1);
    bad.at(0, 0) = -2;
    CHECK_THROWS_WITH_AS(fraction_free_ldl(bad), doctest::Contains("NotPositiveDefinite"), VerificationError);
}

TEST_CASE("lattice_basis_from_gram hand-checked cases") {
    SUBCASE("2I is its own basis") {
        IntMatrix g = IntMatrix::identity(3).scaled(2);
        GramBasis b = lattice_basis_from_gram(g);
        CHECK(b.rank == 3);
        CHECK(b.basis_gram == g);
        CHECK(b.coords == IntMatrix::identity(3));
    }
    SUBCASE("duplicated generator has rank 1") {
        IntMatrix g(2, 2);
        g.at(0, 0) = 2;
        g.at(0, 1) = 2;
        g.at(1, 0) = 2;
        g.at(1, 1) = 2;
        GramBasis b = lattice_basis_from_gram(g);
        CHECK(b.rank == 1);
        CHECK(b.basis_gram.at(0, 0) == 2);
        CHECK(b.coords.at(0, 0) == 1);
        CHECK(b.coords.at(1, 0) == 1);
    }
}

TEST_CASE("lattice_basis_from_gram on random degenerate Grams") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4), r = 1 + static_cast<int>(rng() % 3);
        IntMatrix v = random_matrix(rng, n, r, 3);
        IntMatrix g = v.mul(v.transpose());  // PSD of rank <= r
        int expected_rank = rank(g);
        GramBasis b = lattice_basis_from_gram(g);  // postcondition checked inside
        CHECK(b.rank == expected_rank);
        CHECK(b.coords.mul(b.basis_gram).mul(b.coords.transpose()) == g);
    }
}

TEST_CASE("lattice_basis_from_gram rejects non-PSD input") {
    IntMatrix neg(1, 1);
    neg.at(0, 0) = -1;
    CHECK_THROWS_WITH_AS(lattice_basis_from_gram(neg), doctest::Contains("NotPSD"), VerificationError);
    IntMatrix indef(2, 2);
    indef.at(0, 1) = 1;
    indef.at(1, 0) = 1;
    CHECK_THROWS_WITH_AS(lattice_basis_from_gram(indef), doctest::Contains("NotPSD"), VerificationError);
}

TEST_CASE("spectrum certificates reject wrong matrices") {
    CHECK_THROWS_AS(certify_spectrum_gamma(IntMatrix::identity(10)), VerificationError);
    IntMatrix zero(276, 276);
    CHECK_THROWS_WITH_AS(certify_spectrum_gamma(zero), doctest::Contains("AnnihilationFails"), VerificationError);
    IntMatrix s(276, 276);
    for (int i = 0; i < 276; ++i)
        for (int j = 0; j < 276; ++j)
            if (i != j) s.at(i, j) = 1;
    // J - I has spectrum {275, -1}, not {55, -5}.
    CHECK_THROWS_WITH_AS(certify_spectrum_seidel(s), doctest::Contains("AnnihilationFails"), VerificationError);
}

TEST_CASE("matrix text format round trip") {
    std::mt19937_64 rng(53);
    IntMatrix m = random_matrix(rng, 4, 6, 1000);
    CHECK(IntMatrix::from_text(m.to_text()) == m);
    RatMatrix q(2, 3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) q.at(i, j) = make_rat(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 7));
    CHECK(RatMatrix::from_text(q.to_text()) == q);
    CHECK_THROWS_AS(IntMatrix::from_text("2 2\n1 2 3"), VerificationError);
}
