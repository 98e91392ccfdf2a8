#include "twodist/construction.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twodist/common.hpp"

namespace twodist {

GramLattice embed_points(const Graph276& g) {
    IntMatrix gram276 = adjacency_matrix(g).plus_scaled_identity(3);
    GramBasis basis;
    try {
        basis = lattice_basis_from_gram(gram276, /*reduce=*/true);
    } catch (const VerificationError& e) {
        fail(std::string("ConstructionFailed: ") + e.what());
    }
    if (basis.rank != 24) fail("ConstructionFailed: embedding rank " + std::to_string(basis.rank) + " != 24");

    std::vector<std::pair<std::string, IntVec>> points;
    points.reserve(Graph276::kN);
    for (int i = 0; i < Graph276::kN; ++i) {
        IntVec coords(24);
        for (int j = 0; j < 24; ++j) coords[j] = basis.coords.at(i, j);
        std::string label = i < Graph276::kNX ? "X" + std::to_string(i + 1) : "Y" + std::to_string(i - Graph276::kNX + 1);
        points.emplace_back(std::move(label), std::move(coords));
    }
    return make_gram_lattice(basis.basis_gram, std::move(points));
}

IntVec find_switching_root(const GramLattice& l) {
    auto roots = collect_short(l, Rat(2), Rat(2));
    if (roots.size() != 1)
        fail("RootNotFound: expected exactly 1 norm-2 vector pair, found " + std::to_string(roots.size()));
    IntVec r = roots[0].first;

    const IntVec* x1 = l.find_point("X1");
    check(x1 != nullptr, "find_switching_root: lattice has no named point X1");
    Rat s = inner(l, r, *x1);
    if (s == -1) {
        for (Int& v : r) v = -v;
    } else if (s != 1) {
        fail("RootNotFound: <r, X1> = " + s.get_str() + ", expected +-1");
    }
    for (const auto& [name, p] : l.named_points)
        if (inner(l, r, p) != 1) fail("RootNotFound: <r, " + name + "> != 1");

    // Closed formula r = x1 + x2 + x3 - (4/33) sum(X) + (1/81) sum(Y).
    std::vector<Rat> rhs(l.rank);
    const Rat cx = make_rat(4, 33), cy = make_rat(1, 81);
    for (const auto& [name, p] : l.named_points) {
        bool is_x = name[0] == 'X';
        for (int j = 0; j < l.rank; ++j) {
            Rat term(p[j]);
            if (is_x)
                rhs[j] -= cx * term;
            else
                rhs[j] += cy * term;
        }
    }
    for (int k = 1; k <= 3; ++k) {
        const IntVec* xk = l.find_point("X" + std::to_string(k));
        for (int j = 0; j < l.rank; ++j) rhs[j] += Rat((*xk)[j]);
    }
    for (int j = 0; j < l.rank; ++j)
        if (rhs[j] != Rat(r[j])) fail("find_switching_root: closed formula mismatch at coordinate " + std::to_string(j));

    return r;
}

IntVec build_u(const GramLattice& l, const IntVec& root, int part) {
    check(part >= 1 && part <= 11, "build_u: part index out of range");
    const IntVec* x[3];
    for (int a = 0; a < 3; ++a) {
        x[a] = l.find_point("X" + std::to_string(3 * (part - 1) + a + 1));
        check(x[a] != nullptr, "build_u: missing part point");
    }
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b)
            if (inner(l, *x[a], *x[b]) != 0) fail("PartNotOrthogonal: part " + std::to_string(part));

    IntVec u(l.rank);
    for (int j = 0; j < l.rank; ++j) u[j] = (*x[0])[j] + (*x[1])[j] + (*x[2])[j] - root[j];
    if (norm2(l, u) != 5) fail("build_u: ||u||^2 != 5");
    if (inner(l, root, u) != 1) fail("build_u: <r,u> != 1");
    return u;
}

PointSet277 assemble_point_set(const GramLattice& l, const IntVec& root) {
    IntVec u = build_u(l, root, 1);
    for (int part = 2; part <= 11; ++part)
        if (build_u(l, root, part) != u) fail("build_u: u differs for part " + std::to_string(part));

    PointSet277 ps;
    ps.lattice = l;
    ps.root = root;
    ps.labels.push_back("u");
    ps.points.push_back(u);
    for (const auto& [name, p] : l.named_points) {
        ps.labels.push_back(name);
        ps.points.push_back(p);
    }
    check(ps.size() == 277, "assemble_point_set: expected 277 points");
    for (int i = 0; i < ps.size(); ++i)
        if (inner(l, root, ps.points[i]) != 1)
            fail("assemble_point_set: point " + ps.labels[i] + " off the hyperplane <r,z> = 1");
    return ps;
}

DistanceReport verify_two_distance(const PointSet277& ps) {
    const int n = ps.size();
    const int r = ps.lattice.rank;
    check(ps.lattice.scale_denominator == 1, "verify_two_distance: integral lattice expected");
    IntMatrix b = ps.lattice.scaled_gram();

    IntMatrix p(n, r);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) p.at(i, j) = ps.points[i][j];
    IntMatrix g = p.mul(b).mul(p.transpose());  // all pairwise inner products

    long c4 = 0, c6 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Int d2 = g.at(i, i) + g.at(j, j) - 2 * g.at(i, j);
            if (d2 == 4)
                ++c4;
            else if (d2 == 6)
                ++c6;
            else
                fail("NotTwoDistance: pair (" + ps.labels[i] + "," + ps.labels[j] + ") has squared distance " +
                     d2.get_str());
        }

    // Distance law spot check against direct coordinate computation.
    for (int k = 0; k < 5; ++k) {
        int i = (k * 53) % n, j = (k * 131 + 7) % n;
        if (i == j) continue;
        IntVec diff(r);
        for (int c = 0; c < r; ++c) diff[c] = ps.points[i][c] - ps.points[j][c];
        Rat direct = norm2(ps.lattice, diff);
        Rat via_law(g.at(i, i) + g.at(j, j) - 2 * g.at(i, j));
        check(direct == via_law, "verify_two_distance: distance law spot check failed");
    }

    return {c4, c6};
}

bool verify_lemma_sum(int n, const IntMatrix& gram_check) {
    check(n >= 1, "verify_lemma_sum: n must be positive");
    check(gram_check.rows() == 2 * n && gram_check.cols() == 2 * n, "verify_lemma_sum: Gram must be 2n x 2n");
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            bool same_block = (i < n) == (j < n);
            Int expected = same_block ? (i == j ? Int(n) : Int(0)) : Int(1);
            if (gram_check.at(i, j) != expected) fail("verify_lemma_sum: Gram is not [[nI,J],[J,nI]]");
        }
    // ||sum a - sum b||^2 from the Gram matrix alone.
    Int val = 0;
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) {
            int si = i < n ? 1 : -1, sj = j < n ? 1 : -1;
            val += Int(si * sj) * gram_check.at(i, j);
        }
    return sgn(val) == 0;
}

IntMatrix part_pair_gram(const GramLattice& l, int part_a, int part_b) {
    check(part_a != part_b, "part_pair_gram: distinct parts required");
    std::vector<const IntVec*> pts;
    for (int part : {part_a, part_b})
        for (int a = 0; a < 3; ++a) pts.push_back(l.find_point("X" + std::to_string(3 * (part - 1) + a + 1)));
    IntMatrix g(6, 6);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rat v = inner(l, *pts[i], *pts[j]);
            check(v.get_den() == 1, "part_pair_gram: non-integral inner product");
            g.at(i, j) = v.get_num();
        }
    return g;
}

std::string pointset_to_text(const PointSet277& ps) {
    std::ostringstream os;
    os << ps.lattice.rank << ' ' << ps.lattice.scale_denominator.get_str() << '\n';
    IntMatrix g = ps.lattice.scaled_gram();
    for (int i = 0; i < ps.lattice.rank; ++i) {
        for (int j = 0; j < ps.lattice.rank; ++j) {
            if (j) os << ' ';
            os << g.at(i, j).get_str();
        }
        os << '\n';
    }
    os << ps.size() << '\n';
    for (int i = 0; i < ps.size(); ++i) {
        os << ps.labels[i];
        for (const Int& v : ps.points[i]) os << ' ' << v.get_str();
        os << '\n';
    }
    os << "root";
    for (const Int& v : ps.root) os << ' ' << v.get_str();
    os << '\n';
    return os.str();
}

PointSet277 pointset_from_text(const std::string& text) {
    std::istringstream is(text);
    int r = 0;
    std::string dstr;
    if (!(is >> r >> dstr) || r <= 0) fail("pointset_from_text: bad header");
    Int d;
    check(mpz_set_str(d.get_mpz_t(), dstr.c_str(), 10) == 0 && d == 1, "pointset_from_text: integral lattice expected");
    IntMatrix g(r, r);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!(is >> tok)) fail("pointset_from_text: truncated Gram");
            check(mpz_set_str(g.at(i, j).get_mpz_t(), tok.c_str(), 10) == 0, "pointset_from_text: bad entry");
        }
    int npoints = 0;
    if (!(is >> npoints) || npoints != 277) fail("pointset_from_text: expected 277 points");

    PointSet277 ps;
    std::vector<std::pair<std::string, IntVec>> named;
    for (int p = 0; p < npoints; ++p) {
        std::string name;
        if (!(is >> name)) fail("pointset_from_text: truncated points");
        IntVec v(r);
        for (int j = 0; j < r; ++j) {
            if (!(is >> tok)) fail("pointset_from_text: truncated point row");
            check(mpz_set_str(v[j].get_mpz_t(), tok.c_str(), 10) == 0, "pointset_from_text: bad coordinate");
        }
        if (name != "u") named.emplace_back(name, v);
        ps.labels.push_back(name);
        ps.points.push_back(std::move(v));
    }
    std::string rootword;
    if (!(is >> rootword) || rootword != "root") fail("pointset_from_text: missing root row");
    ps.root.resize(r);
    for (int j = 0; j < r; ++j) {
        if (!(is >> tok)) fail("pointset_from_text: truncated root row");
        check(mpz_set_str(ps.root[j].get_mpz_t(), tok.c_str(), 10) == 0, "pointset_from_text: bad root coordinate");
    }
    check(ps.labels.size() == 277 && ps.labels[0] == "u", "pointset_from_text: bad label order");
    ps.lattice = make_gram_lattice(g, std::move(named));
    return ps;
}

}  // namespace twodist
