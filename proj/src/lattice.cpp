#include "twodist/lattice.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "twodist/common.hpp"

namespace twodist {

IntMatrix GramLattice::scaled_gram() const { return gram.numerators_scaled(scale_denominator); }

const IntVec* GramLattice::find_point(const std::string& label) const {
    for (const auto& [name, coords] : named_points)
        if (name == label) return &coords;
    return nullptr;
}

GramLattice make_gram_lattice(RatMatrix gram, std::vector<std::pair<std::string, IntVec>> points) {
    check(gram.rows() > 0 && gram.rows() == gram.cols(), "make_gram_lattice: square nonempty Gram required");
    check(gram.is_symmetric(), "make_gram_lattice: symmetric Gram required");
    GramLattice l;
    l.rank = gram.rows();
    l.scale_denominator = gram.lcm_denominator();
    l.gram = std::move(gram);
    fraction_free_ldl(l.gram.numerators_scaled(l.scale_denominator));  // PD iff all pivots positive
    for (const auto& [name, coords] : points)
        check(static_cast<int>(coords.size()) == l.rank, "make_gram_lattice: point '" + name + "' has wrong length");
    l.named_points = std::move(points);
    return l;
}

GramLattice make_gram_lattice(const IntMatrix& gram, std::vector<std::pair<std::string, IntVec>> points) {
    return make_gram_lattice(RatMatrix::from_int(gram), std::move(points));
}

Rat inner(const GramLattice& l, const IntVec& a, const IntVec& b) {
    check(static_cast<int>(a.size()) == l.rank && static_cast<int>(b.size()) == l.rank,
          "inner: coordinate length != rank");
    Rat acc;
    for (int i = 0; i < l.rank; ++i) {
        if (sgn(a[i]) == 0) continue;
        Rat row;
        for (int j = 0; j < l.rank; ++j)
            if (sgn(b[j]) != 0) row += l.gram.at(i, j) * Rat(b[j]);
        acc += Rat(a[i]) * row;
    }
    return acc;
}

Rat norm2(const GramLattice& l, const IntVec& a) { return inner(l, a, a); }

GramLattice dual_lattice(const GramLattice& l) {
    RatMatrix inv = l.gram.inverse();
    std::vector<std::pair<std::string, IntVec>> points;
    if (l.scale_denominator == 1) {
        IntMatrix g = l.scaled_gram();
        for (const auto& [name, coords] : l.named_points) points.emplace_back(name, IntMatrix::vec_mul(coords, g));
    }
    return make_gram_lattice(std::move(inv), std::move(points));
}

std::string lattice_to_text(const GramLattice& l) {
    std::ostringstream os;
    os << l.rank << ' ' << l.scale_denominator.get_str() << '\n';
    IntMatrix g = l.scaled_gram();
    for (int i = 0; i < l.rank; ++i) {
        for (int j = 0; j < l.rank; ++j) {
            if (j) os << ' ';
            os << g.at(i, j).get_str();
        }
        os << '\n';
    }
    os << l.named_points.size() << '\n';
    for (const auto& [name, coords] : l.named_points) {
        os << name;
        for (const Int& v : coords) os << ' ' << v.get_str();
        os << '\n';
    }
    return os.str();
}

GramLattice lattice_from_text(const std::string& text) {
    std::istringstream is(text);
    int r = 0;
    std::string dstr;
    if (!(is >> r >> dstr) || r <= 0) fail("lattice_from_text: bad header");
    Int d;
    check(mpz_set_str(d.get_mpz_t(), dstr.c_str(), 10) == 0 && sgn(d) > 0, "lattice_from_text: bad denominator");
    IntMatrix g(r, r);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (!(is >> tok)) fail("lattice_from_text: truncated Gram");
            check(mpz_set_str(g.at(i, j).get_mpz_t(), tok.c_str(), 10) == 0, "lattice_from_text: bad entry");
        }
    size_t npoints = 0;
    if (!(is >> npoints)) fail("lattice_from_text: missing point count");
    std::vector<std::pair<std::string, IntVec>> points;
    points.reserve(npoints);
    for (size_t p = 0; p < npoints; ++p) {
        std::string name;
        if (!(is >> name)) fail("lattice_from_text: truncated points");
        IntVec v(r);
        for (int j = 0; j < r; ++j) {
            if (!(is >> tok)) fail("lattice_from_text: truncated point row");
            check(mpz_set_str(v[j].get_mpz_t(), tok.c_str(), 10) == 0, "lattice_from_text: bad coordinate");
        }
        points.emplace_back(std::move(name), std::move(v));
    }
    return make_gram_lattice(RatMatrix::from_int(g, d), std::move(points));
}

// ---------------------------------------------------------------------------
// Short-vector enumeration.
//
// The tree search runs on the fraction-free LDL^T data of the LLL-reduced
// scaled Gram matrix Q (= d * gram, conjugated by the unimodular U). With
// delta[] the leading minors and R the pivot rows, the suffix value
//   S_i = sum_{a,b >= i} M^(i)[a][b] x_a x_b   (M^(i) = Bareiss block)
// equals delta[i] times the minimal completion of the quadratic form, so the
// exact prune is S_i <= floor(hi * d * delta[i]), and S_0 = x^T Q x is the
// exact scaled norm at a leaf. The recurrences used below:
//   B_i = sum_{b>i} R[i][b] x_b
//   C_i = (delta[i] * S_{i+1} + B_i^2) / delta[i+1]        (exact division)
//   S_i = delta[i+1] x_i^2 + 2 B_i x_i + C_i.
// All quantities are integers; the engine runs on __int128 once an a-priori
// magnitude certificate (computed in exact arithmetic) fits, and on mpz
// otherwise.
// ---------------------------------------------------------------------------

namespace {

struct ArithI128 {
    using V = i128;
    static V from_mpz(const Int& z) {
        V v;
        check(mpz_to_i128(z, v), "enumerate: value exceeds fast-path range");
        return v;
    }
    static Int to_mpz(const V& v) { return i128_to_mpz(v); }
    static V isqrt(const V& v) { return isqrt_i128(v); }
    static V fdiv(const V& a, const V& b) { return floordiv_i128(a, b); }
    static V cdiv(const V& a, const V& b) { return ceildiv_i128(a, b); }
    static void divexact(V& out, V num, V den, const char* what) {
        if (num % den != 0) fail(what);
        out = num / den;
    }
    static void set_coord(Int& out, const V& v) {
        if (v >= -0x3fffffffffffffffLL && v <= 0x3fffffffffffffffLL)
            out = static_cast<long>(v);
        else
            out = i128_to_mpz(v);
    }
};

struct ArithMpz {
    using V = Int;
    static V from_mpz(const Int& z) { return z; }
    static Int to_mpz(const V& v) { return v; }
    static V isqrt(const V& v) {
        V r;
        mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
        return r;
    }
    static V fdiv(const V& a, const V& b) {
        V r;
        mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static V cdiv(const V& a, const V& b) {
        V r;
        mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static void divexact(V& out, const V& num, const V& den, const char* what) {
        V rem;
        mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (sgn(rem) != 0) fail(what);
    }
    static void set_coord(Int& out, const V& v) { out = v; }
};

struct EnumSetup {
    int n = 0;
    Int d;
    IntMatrix u;   // reduced basis rows in the original basis
    IntMatrix qi;  // scaled Gram in the original basis
    FractionFreeLDL ff;
    std::vector<Int> hb;  // prune thresholds per level
    Int lo_scaled;
    Int hi_scaled;
    std::vector<Int> xbound;  // per-coordinate box bound in the reduced frame
    bool fast_ok = false;
};

EnumSetup prepare(const GramLattice& l, const Rat& lo, const Rat& hi) {
    check(sgn(lo) > 0, "enumerate_short: lower bound must be positive");
    check(lo <= hi, "enumerate_short: lower bound exceeds upper bound");

    EnumSetup s;
    s.n = l.rank;
    s.d = l.scale_denominator;
    s.qi = l.scaled_gram();
    LLLGram red = lll_reduce_gram(s.qi);
    s.u = std::move(red.transform);
    s.ff = fraction_free_ldl(red.gram);

    Rat hid = hi * Rat(s.d);
    Rat lod = lo * Rat(s.d);
    mpz_fdiv_q(s.hi_scaled.get_mpz_t(), hid.get_num().get_mpz_t(), hid.get_den().get_mpz_t());
    mpz_cdiv_q(s.lo_scaled.get_mpz_t(), lod.get_num().get_mpz_t(), lod.get_den().get_mpz_t());

    s.hb.resize(s.n);
    for (int i = 0; i < s.n; ++i) {
        Rat b = hid * Rat(s.ff.delta[i]);
        mpz_fdiv_q(s.hb[i].get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
    }

    // Box bounds |x_j| <= sqrt(hi * d * (Qr^{-1})_jj) in the reduced frame.
    RatMatrix qr_inv = RatMatrix::from_int(red.gram).inverse();
    s.xbound.resize(s.n);
    for (int j = 0; j < s.n; ++j) {
        Rat b = hid * qr_inv.at(j, j);
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), b.get_num().get_mpz_t(), b.get_den().get_mpz_t());
        if (sgn(fl) < 0) fl = 0;
        Int r;
        mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
        s.xbound[j] = r + 1;
    }

    // A-priori magnitude certificate for the __int128 fast path.
    Int maxv = 1;
    auto bump = [&maxv](const Int& v) {
        Int a = abs(v);
        if (a > maxv) maxv = a;
    };
    for (int i = 0; i <= s.n; ++i) bump(s.ff.delta[i]);
    for (int i = 0; i < s.n; ++i) bump(s.hb[i]);
    bump(s.lo_scaled);
    bump(s.hi_scaled);
    std::vector<Int> bbound(s.n);  // bound on |B_i| and on any sig entry of row i
    for (int i = 0; i < s.n; ++i) {
        Int b = 0;
        for (int j = i + 1; j < s.n; ++j) b += abs(s.ff.rows.at(i, j)) * s.xbound[j];
        bbound[i] = b;
        bump(b);
        for (int j = i; j < s.n; ++j) bump(s.ff.rows.at(i, j));
    }
    for (int i = 0; i < s.n; ++i) {
        Int snext = (i + 1 < s.n) ? s.hb[i + 1] : Int(0);
        Int cb = (s.ff.delta[i] * snext + bbound[i] * bbound[i]) / s.ff.delta[i + 1] + 1;
        bump(cb);
        Int disc = bbound[i] * bbound[i] + s.ff.delta[i + 1] * (s.hb[i] + cb);
        bump(disc);
        Int sterm = s.ff.delta[i + 1] * s.xbound[i] * s.xbound[i] + 2 * bbound[i] * s.xbound[i] + cb;
        bump(sterm);
    }
    std::vector<Int> obound(s.n);
    for (int j = 0; j < s.n; ++j) {
        Int b = 0;
        for (int i = 0; i < s.n; ++i) b += abs(s.u.at(i, j)) * s.xbound[i];
        obound[j] = b;
        bump(b);
    }
    Int reverify = 0;
    for (int a = 0; a < s.n; ++a)
        for (int b = 0; b < s.n; ++b) reverify += abs(s.qi.at(a, b)) * obound[a] * obound[b];
    bump(reverify);

    s.fast_ok = mpz_sizeinbase(maxv.get_mpz_t(), 2) <= 120;
    return s;
}

// Constant tables shared by all tasks of one enumeration.
template <class A>
struct Tables {
    using V = typename A::V;
    int n = 0;
    std::vector<V> rrow;   // n*n, pivot rows (j >= i)
    std::vector<V> delta;  // n+1
    std::vector<V> hb;
    V lo_scaled{};
    std::vector<V> u;   // n*n
    std::vector<V> qi;  // n*n
    Int d;

    explicit Tables(const EnumSetup& s) : n(s.n), d(s.d) {
        rrow.resize(static_cast<size_t>(n) * n);
        u.resize(static_cast<size_t>(n) * n);
        qi.resize(static_cast<size_t>(n) * n);
        delta.resize(n + 1);
        hb.resize(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                rrow[static_cast<size_t>(i) * n + j] = (j >= i) ? A::from_mpz(s.ff.rows.at(i, j)) : V{};
                u[static_cast<size_t>(i) * n + j] = A::from_mpz(s.u.at(i, j));
                qi[static_cast<size_t>(i) * n + j] = A::from_mpz(s.qi.at(i, j));
            }
        for (int i = 0; i <= n; ++i) delta[i] = A::from_mpz(s.ff.delta[i]);
        for (int i = 0; i < n; ++i) hb[i] = A::from_mpz(s.hb[i]);
        lo_scaled = A::from_mpz(s.lo_scaled);
    }
};

struct Task {
    std::vector<Int> suffix;  // chosen values x_{n-1}, x_{n-2}, ...
    Int svalue;               // S after the suffix
    bool all_zero = true;
};

template <class A>
struct Engine {
    using V = typename A::V;
    const Tables<A>& t;
    std::vector<V> hb;  // copy: lattice_minimum shrinks it
    std::vector<V> sig;  // (n+1) * n, [level*n + row]
    std::vector<V> xs;
    std::vector<V> orig;
    IntVec emit_buf;
    const ShortVectorSink* sink = nullptr;
    uint64_t nodes = 0, emitted = 0;

    bool minimum_mode = false;
    V best{};

    explicit Engine(const Tables<A>& tables)
        : t(tables),
          hb(tables.hb),
          sig(static_cast<size_t>(tables.n + 1) * tables.n),
          xs(tables.n),
          orig(tables.n),
          emit_buf(tables.n) {}

    void shrink_bounds(V new_best) {
        best = new_best;
        for (int i = 0; i < t.n; ++i) hb[i] = best * t.delta[i];
    }

    bool emit_leaf(V s0) {
        if (minimum_mode) {
            if (s0 > 0 && s0 < best) shrink_bounds(s0);
            return true;
        }
        if (s0 < t.lo_scaled) return true;
        const int n = t.n;
        for (int j = 0; j < n; ++j) {
            V acc{};
            for (int i = 0; i < n; ++i) acc += xs[i] * t.u[static_cast<size_t>(i) * n + j];
            orig[j] = acc;
        }
        int first = -1;
        for (int j = 0; j < n; ++j)
            if (orig[j] != 0) {
                first = j;
                break;
            }
        check(first >= 0, "enumerate: zero vector reached emission");
        if (orig[first] < 0)
            for (int j = 0; j < n; ++j) orig[j] = -orig[j];
        // Exact Gram-form re-verification in the original basis.
        V re{};
        for (int a = 0; a < n; ++a) {
            if (orig[a] == 0) continue;
            V row{};
            for (int b = 0; b < n; ++b) row += t.qi[static_cast<size_t>(a) * n + b] * orig[b];
            re += orig[a] * row;
        }
        check(re == s0, "enumerate: Gram-form norm re-verification failed");
        ++emitted;
        for (int j = 0; j < n; ++j) A::set_coord(emit_buf[j], orig[j]);
        mpq_class norm(A::to_mpz(s0));
        norm /= Rat(t.d);
        return (*sink)(emit_buf, norm);
    }

    // level i: choose x_i given S_{i+1} (s_next) and sig row block i.
    bool dfs(int i, V s_next, bool all_zero) {
        const int n = t.n;
        const V a = t.delta[i + 1];
        const V b = sig[static_cast<size_t>(i) * n + i];
        V c;
        A::divexact(c, t.delta[i] * s_next + b * b, a, "enumerate: non-exact Schur division");
        V disc = b * b + a * (hb[i] - c);
        if (disc < 0) return true;
        V sq = A::isqrt(disc);
        V xlo = A::cdiv(-b - sq, a);
        V xhi = A::fdiv(sq - b, a);
        if (all_zero && xlo < 0) xlo = 0;
        if (xlo > xhi) return true;

        auto visit = [&](V v) -> bool {
            ++nodes;
            V sv = a * v * v + V(2) * b * v + c;
            if (i == 0) {
                xs[0] = v;
                return emit_leaf(sv);
            }
            xs[i] = v;
            const size_t cur = static_cast<size_t>(i) * n;
            const size_t nxt = static_cast<size_t>(i - 1) * n;
            for (int j = 0; j < i; ++j) sig[nxt + j] = sig[cur + j] + t.rrow[static_cast<size_t>(j) * n + i] * v;
            return dfs(i - 1, sv, all_zero && v == 0);
        };

        // Children by increasing |value|, positive sign first.
        if (xlo >= 0) {
            for (V v = xlo; v <= xhi; ++v)
                if (!visit(v)) return false;
        } else if (xhi <= 0) {
            for (V v = xhi; v >= xlo; --v)
                if (!visit(v)) return false;
        } else {
            if (!visit(V(0))) return false;
            for (V m = 1;; ++m) {
                bool any = false;
                if (m <= xhi) {
                    any = true;
                    if (!visit(m)) return false;
                }
                if (-m >= xlo) {
                    any = true;
                    if (!visit(-m)) return false;
                }
                if (!any) break;
            }
        }
        return true;
    }

    // Seeds the sig table and coordinates from a task suffix, then runs.
    bool run_task(const Task& task) {
        const int n = t.n;
        for (int j = 0; j < n; ++j) sig[static_cast<size_t>(n - 1) * n + j] = V{};
        int level = n - 1;
        for (const Int& zv : task.suffix) {
            V v = A::from_mpz(zv);
            xs[level] = v;
            const size_t cur = static_cast<size_t>(level) * n;
            const size_t nxt = static_cast<size_t>(level - 1) * n;
            for (int j = 0; j < level; ++j)
                sig[nxt + j] = sig[cur + j] + t.rrow[static_cast<size_t>(j) * n + level] * v;
            --level;
        }
        return dfs(level, A::from_mpz(task.svalue), task.all_zero);
    }
};

// Task expansion runs in exact mpz arithmetic regardless of the engine type.
struct MpzNode {
    Int b, c, disc, sq, xlo, xhi;
};

bool expand_interval(const EnumSetup& s, const Task& task, MpzNode& nd) {
    const int n = s.n;
    const int level = n - 1 - static_cast<int>(task.suffix.size());
    nd.b = 0;
    for (size_t k = 0; k < task.suffix.size(); ++k) {
        int idx = n - 1 - static_cast<int>(k);
        nd.b += s.ff.rows.at(level, idx) * task.suffix[k];
    }
    Int num = s.ff.delta[level] * task.svalue + nd.b * nd.b;
    Int rem;
    mpz_tdiv_qr(nd.c.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), s.ff.delta[level + 1].get_mpz_t());
    check(sgn(rem) == 0, "enumerate: non-exact Schur division (task expansion)");
    nd.disc = nd.b * nd.b + s.ff.delta[level + 1] * (s.hb[level] - nd.c);
    if (sgn(nd.disc) < 0) return false;
    mpz_sqrt(nd.sq.get_mpz_t(), nd.disc.get_mpz_t());
    Int t1 = -nd.b - nd.sq, t2 = nd.sq - nd.b;
    mpz_cdiv_q(nd.xlo.get_mpz_t(), t1.get_mpz_t(), s.ff.delta[level + 1].get_mpz_t());
    mpz_fdiv_q(nd.xhi.get_mpz_t(), t2.get_mpz_t(), s.ff.delta[level + 1].get_mpz_t());
    if (task.all_zero && sgn(nd.xlo) < 0) nd.xlo = 0;
    return nd.xlo <= nd.xhi;
}

template <class A>
EnumStats run_enumeration(const EnumSetup& s, const ShortVectorSink& sink, int workers) {
    Tables<A> tables(s);
    EnumStats stats;
    stats.bignum_path = std::is_same_v<A, ArithMpz>;
    if (s.hi_scaled < s.lo_scaled) return stats;

    Task root;
    root.svalue = 0;
    root.all_zero = true;

    if (workers <= 1 || s.n <= 2) {
        Engine<A> eng(tables);
        eng.sink = &sink;
        eng.run_task(root);
        stats.nodes = eng.nodes;
        stats.emitted = eng.emitted;
        return stats;
    }

    // Expand the top levels into independent subtrees.
    std::vector<Task> tasks{root};
    const size_t want = static_cast<size_t>(16) * workers;
    int depth = 0;
    while (tasks.size() < want && depth < 3 && s.n - 1 - depth >= 2) {
        std::vector<Task> next;
        const int level = s.n - 1 - depth;
        for (const Task& task : tasks) {
            MpzNode nd;
            if (!expand_interval(s, task, nd)) continue;
            auto push = [&](const Int& v) {
                ++stats.nodes;
                Task child;
                child.suffix = task.suffix;
                child.suffix.push_back(v);
                child.svalue = s.ff.delta[level + 1] * v * v + 2 * nd.b * v + nd.c;
                child.all_zero = task.all_zero && sgn(v) == 0;
                next.push_back(std::move(child));
            };
            // Same child order as the engine; order only matters serially.
            if (sgn(nd.xlo) >= 0)
                for (Int v = nd.xlo; v <= nd.xhi; ++v) push(v);
            else if (sgn(nd.xhi) <= 0)
                for (Int v = nd.xhi; v >= nd.xlo; --v) push(v);
            else {
                push(Int(0));
                for (Int m = 1;; ++m) {
                    bool any = false;
                    if (m <= nd.xhi) {
                        any = true;
                        push(m);
                    }
                    if (-m >= nd.xlo) {
                        any = true;
                        push(-m);
                    }
                    if (!any) break;
                }
            }
        }
        tasks = std::move(next);
        ++depth;
        if (tasks.empty()) break;
    }

    uint64_t nodes = 0, emitted = 0;
#ifdef _OPENMP
#pragma omp parallel num_threads(workers) reduction(+ : nodes, emitted)
    {
        Engine<A> eng(tables);
        eng.sink = &sink;
#pragma omp for schedule(dynamic)
        for (long idx = 0; idx < static_cast<long>(tasks.size()); ++idx) eng.run_task(tasks[idx]);
        nodes += eng.nodes;
        emitted += eng.emitted;
    }
#else
    {
        Engine<A> eng(tables);
        eng.sink = &sink;
        for (const Task& task : tasks) eng.run_task(task);
        nodes = eng.nodes;
        emitted = eng.emitted;
    }
#endif
    stats.nodes += nodes;
    stats.emitted = emitted;
    return stats;
}

}  // namespace

EnumStats enumerate_short(const GramLattice& l, const Rat& lo, const Rat& hi, const ShortVectorSink& sink,
                          int workers) {
    EnumSetup s = prepare(l, lo, hi);
    if (s.fast_ok) return run_enumeration<ArithI128>(s, sink, workers);
    return run_enumeration<ArithMpz>(s, sink, workers);
}

std::vector<std::pair<IntVec, Rat>> collect_short(const GramLattice& l, const Rat& lo, const Rat& hi) {
    std::vector<std::pair<IntVec, Rat>> out;
    enumerate_short(
        l, lo, hi,
        [&out](const IntVec& v, const Rat& n) {
            out.emplace_back(v, n);
            return true;
        },
        1);
    return out;
}

namespace {

Int min_reduced_diagonal(const GramLattice& l) {
    LLLGram red = lll_reduce_gram(l.scaled_gram());
    Int m = red.gram.at(0, 0);
    for (int i = 1; i < l.rank; ++i)
        if (red.gram.at(i, i) < m) m = red.gram.at(i, i);
    return m;
}

template <class A>
Rat minimum_with(const EnumSetup& s, const Int& seed) {
    Tables<A> tables(s);
    Engine<A> eng(tables);
    eng.minimum_mode = true;
    eng.shrink_bounds(A::from_mpz(seed));
    ShortVectorSink nosink = [](const IntVec&, const Rat&) { return true; };
    eng.sink = &nosink;
    Task root;
    root.svalue = 0;
    eng.run_task(root);
    Rat m(A::to_mpz(eng.best));
    m /= Rat(s.d);
    return m;
}

}  // namespace

Rat lattice_minimum(const GramLattice& l) {
    // Inclusive upper bound: the smallest reduced basis norm. A vector of
    // that norm exists, so the shrinking search returns the exact minimum.
    Int seed = min_reduced_diagonal(l);
    Rat hi(seed);
    hi /= Rat(l.scale_denominator);
    EnumSetup s = prepare(l, hi, hi);
    if (s.fast_ok) return minimum_with<ArithI128>(s, seed);
    return minimum_with<ArithMpz>(s, seed);
}

}  // namespace twodist
