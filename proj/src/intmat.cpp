#include "twodist/intmat.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twodist {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a_)
        if (sgn(v) != 0) return false;
    return true;
}

bool IntMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Int IntMatrix::trace() const {
    check(rows_ == cols_, "trace: square matrix required");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "matrix add: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "matrix sub: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
}

IntMatrix IntMatrix::plus_scaled_identity(const Int& c) const {
    check(rows_ == cols_, "plus_scaled_identity: square matrix required");
    IntMatrix r = *this;
    for (int i = 0; i < rows_; ++i) r.at(i, i) += c;
    return r;
}

namespace {

// Accumulates row i of a*b into out. i-k-j order so the inner loop is a
// run of mpz_addmul against a fixed left operand.
void mul_row(const IntMatrix& a, const IntMatrix& b, IntMatrix& out, int i) {
    const int n = a.cols(), p = b.cols();
    for (int k = 0; k < n; ++k) {
        const Int& aik = a.at(i, k);
        if (sgn(aik) == 0) continue;
        for (int j = 0; j < p; ++j) {
            mpz_addmul(out.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
        }
    }
}

}  // namespace

IntMatrix IntMatrix::mul_serial(const IntMatrix& o) const {
    check(cols_ == o.rows_, "matrix mul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) mul_row(*this, o, r, i);
    return r;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const {
    check(cols_ == o.rows_, "matrix mul: shape mismatch");
    IntMatrix r(rows_, o.cols_);
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < rows_; ++i) mul_row(*this, o, r, i);
    return r;
}

IntVec IntMatrix::mul_vec(const IntVec& v) const {
    check(static_cast<int>(v.size()) == cols_, "mul_vec: shape mismatch");
    IntVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) mpz_addmul(r[i].get_mpz_t(), at(i, j).get_mpz_t(), v[j].get_mpz_t());
    return r;
}

IntVec IntMatrix::vec_mul(const IntVec& v, const IntMatrix& m) {
    check(static_cast<int>(v.size()) == m.rows(), "vec_mul: shape mismatch");
    IntVec r(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        if (sgn(v[i]) == 0) continue;
        for (int j = 0; j < m.cols(); ++j) mpz_addmul(r[j].get_mpz_t(), v[i].get_mpz_t(), m.at(i, j).get_mpz_t());
    }
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

std::string IntMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntMatrix IntMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    int r = -1, c = -1;
    if (!(is >> r >> c) || r < 0 || c < 0) fail("IntMatrix::from_text: bad header");
    IntMatrix m(r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(is >> tok)) fail("IntMatrix::from_text: truncated");
            if (mpz_set_str(m.at(i, j).get_mpz_t(), tok.c_str(), 10) != 0) fail("IntMatrix::from_text: bad integer '" + tok + "'");
        }
    return m;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m, const Int& den) {
    check(sgn(den) > 0, "RatMatrix::from_int: denominator must be positive");
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat q(m.at(i, j));
            q /= Rat(den);
            r.at(i, j) = q;
        }
    return r;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::mul(const RatMatrix& o) const {
    check(cols_ == o.rows_, "rat mul: shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& v = at(i, k);
            if (sgn(v) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::inverse() const {
    check(rows_ == cols_, "inverse: square matrix required");
    const int n = rows_;
    RatMatrix a = *this;
    RatMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (sgn(a.at(i, col)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) fail("RatMatrix::inverse: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        Rat p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            Rat f = a.at(i, col);
            if (sgn(f) == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Int RatMatrix::lcm_denominator() const {
    Int l = 1;
    for (const Rat& q : a_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    return l;
}

bool RatMatrix::is_integral() const {
    for (const Rat& q : a_)
        if (q.get_den() != 1) return false;
    return true;
}

IntMatrix RatMatrix::numerators_scaled(const Int& d) const {
    IntMatrix m(rows_, cols_);
    Rat dq(d);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Rat v = at(i, j) * dq;
            check(v.get_den() == 1, "numerators_scaled: scale does not clear denominator");
            m.at(i, j) = v.get_num();
        }
    return m;
}

std::string RatMatrix::to_text() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

RatMatrix RatMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    int r = -1, c = -1;
    if (!(is >> r >> c) || r < 0 || c < 0) fail("RatMatrix::from_text: bad header");
    RatMatrix m(r, c);
    std::string tok;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!(is >> tok)) fail("RatMatrix::from_text: truncated");
            if (mpq_set_str(m.at(i, j).get_mpq_t(), tok.c_str(), 10) != 0) fail("RatMatrix::from_text: bad rational '" + tok + "'");
            m.at(i, j).canonicalize();
        }
    return m;
}

}  // namespace twodist
