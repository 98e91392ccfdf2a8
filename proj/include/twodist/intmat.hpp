#pragma once

#include <string>
#include <vector>

#include "twodist/common.hpp"

namespace twodist {

// Dense matrix over arbitrary-precision integers. Row-major storage.
//
// Text format (shared by caches and cross-checking scripts):
//   first line "rows cols", then the entries row-major, whitespace separated.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        check(rows >= 0 && cols >= 0, "IntMatrix: negative dimensions");
    }

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_symmetric() const;
    Int trace() const;

    IntMatrix transpose() const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix scaled(const Int& c) const;
    // this + c*I
    IntMatrix plus_scaled_identity(const Int& c) const;

    // Matrix product. mul() splits rows across OpenMP threads and is
    // bit-identical to mul_serial(), which is kept as the reference kernel.
    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix mul_serial(const IntMatrix& o) const;

    IntVec mul_vec(const IntVec& v) const;              // this * v
    static IntVec vec_mul(const IntVec& v, const IntMatrix& m);  // v^T * this

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);

    std::string to_text() const;
    static IntMatrix from_text(const std::string& text);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Dense matrix over exact rationals, entries always canonicalized.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);
    // m / den
    static RatMatrix from_int(const IntMatrix& m, const Int& den = Int(1));

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_symmetric() const;
    RatMatrix mul(const RatMatrix& o) const;
    RatMatrix transpose() const;

    // Exact inverse by Gauss-Jordan elimination; throws on singular input.
    RatMatrix inverse() const;

    // LCM of all entry denominators (>= 1).
    Int lcm_denominator() const;

    // All denominators 1?
    bool is_integral() const;
    IntMatrix numerators_scaled(const Int& d) const;  // d * this, must be integral

    std::string to_text() const;
    static RatMatrix from_text(const std::string& text);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

}  // namespace twodist
