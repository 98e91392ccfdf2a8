#pragma once

#include "twodist/common.hpp"

namespace twodist {

// Elements a + b*sqrt(3) of Q[sqrt(3)], exact.
struct QSqrt3 {
    Rat a, b;

    QSqrt3() = default;
    QSqrt3(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QSqrt3(const Rat& a_) : a(a_) {}

    bool operator==(const QSqrt3& o) const { return a == o.a && b == o.b; }

    QSqrt3 operator+(const QSqrt3& o) const { return {a + o.a, b + o.b}; }
    QSqrt3 operator-(const QSqrt3& o) const { return {a - o.a, b - o.b}; }
    QSqrt3 operator*(const QSqrt3& o) const { return {a * o.a + Rat(3) * b * o.b, a * o.b + b * o.a}; }

    bool is_rational() const { return sgn(b) == 0; }
};

}  // namespace twodist
