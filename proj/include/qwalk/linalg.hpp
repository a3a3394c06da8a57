#pragma once

#include <complex>
#include <cmath>

namespace qwalk {

using cplx = std::complex<double>;

/// Two-component coin amplitude: l rides the left-moving channel, r the right-moving one.
struct Vec2 {
    cplx l{};
    cplx r{};

    double norm2() const { return std::norm(l) + std::norm(r); }

    friend Vec2 operator+(const Vec2& x, const Vec2& y) { return {x.l + y.l, x.r + y.r}; }
    friend Vec2 operator-(const Vec2& x, const Vec2& y) { return {x.l - y.l, x.r - y.r}; }
    friend Vec2 operator*(const cplx& s, const Vec2& v) { return {s * v.l, s * v.r}; }
};

/// 2x2 complex matrix with rows (a b) and (c d). Doubles as a coin matrix.
struct Mat2 {
    cplx a{}, b{}, c{}, d{};

    friend Vec2 operator*(const Mat2& m, const Vec2& v) {
        return {m.a * v.l + m.b * v.r, m.c * v.l + m.d * v.r};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }

    cplx det() const { return a * d - b * c; }

    /// Frobenius norm; cheap stand-in for the operator norm bound checks.
    double frobenius() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
};

/// Neumaier-compensated accumulator. Keeps thousand-step probability
/// budgets exact at the 1e-12 level required by the complementarity invariant.
class KahanSum {
    double sum_ = 0.0;
    double comp_ = 0.0;

public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }
};

inline double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

} // namespace qwalk
