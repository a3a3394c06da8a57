#pragma once

#include <cstdint>
#include <stdexcept>

#include "qwalk/linalg.hpp"

namespace qwalk {

/// Coin of the source site: C+ for j>0, C0 at the origin, C- for j<0.
struct CoinSet {
    Mat2 minus, zero, plus;

    const Mat2& at(int j) const { return j > 0 ? plus : (j < 0 ? minus : zero); }
};

/// Initial two-component coin state (alpha, beta)^T.
struct CoinState {
    cplx alpha{};
    cplx beta{};

    double norm2() const { return std::norm(alpha) + std::norm(beta); }
};

inline Mat2 hadamard_coin() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}

/// Real rotation coin [[cos, sin], [-sin, cos]].
inline Mat2 rotation_coin(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c, s, -s, c};
}

inline CoinSet homogeneous_coins(const Mat2& coin) { return {coin, coin, coin}; }

/// Max deviation from the unitarity relations (row norms, row orthogonality, |det|).
inline double unitarity_residual(const Mat2& m) {
    double r = std::abs(std::norm(m.a) + std::norm(m.c) - 1.0);
    r = std::max(r, std::abs(std::norm(m.b) + std::norm(m.d) - 1.0));
    r = std::max(r, std::abs(m.a * std::conj(m.b) + m.c * std::conj(m.d)));
    r = std::max(r, std::abs(std::abs(m.det()) - 1.0));
    return r;
}

inline bool is_unitary(const Mat2& m, double tol = 1e-12) {
    return unitarity_residual(m) <= tol;
}

/// Mixing means 0 < |a| < 1: both transmission and reflection are open.
inline bool is_mixing(const Mat2& m, double tol = 1e-12) {
    const double aa = std::abs(m.a);
    return aa > tol && aa < 1.0 - tol;
}

inline void require_mixing(const Mat2& m, const char* what) {
    if (!is_mixing(m))
        throw std::domain_error(std::string(what) + ": coin is not mixing (|a| is 0 or 1)");
}

/// SplitMix64. Used instead of std::uniform_real_distribution so that seeded
/// runs are bit-identical across standard library implementations.
class Rng {
    std::uint64_t s_;

public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

/// Random mixing unitary, Haar-ish phases with the mixing angle kept away from
/// the non-mixing endpoints.
inline Mat2 random_unitary_coin(Rng& rng) {
    const double phi = rng.uniform(0.0, 2.0 * M_PI);
    const double chi = rng.uniform(0.0, 2.0 * M_PI);
    const double om = rng.uniform(0.0, 2.0 * M_PI);
    const double t = rng.uniform(0.2, M_PI / 2.0 - 0.2);
    const cplx g = std::polar(1.0, phi);
    const double ct = std::cos(t), st = std::sin(t);
    return {g * std::polar(ct, chi), g * std::polar(st, om),
            g * (-std::polar(st, -om)), g * std::polar(ct, -chi)};
}

inline CoinState random_coin_state(Rng& rng) {
    const double t = rng.uniform(0.0, M_PI / 2.0);
    const double p1 = rng.uniform(0.0, 2.0 * M_PI);
    const double p2 = rng.uniform(0.0, 2.0 * M_PI);
    return {std::polar(std::cos(t), p1), std::polar(std::sin(t), p2)};
}

} // namespace qwalk
