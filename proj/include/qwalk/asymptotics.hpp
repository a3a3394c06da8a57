#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Konno density f_K(x; a) = sqrt(1-a^2) / (pi (1-x^2) sqrt(a^2-x^2)) on |x| < a,
/// zero outside (the |x| = a boundary included in the zero set). Requires a in (0,1).
double konno_density(double x, double a);

/// Skew parameter of the homogeneous-walk limit density,
/// lambda = |alpha|^2 - |beta|^2 + 2 Re(a0 alpha conj(b0 beta)) / |a0|^2.
double unitary_lambda(const Mat2& coin, const CoinState& coin_state);

/// Parameters of the homogeneous-walk limit density rho(x) = (1 - lambda x) f_K(x; a0).
struct UnitaryDensityModel {
    double a0 = 0.0;
    double lambda = 0.0;
};

UnitaryDensityModel make_unitary_model(const Mat2& coin, const CoinState& coin_state);

double unitary_limit_density(double x, const UnitaryDensityModel& model);

/// One-step splitting probabilities P+ = |c0 alpha + d0 beta|^2,
/// P- = |a0 alpha + b0 beta|^2 (bilinear row pairing; equals ||Q0 psi_c||^2 /
/// ||P0 psi_c||^2, the physical first-step probabilities).
struct StepWeights {
    double plus = 0.0;
    double minus = 0.0;
};

StepWeights step_weights(const Mat2& coin_zero, const CoinState& coin_state);

/// N(a) = [pi a^2 - 2a sqrt(1-a^2) + 2(1-2a^2) arcsin(a)] / (pi (1-a^2)),
/// the mass of (4x^2/(1+x)) f_K(x;a) over (0, a). Requires a in (0,1).
double normalization_factor(double a);

/// Defining integral of N(a) over [lo, hi] in [0, a], by adaptive quadrature
/// with the x = a sin t endpoint substitution. Kept public as the independent
/// route against the closed form.
double normalization_integral(double a, double lo, double hi, double abs_tol = 1e-12);

/// Parameters of the conditional limit density.
struct DensityModel {
    double a_plus = 0.0, a_minus = 0.0;   // Konno parameters |a_+|, |a_-|
    double p_plus = 0.0, p_minus = 0.0;   // half-line weights, sum to 1
    double n_plus = 0.0, n_minus = 0.0;   // N(|a_+|), N(|a_-|)
};

/// Builds the Theorem-2 model from the coins and initial state; rejects
/// non-mixing C+ or C-.
DensityModel make_conditional_model(const CoinSet& coins, const CoinState& coin_state);

/// rho_cond(x) = H(x) rho+(x) + H(-x) rho-(x) with
/// rho±(x) = (P± / N(a±)) (4x^2/(1+|x|)) f_K(x; a±). Vanishes at x = 0.
double conditional_limit_density(double x, const DensityModel& model);

/// CDF of rho_cond by quadrature; cdf(0) = P-, cdf(a+) = 1.
double conditional_limit_cdf(double y, const DensityModel& model);

/// CDF evaluated at a sorted grid of points in one incremental sweep.
std::vector<double> conditional_limit_cdf_grid(std::span<const double> sorted_y,
                                               const DensityModel& model);

/// Polya number P = 1 - P+ N(|a_+|) - P- N(|a_-|); rejects non-mixing C±.
double polya_closed_form(const CoinSet& coins, const CoinState& coin_state);

/// Bin approximation nu_n(j) ~ (2/n) rho(j/n) for j = n (mod 2); the factor 2
/// offsets bipartiteness. Throws on off-parity (j, n).
double density_approximation(int j, int n, const DensityModel& model);
double density_approximation(int j, int n, const UnitaryDensityModel& model);

} // namespace qwalk
