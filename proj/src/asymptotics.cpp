#include "qwalk/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qwalk/quadrature.hpp"

namespace qwalk {

namespace {

void require_open_unit(double a, const char* what) {
    if (!(a > 0.0 && a < 1.0))
        throw std::domain_error(std::string(what) + ": parameter a must lie in (0,1)");
}

/// Integrand of int f_K(x;a) dx after x = a sin t: smooth on [-pi/2, pi/2].
double konno_sub(double t, double a) {
    const double x = a * std::sin(t);
    return std::sqrt(1.0 - a * a) / (M_PI * (1.0 - x * x));
}

/// Integrand of int (4x^2/(1+x)) f_K(x;a) dx after x = a sin t, t in [0, pi/2].
double weighted_sub(double t, double a) {
    const double x = a * std::sin(t);
    return 4.0 * x * x / (1.0 + x) * konno_sub(t, a);
}

} // namespace

double konno_density(double x, double a) {
    require_open_unit(a, "konno_density");
    if (std::abs(x) >= a) return 0.0;
    return std::sqrt(1.0 - a * a) /
           (M_PI * (1.0 - x * x) * std::sqrt(a * a - x * x));
}

double unitary_lambda(const Mat2& coin, const CoinState& coin_state) {
    require_mixing(coin, "unitary_lambda");
    const cplx cross = coin.a * coin_state.alpha * std::conj(coin.b) * std::conj(coin_state.beta);
    return std::norm(coin_state.alpha) - std::norm(coin_state.beta) +
           2.0 * cross.real() / std::norm(coin.a);
}

UnitaryDensityModel make_unitary_model(const Mat2& coin, const CoinState& coin_state) {
    return {std::abs(coin.a), unitary_lambda(coin, coin_state)};
}

double unitary_limit_density(double x, const UnitaryDensityModel& model) {
    if (std::abs(x) >= model.a0) return 0.0;
    return (1.0 - model.lambda * x) * konno_density(x, model.a0);
}

StepWeights step_weights(const Mat2& coin_zero, const CoinState& coin_state) {
    const cplx right = coin_zero.c * coin_state.alpha + coin_zero.d * coin_state.beta;
    const cplx left = coin_zero.a * coin_state.alpha + coin_zero.b * coin_state.beta;
    return {std::norm(right), std::norm(left)};
}

double normalization_factor(double a) {
    require_open_unit(a, "normalization_factor");
    return (M_PI * a * a - 2.0 * a * std::sqrt(1.0 - a * a) +
            2.0 * (1.0 - 2.0 * a * a) * std::asin(a)) /
           (M_PI * (1.0 - a * a));
}

double normalization_integral(double a, double lo, double hi, double abs_tol) {
    require_open_unit(a, "normalization_integral");
    lo = std::clamp(lo, 0.0, a);
    hi = std::clamp(hi, 0.0, a);
    if (hi <= lo) return 0.0;
    return integrate([a](double t) { return weighted_sub(t, a); },
                     std::asin(lo / a), std::asin(hi / a), abs_tol);
}

DensityModel make_conditional_model(const CoinSet& coins, const CoinState& coin_state) {
    require_mixing(coins.plus, "make_conditional_model (C+)");
    require_mixing(coins.minus, "make_conditional_model (C-)");
    const StepWeights w = step_weights(coins.zero, coin_state);
    DensityModel m;
    m.a_plus = std::abs(coins.plus.a);
    m.a_minus = std::abs(coins.minus.a);
    m.p_plus = w.plus;
    m.p_minus = w.minus;
    m.n_plus = normalization_factor(m.a_plus);
    m.n_minus = normalization_factor(m.a_minus);
    return m;
}

double conditional_limit_density(double x, const DensityModel& model) {
    if (x == 0.0) return 0.0; // forced by the 4x^2 factor; no H(0) convention needed
    const double a = x > 0.0 ? model.a_plus : model.a_minus;
    const double p = x > 0.0 ? model.p_plus : model.p_minus;
    const double n = x > 0.0 ? model.n_plus : model.n_minus;
    if (std::abs(x) >= a) return 0.0;
    return p / n * 4.0 * x * x / (1.0 + std::abs(x)) * konno_density(x, a);
}

double conditional_limit_cdf(double y, const DensityModel& model) {
    if (y <= -model.a_minus) return 0.0;
    if (y >= model.a_plus) return 1.0;
    if (y <= 0.0)
        // mass of rho- on (-a-, y]; the integrand is even, integrate on [|y|, a-).
        return model.p_minus / model.n_minus *
               normalization_integral(model.a_minus, -y, model.a_minus);
    return model.p_minus +
           model.p_plus / model.n_plus * normalization_integral(model.a_plus, 0.0, y);
}

std::vector<double> conditional_limit_cdf_grid(std::span<const double> sorted_y,
                                               const DensityModel& model) {
    std::vector<double> out(sorted_y.size());
    double acc = 0.0;
    double prev = -1.0; // everything below -a_minus contributes zero
    bool have_prev = false;
    for (std::size_t i = 0; i < sorted_y.size(); ++i) {
        const double y = sorted_y[i];
        if (!have_prev) {
            acc = conditional_limit_cdf(y, model);
            have_prev = true;
        } else {
            // incremental panel, split at 0 where the density switches branch
            double lo = prev, hi = y;
            auto panel = [&](double a, double b) {
                if (b <= a) return 0.0;
                if (b <= 0.0)
                    return model.p_minus / model.n_minus *
                           normalization_integral(model.a_minus, -b, -a);
                return model.p_plus / model.n_plus *
                       normalization_integral(model.a_plus, a, b);
            };
            if (lo < 0.0 && hi > 0.0)
                acc += panel(lo, 0.0) + panel(0.0, hi);
            else
                acc += panel(lo, hi);
        }
        out[i] = std::min(acc, 1.0);
        prev = y;
    }
    return out;
}

double polya_closed_form(const CoinSet& coins, const CoinState& coin_state) {
    const DensityModel m = make_conditional_model(coins, coin_state);
    return 1.0 - m.p_plus * m.n_plus - m.p_minus * m.n_minus;
}

double density_approximation(int j, int n, const DensityModel& model) {
    if (n < 1 || ((j % 2 + 2) % 2) != ((n % 2 + 2) % 2))
        throw std::invalid_argument("density_approximation: j and n must share parity");
    return 2.0 / n * conditional_limit_density(static_cast<double>(j) / n, model);
}

double density_approximation(int j, int n, const UnitaryDensityModel& model) {
    if (n < 1 || ((j % 2 + 2) % 2) != ((n % 2 + 2) % 2))
        throw std::invalid_argument("density_approximation: j and n must share parity");
    return 2.0 / n * unitary_limit_density(static_cast<double>(j) / n, model);
}

} // namespace qwalk
