#pragma once

#include <vector>

#include "qwalk/core.hpp"

namespace qwalk {

/// Position probabilities at a fixed step, dense over [-radius, radius].
struct Distribution {
    int step = 0;
    int radius = 0;
    std::vector<double> p; // index j + radius
    double mass = 0.0;

    double at(int j) const {
        if (j < -radius || j > radius) return 0.0;
        return p[static_cast<std::size_t>(j + radius)];
    }
};

/// Per-step survival / first-return / cumulative-absorption series, index = step.
/// survival[0] = 1, first_return[0] = absorbed[0] = 0.
struct SurvivalRecord {
    std::vector<double> survival;     // P_n^(sur) = ||psi_n^(sur)||^2
    std::vector<double> first_return; // q(0,n), zero for odd n
    std::vector<double> absorbed;     // P_n^(abs) = sum_{k<=n} q(0,k)
};

/// nu(j) = ||psi(j)||^2; mass equals the squared state norm.
Distribution position_distribution(const WalkerState& state);

/// nu_cond_n(j) = ||(U psi^(sur)_{n-1})(j)||^2 / P^(sur)_{n-1}. The full unitary
/// U is applied (not U^(sur)), so the j=0 bin -- the mass about to be absorbed --
/// is part of the distribution and the total mass is 1.
Distribution conditional_distribution(const CoinState& coin_state, const CoinSet& coins, int n);

/// One pass over n_max survival steps. q(0,k) is read off the origin amplitude
/// of U psi^(sur)_{k-1} before the sink acts; the absorbed series accumulates
/// with compensated summation.
SurvivalRecord survival_series(const CoinState& coin_state, const CoinSet& coins, int n_max);

/// Partial sum sum_{k<=n_max} q(0,k); identical accumulation to
/// survival_series(...).absorbed.back().
double polya_series(const CoinState& coin_state, const CoinSet& coins, int n_max);

} // namespace qwalk
