#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

enum class EvolveMode { unitary, survival };

/// One walk step as a raw kernel: out(j) = top(C_{j+1} in(j+1)) + bot(C_{j-1} in(j-1))
/// for |j| <= radius_in + 1. Both variants produce bitwise identical output;
/// the serial one is the reference the parallel kernel is tested against.
void step_kernel_serial(const Vec2* in, Vec2* out, int radius_in, int capacity,
                        const CoinSet& coins);
void step_kernel_parallel(const Vec2* in, Vec2* out, int radius_in, int capacity,
                          const CoinSet& coins);

/// State with psi(0) = psi_c and zeros elsewhere. Rejects non-normalized
/// coin states (tolerance 1e-9).
WalkerState initial_state(const CoinState& coin_state, int capacity_hint = 0);

/// Full unitary step U = S C. Grows the window as needed.
WalkerState unitary_step(const WalkerState& state, const CoinSet& coins);

/// (1 - Pi_0): zeroes the origin amplitude, leaves everything else untouched.
WalkerState apply_sink(const WalkerState& state);

/// U^(sur) = (1 - Pi_0) U.
WalkerState survival_step(const WalkerState& state, const CoinSet& coins);

/// n-fold application of the selected step starting from psi_0.
WalkerState evolve(const CoinState& coin_state, const CoinSet& coins, int n, EvolveMode mode);

/// Same evolution from an arbitrary (possibly non-normalized) state. This is
/// the linear map itself, with no normalization precondition.
WalkerState evolve_from(WalkerState state, const CoinSet& coins, int n, EvolveMode mode);

} // namespace qwalk
