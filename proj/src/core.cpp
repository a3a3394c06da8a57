#include "qwalk/core.hpp"

#include <stdexcept>

namespace qwalk {

namespace {

inline Vec2 step_site(const Vec2* in, int j, int radius_in, int capacity, const CoinSet& coins) {
    // Source-site coin convention: the coin applied to psi(j+1) is C_{j+1}.
    Vec2 acc{};
    if (j + 1 <= radius_in) {
        const Vec2& v = in[j + 1 + capacity];
        const Mat2& m = coins.at(j + 1);
        acc.l = m.a * v.l + m.b * v.r;
    }
    if (j - 1 >= -radius_in) {
        const Vec2& v = in[j - 1 + capacity];
        const Mat2& m = coins.at(j - 1);
        acc.r = m.c * v.l + m.d * v.r;
    }
    return acc;
}

} // namespace

void step_kernel_serial(const Vec2* in, Vec2* out, int radius_in, int capacity,
                        const CoinSet& coins) {
    for (int j = -(radius_in + 1); j <= radius_in + 1; ++j)
        out[j + capacity] = step_site(in, j, radius_in, capacity, coins);
}

void step_kernel_parallel(const Vec2* in, Vec2* out, int radius_in, int capacity,
                          const CoinSet& coins) {
    const int lo = -(radius_in + 1), hi = radius_in + 1;
#pragma omp parallel for schedule(static) if (hi - lo > 4096)
    for (int j = lo; j <= hi; ++j)
        out[j + capacity] = step_site(in, j, radius_in, capacity, coins);
}

WalkerState initial_state(const CoinState& coin_state, int capacity_hint) {
    if (std::abs(coin_state.norm2() - 1.0) > 1e-9)
        throw std::invalid_argument("initial_state: coin state is not normalized");
    WalkerState s(capacity_hint > 0 ? capacity_hint : 1);
    s.mutable_at(0) = {coin_state.alpha, coin_state.beta};
    return s;
}

WalkerState unitary_step(const WalkerState& state, const CoinSet& coins) {
    const int r = state.radius();
    WalkerState in = state;
    in.ensure_capacity(r + 1);
    WalkerState out(in.capacity());
    step_kernel_parallel(in.data(), out.data(), r, in.capacity(), coins);
    out.set_step_count(state.step_count() + 1);
    return out;
}

WalkerState apply_sink(const WalkerState& state) {
    WalkerState out = state;
    out.mutable_at(0) = Vec2{};
    return out;
}

WalkerState survival_step(const WalkerState& state, const CoinSet& coins) {
    WalkerState out = unitary_step(state, coins);
    out.mutable_at(0) = Vec2{};
    return out;
}

WalkerState evolve(const CoinState& coin_state, const CoinSet& coins, int n, EvolveMode mode) {
    if (n < 0) throw std::invalid_argument("evolve: negative step count");
    return evolve_from(initial_state(coin_state, n), coins, n, mode);
}

WalkerState evolve_from(WalkerState state, const CoinSet& coins, int n, EvolveMode mode) {
    state.ensure_capacity(state.step_count() + n);
    WalkerState scratch(state.capacity());
    for (int k = 0; k < n; ++k) {
        step_kernel_parallel(state.data(), scratch.data(), state.radius(), state.capacity(),
                             coins);
        scratch.set_step_count(state.step_count() + 1);
        if (mode == EvolveMode::survival) scratch.mutable_at(0) = Vec2{};
        std::swap(state, scratch);
    }
    return state;
}

} // namespace qwalk
