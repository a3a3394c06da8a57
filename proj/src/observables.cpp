#include "qwalk/observables.hpp"

#include <stdexcept>

namespace qwalk {

Distribution position_distribution(const WalkerState& state) {
    Distribution d;
    d.step = state.step_count();
    d.radius = state.radius();
    d.p.resize(2 * static_cast<std::size_t>(d.radius) + 1);
    KahanSum mass;
    for (int j = -d.radius; j <= d.radius; ++j) {
        const double v = state.at(j).norm2();
        d.p[static_cast<std::size_t>(j + d.radius)] = v;
        mass.add(v);
    }
    d.mass = mass.value();
    return d;
}

Distribution conditional_distribution(const CoinState& coin_state, const CoinSet& coins,
                                      int n) {
    if (n < 1) throw std::invalid_argument("conditional_distribution: n must be >= 1");
    WalkerState prev = evolve(coin_state, coins, n - 1, EvolveMode::survival);
    const double p_sur = prev.norm2();
    if (p_sur <= 0.0)
        throw std::domain_error("conditional_distribution: survival probability vanished");
    WalkerState cur = unitary_step(prev, coins);
    Distribution d = position_distribution(cur);
    for (double& v : d.p) v /= p_sur;
    d.mass /= p_sur;
    return d;
}

SurvivalRecord survival_series(const CoinState& coin_state, const CoinSet& coins, int n_max) {
    if (n_max < 1) throw std::invalid_argument("survival_series: n_max must be >= 1");
    SurvivalRecord rec;
    rec.survival.reserve(n_max + 1);
    rec.first_return.reserve(n_max + 1);
    rec.absorbed.reserve(n_max + 1);
    rec.survival.push_back(1.0);
    rec.first_return.push_back(0.0);
    rec.absorbed.push_back(0.0);

    WalkerState state = initial_state(coin_state, n_max);
    WalkerState scratch(state.capacity());
    KahanSum absorbed;
    for (int k = 1; k <= n_max; ++k) {
        step_kernel_parallel(state.data(), scratch.data(), state.radius(), state.capacity(),
                             coins);
        scratch.set_step_count(state.step_count() + 1);
        const double q = scratch.at(0).norm2();
        scratch.mutable_at(0) = Vec2{};
        std::swap(state, scratch);
        absorbed.add(q);
        rec.first_return.push_back(q);
        rec.absorbed.push_back(absorbed.value());
        rec.survival.push_back(state.norm2());
    }
    return rec;
}

double polya_series(const CoinState& coin_state, const CoinSet& coins, int n_max) {
    if (n_max < 2) throw std::invalid_argument("polya_series: n_max must be >= 2");
    return survival_series(coin_state, coins, n_max).absorbed.back();
}

} // namespace qwalk
