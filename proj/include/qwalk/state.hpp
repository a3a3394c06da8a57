#pragma once

#include <vector>

#include "qwalk/linalg.hpp"

namespace qwalk {

/// Dense two-component amplitude field over the window [-capacity, capacity],
/// centered at the origin. After n steps from the origin the support lies in
/// [-n, n] on sites of the same parity as n; parity-empty sites hold exact zeros.
class WalkerState {
    std::vector<Vec2> amp_;
    int capacity_ = 0;
    int steps_ = 0;

public:
    WalkerState() : amp_(1), capacity_(0) {}

    explicit WalkerState(int capacity)
        : amp_(2 * static_cast<std::size_t>(capacity) + 1), capacity_(capacity) {}

    int capacity() const { return capacity_; }
    int step_count() const { return steps_; }
    /// step_count doubles as the declared support radius; states assembled by
    /// hand through mutable_at must set it to cover their support.
    void set_step_count(int n) { steps_ = n; }

    /// Support radius: min(step_count, capacity). Sites beyond it are zero.
    int radius() const { return steps_ < capacity_ ? steps_ : capacity_; }

    const Vec2& at(int j) const {
        static const Vec2 zero{};
        if (j < -capacity_ || j > capacity_) return zero;
        return amp_[static_cast<std::size_t>(j + capacity_)];
    }
    Vec2& mutable_at(int j) { return amp_[static_cast<std::size_t>(j + capacity_)]; }

    Vec2* data() { return amp_.data(); }
    const Vec2* data() const { return amp_.data(); }

    /// Grows the window, preserving contents. No-op if already large enough.
    void ensure_capacity(int capacity) {
        if (capacity <= capacity_) return;
        std::vector<Vec2> grown(2 * static_cast<std::size_t>(capacity) + 1);
        for (int j = -capacity_; j <= capacity_; ++j)
            grown[static_cast<std::size_t>(j + capacity)] = at(j);
        amp_ = std::move(grown);
        capacity_ = capacity;
    }

    double norm2() const {
        KahanSum s;
        const int r = radius();
        for (int j = -r; j <= r; ++j) s.add(at(j).norm2());
        return s.value();
    }
};

} // namespace qwalk
