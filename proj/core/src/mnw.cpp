#include "stit/mnw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace stit {

double Tessellation::total_cell_volume() const {
    double v = 0;
    for (const auto& c : cells_) v += c.volume();
    return v;
}

namespace {

constexpr int kMaxRedraws = 100;

double fresh_death(const HyperplaneMeasureSpec& spec, const ConvexPolytope& c,
                   double now, RngStream& rng) {
    double cap = spec.capacity(c);
    if (!std::isfinite(cap) || cap < 0)
        throw std::runtime_error("non-finite cell capacity");
    if (cap == 0) return std::numeric_limits<double>::infinity();
    return now + rng.exponential(cap);
}

}  // namespace

void advance_to(Tessellation& t, double horizon, RngStream& rng) {
    while (!t.pending_.empty() && t.pending_.top().death <= horizon) {
        auto [now, idx] = t.pending_.top();
        t.pending_.pop();
        const ConvexPolytope cell = t.cells_[idx];

        SplitResult parts;
        bool ok = false;
        for (int attempt = 0; attempt < kMaxRedraws && !ok; ++attempt) {
            Hyperplane h = t.spec_.sample_hitting(cell, rng);
            try {
                parts = cell.split(h);
                ok = true;
            } catch (const NonSplittingError&) {
                ++t.redraws_;
            }
        }
        if (!ok) throw std::runtime_error("could not split cell");

        t.max_polytopes_.push_back({parts.interface, now,
                                    parts.interface.carrier().normal,
                                    parts.interface.volume(), idx});

        t.cells_[idx] = std::move(parts.plus);
        t.pending_.push({fresh_death(t.spec_, t.cells_[idx], now, rng), idx});
        t.cells_.push_back(std::move(parts.minus));
        int child = static_cast<int>(t.cells_.size()) - 1;
        t.pending_.push({fresh_death(t.spec_, t.cells_[child], now, rng), child});
    }
    t.horizon_ = horizon;
}

Tessellation run_mnw(const ConvexPolytope& window,
                     const HyperplaneMeasureSpec& spec, double horizon,
                     RngStream& rng) {
    if (horizon < 0) throw std::runtime_error("horizon must be >= 0");
    if (window.volume() <= 0)
        throw std::runtime_error("window must have interior points");
    Tessellation t;
    t.window_ = window;
    t.spec_ = spec;
    t.cells_.push_back(window);
    t.pending_.push({fresh_death(spec, window, 0.0, rng), 0});
    advance_to(t, horizon, rng);
    return t;
}

Tessellation continue_mnw(Tessellation state, double new_horizon,
                          RngStream& rng) {
    if (new_horizon < state.horizon_) throw std::runtime_error("time reversal");
    // redraw residual lifetimes: by memorylessness this leaves the law of
    // the concatenated run unchanged, and makes repeated continuations
    // from one frozen state conditionally independent given that state
    state.pending_ = {};
    for (size_t i = 0; i < state.cells_.size(); ++i)
        state.pending_.push({fresh_death(state.spec_, state.cells_[i],
                                         state.horizon_, rng),
                             static_cast<int>(i)});
    advance_to(state, new_horizon, rng);
    return state;
}

std::vector<Tessellation> run_with_checkpoints(
    const ConvexPolytope& window, const HyperplaneMeasureSpec& spec,
    const std::vector<double>& times, RngStream& rng) {
    for (size_t i = 0; i + 1 < times.size(); ++i)
        if (times[i] > times[i + 1])
            throw std::runtime_error("checkpoint times must be ascending");
    if (!times.empty() && times.front() < 0)
        throw std::runtime_error("checkpoint times must be >= 0");
    std::vector<Tessellation> snaps;
    if (times.empty()) return snaps;
    Tessellation t = run_mnw(window, spec, times[0], rng);
    snaps.push_back(t);
    for (size_t i = 1; i < times.size(); ++i) {
        advance_to(t, times[i], rng);
        snaps.push_back(t);
    }
    return snaps;
}

Tessellation rescale_tessellation(const Tessellation& state, double factor) {
    if (factor <= 0) throw std::runtime_error("scale factor must be positive");
    Tessellation t = state;
    t.window_ = t.window_.scaled(factor);
    for (auto& c : t.cells_) c = c.scaled(factor);
    for (auto& m : t.max_polytopes_) {
        m.facet = m.facet.scaled(factor);
        m.measure = m.facet.volume();
    }
    return t;
}

}  // namespace stit
