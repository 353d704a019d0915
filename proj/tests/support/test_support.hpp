// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include "abwave/grid.hpp"

namespace abwave::testing {

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline double rel_l2(const transforms::RadialFunction& a,
                     const transforms::RadialFunction& b, double ref) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.grid.n; ++j) {
        const double r = a.grid.r(j);
        s += std::norm(a.values[j] - b.values[j]) * r * r;
    }
    return std::sqrt(s * a.grid.du()) / ref;
}

/// Deterministic RNG for property sweeps.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed5u);
    return gen;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Least-squares slope of ln|f| sampled uniformly over [y0, y1].
template <typename F>
double log_slope(F&& f, double y0, double y1, int samples = 60) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < samples; ++i) {
        const double y = y0 + (y1 - y0) * i / (samples - 1.0);
        const double v = std::log(std::abs(f(y)));
        sx += y;
        sy += v;
        sxx += y * y;
        sxy += y * v;
    }
    return (samples * sxy - sx * sy) / (samples * sxx - sx * sx);
}

} // namespace abwave::testing
