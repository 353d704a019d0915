// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "abwave/common.hpp"

namespace abwave::transforms {

/// Uniform grid in u = ln r. Shared by all three operator routes; n is a
/// power of two so the multiplier route can go through the FFT directly.
struct LogRadialGrid {
    double u_min;
    double u_max;
    std::size_t n;

    LogRadialGrid(double umin, double umax, std::size_t count);

    double du() const { return (u_max - u_min) / static_cast<double>(n); }
    double u(std::size_t j) const { return u_min + j * du(); }
    double r(std::size_t j) const { return std::exp(u(j)); }

    bool operator==(const LogRadialGrid& o) const {
        return u_min == o.u_min && u_max == o.u_max && n == o.n;
    }
};

/// Complex samples of a channel function on a LogRadialGrid, square-integrable
/// against r dr.
struct RadialFunction {
    LogRadialGrid grid;
    std::vector<cplx> values;
    double support_lo = 0.0; // hint: |g| below threshold outside [lo, hi]
    double support_hi = 0.0;

    explicit RadialFunction(const LogRadialGrid& g)
        : grid(g), values(g.n, cplx(0.0)) {}

    double norm() const;
};

/// Samples on the same grid viewed as a line function of u, L^2(du).
struct LineFunction {
    LogRadialGrid grid;
    std::vector<cplx> values;

    explicit LineFunction(const LogRadialGrid& g)
        : grid(g), values(g.n, cplx(0.0)) {}

    double norm() const;
};

/// h(u) = e^u g(e^u); unitary from L^2(r dr) onto L^2(du), exact inverse.
LineFunction log_map(const RadialFunction& g);
RadialFunction log_unmap(const LineFunction& h);

/// <g, h> = sum conj(g) h r^2 du  (conjugation on the first argument).
cplx inner(const RadialFunction& a, const RadialFunction& b);

/// Gaussian bump in u: exp(-(u-u0)^2 / (2 sigma^2)) * exp(i xi0 u).
RadialFunction gaussian_bump(const LogRadialGrid& g, double u0, double sigma,
                             double xi0 = 0.0);

/// Radial interval outside which the function carries at most `tail_mass`
/// of its squared norm on each side.
struct SupportInterval {
    double r_lo;
    double r_hi;
};
SupportInterval effective_support(const RadialFunction& g,
                                  double tail_mass = 1e-18);

} // namespace abwave::transforms
