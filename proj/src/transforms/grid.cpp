// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "abwave/grid.hpp"

namespace abwave::transforms {

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace

LogRadialGrid::LogRadialGrid(double umin, double umax, std::size_t count)
    : u_min(umin), u_max(umax), n(count) {
    if (!(umin < umax)) throw std::domain_error("LogRadialGrid: u_min < u_max required");
    if (n < 16 || !power_of_two(n))
        throw std::domain_error("LogRadialGrid: n must be a power of two >= 16");
}

double RadialFunction::norm() const {
    const double d = grid.du();
    double s = 0.0;
    for (std::size_t j = 0; j < grid.n; ++j) {
        const double r = grid.r(j);
        s += std::norm(values[j]) * r * r;
    }
    return std::sqrt(s * d);
}

double LineFunction::norm() const {
    double s = 0.0;
    for (const cplx& v : values) s += std::norm(v);
    return std::sqrt(s * grid.du());
}

LineFunction log_map(const RadialFunction& g) {
    LineFunction h(g.grid);
    for (std::size_t j = 0; j < g.grid.n; ++j)
        h.values[j] = g.values[j] * g.grid.r(j);
    return h;
}

RadialFunction log_unmap(const LineFunction& h) {
    RadialFunction g(h.grid);
    for (std::size_t j = 0; j < h.grid.n; ++j)
        g.values[j] = h.values[j] / h.grid.r(j);
    return g;
}

cplx inner(const RadialFunction& a, const RadialFunction& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("inner: grid mismatch");
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.grid.n; ++j) {
        const double r = a.grid.r(j);
        s += std::conj(a.values[j]) * b.values[j] * (r * r);
    }
    return s * a.grid.du();
}

SupportInterval effective_support(const RadialFunction& g, double tail_mass) {
    const std::size_t n = g.grid.n;
    std::vector<double> mass(n);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double r = g.grid.r(j);
        mass[j] = std::norm(g.values[j]) * r * r;
        total += mass[j];
    }
    if (total <= 0.0) return {g.grid.r(0), g.grid.r(n - 1)};
    const double edge = tail_mass * total;
    std::size_t lo = 0, hi = n - 1;
    double acc = 0.0;
    for (; lo + 1 < n && acc + mass[lo] <= edge; ++lo) acc += mass[lo];
    acc = 0.0;
    for (; hi > 0 && acc + mass[hi] <= edge; --hi) acc += mass[hi];
    return {g.grid.r(lo), g.grid.r(hi)};
}

RadialFunction gaussian_bump(const LogRadialGrid& g, double u0, double sigma,
                             double xi0) {
    if (!(sigma > 0.0)) throw std::domain_error("gaussian_bump: sigma > 0");
    RadialFunction f(g);
    for (std::size_t j = 0; j < g.n; ++j) {
        const double t = (g.u(j) - u0) / sigma;
        const double env = std::exp(-0.5 * t * t);
        f.values[j] = env * std::polar(1.0, xi0 * g.u(j));
    }
    // support hint at the 1e-14 envelope level
    const double half = sigma * std::sqrt(2.0 * std::log(1e14));
    f.support_lo = std::exp(u0 - half);
    f.support_hi = std::exp(u0 + half);
    return f;
}

} // namespace abwave::transforms
