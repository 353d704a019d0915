// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <map>
#include <mutex>

#include "abwave/quadrature.hpp"

namespace abwave::quad {

namespace {

Rule compute_gl(int n) {
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
}

} // namespace

const Rule& gauss_legendre(int points) {
    static std::map<int, Rule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(points);
    if (it == cache.end()) it = cache.emplace(points, compute_gl(points)).first;
    return it->second;
}

Rule tanh_sinh_unit(int level, double t_max) {
    const double h = std::ldexp(1.0, -level);
    Rule r;
    const int kmax = static_cast<int>(std::floor(t_max / h));
    r.x.reserve(2 * kmax + 1);
    r.w.reserve(2 * kmax + 1);
    for (int k = -kmax; k <= kmax; ++k) {
        const double t = k * h;
        const double u = 0.5 * kPi * std::sinh(t);
        const double y = 0.5 * (1.0 + std::tanh(u));
        const double ch = std::cosh(u);
        const double dy = 0.25 * kPi * std::cosh(t) / (ch * ch);
        if (!(dy > 0.0) || y <= 0.0 || y >= 1.0) continue;
        r.x.push_back(y);
        r.w.push_back(h * dy);
    }
    return r;
}

cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                  int panels, int points) {
    const Rule& r = gauss_legendre(points);
    const double pw = (b - a) / panels;
    cplx sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * pw;
        cplx local = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i)
            local += r.w[i] * f(mid + 0.5 * pw * r.x[i]);
        sum += 0.5 * pw * local;
    }
    return sum;
}

double integrate_gl_real(const std::function<double(double)>& f, double a,
                         double b, int panels, int points) {
    const Rule& r = gauss_legendre(points);
    const double pw = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * pw;
        double local = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i)
            local += r.w[i] * f(mid + 0.5 * pw * r.x[i]);
        sum += 0.5 * pw * local;
    }
    return sum;
}

} // namespace abwave::quad
