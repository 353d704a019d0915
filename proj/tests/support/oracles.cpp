// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include "abwave/quadrature.hpp"
#include "abwave/specfun.hpp"
#include "oracles.hpp"

namespace abwave::testing {

namespace {

// inner integral int w(s) K_mu(s k) ds over the bump support
cplx inner_bump_integral(PairKernel kind, double mu, const Mollifier& w,
                         double k) {
    const int panels =
        8 + static_cast<int>(std::ceil((w.b - w.a) * (k + 4.0) / 20.0));
    return quad::integrate_gl(
        [&](double s) -> cplx {
            const double x = s * k;
            if (kind == PairKernel::jj) return w(s) * specfun::bessel_j(mu, x);
            return w(s) * specfun::hankel1(mu, x);
        },
        w.a, w.b, panels, 12);
}

} // namespace

cplx oscillatory_pairing(PairKernel kind, double mu, double nu,
                         const Mollifier& w, double eps_hi, double eps_lo,
                         double k_max) {
    // fixed outer panels; the inner integral is shared between dampers
    struct Node {
        double k, gw; // node and Gauss weight
        cplx f;       // k J_nu(k) * inner(k)
    };
    std::vector<Node> nodes;
    const quad::Rule& gl = quad::gauss_legendre(16);
    double k0 = 0.0;
    while (k0 < k_max) {
        const double width = k0 < 20.0 ? 0.25 : (k0 < 200.0 ? 0.5 : 2.0);
        const double k1 = std::min(k0 + width, k_max);
        for (std::size_t q = 0; q < gl.x.size(); ++q) {
            Node nd;
            nd.k = 0.5 * (k0 + k1) + 0.5 * (k1 - k0) * gl.x[q];
            nd.gw = 0.5 * (k1 - k0) * gl.w[q];
            nd.f = nd.k * specfun::bessel_j(nu, nd.k) *
                   inner_bump_integral(kind, mu, w, nd.k);
            nodes.push_back(nd);
        }
        k0 = k1;
    }
    cplx r_hi = 0.0, r_lo = 0.0;
    for (const Node& nd : nodes) {
        r_hi += nd.gw * nd.f * std::exp(-eps_hi * nd.k);
        r_lo += nd.gw * nd.f * std::exp(-eps_lo * nd.k);
    }
    return (eps_hi * r_lo - eps_lo * r_hi) / (eps_hi - eps_lo);
}

cplx fourier_side_oracle(const std::function<cplx(double)>& f, double x,
                         double y_end, int ppw) {
    cplx sum = 0.0;
    // dyadic panels into the origin handle the logarithmic singularity
    double hi = std::min(1.0, y_end);
    const quad::Rule& gl = quad::gauss_legendre(16);
    auto add_panel = [&](double a, double b) {
        const double osc = std::abs(x) * (b - a) / kTwoPi;
        const int sub = 1 + static_cast<int>(std::ceil(osc * ppw / 16.0));
        for (int p = 0; p < sub; ++p) {
            const double pa = a + (b - a) * p / sub;
            const double pb = a + (b - a) * (p + 1) / sub;
            for (std::size_t q = 0; q < gl.x.size(); ++q) {
                const double y = 0.5 * (pa + pb) + 0.5 * (pb - pa) * gl.x[q];
                sum += 0.5 * (pb - pa) * gl.w[q] * f(y) *
                       std::polar(1.0, -x * y);
            }
        }
    };
    double lo = hi;
    for (int d = 0; d < 44; ++d) {
        lo = hi * std::pow(0.5, d + 1);
        add_panel(lo, hi * std::pow(0.5, d));
    }
    for (double a = std::min(1.0, y_end); a < y_end;) {
        const double b = std::min(a + 0.5, y_end);
        add_panel(a, b);
        a = b;
    }
    return sum;
}

} // namespace abwave::testing
