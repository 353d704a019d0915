// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "abwave/quadrature.hpp"
#include "abwave/simd.hpp"
#include "abwave/transforms.hpp"

namespace abwave::transforms {

namespace {

// Principal-value convolution against 1/sinh in the log coordinate:
// symmetric pair sum plus the half-weight endpoint term of the paired
// integrand, whose y->0 limit is -2 h'(u) (4th-order centered difference).
std::vector<cplx> pv_convolve(const std::vector<cplx>& h, double du) {
    const std::size_t n = h.size();
    const std::size_t reach =
        static_cast<std::size_t>(std::ceil(40.0 / du)) + 2;
    std::vector<cplx> hp(n + 2 * reach, cplx(0.0));
    std::copy(h.begin(), h.end(), hp.begin() + reach);

    std::vector<cplx> out(n, cplx(0.0));
    for (std::size_t j = 1; j <= reach - 2; ++j) {
        const double w = du / std::sinh(j * du);
        if (w < 1e-18 && j * du > 8.0) break;
        simd::axpy_diff(out.data(), hp.data() + reach - j, hp.data() + reach + j,
                        w, n);
    }
    // endpoint term (du/2) * G(0), G(0) = -2 h'
    for (std::size_t i = 0; i < n; ++i) {
        const cplx d1 = hp[reach + i + 1] - hp[reach + i - 1];
        const cplx d2 = hp[reach + i + 2] - hp[reach + i - 2];
        out[i] -= (8.0 * d1 - d2) / 12.0;
    }
    return out;
}

struct PanelMoments {
    std::vector<cplx> m0, m1, m2; // index j + reach
    std::size_t reach = 0;
};

// Cell moments int rho(j du + t) t^p dt over each panel; the singular panel
// at j = 0 is integrated by tanh-sinh on each half.
PanelMoments regular_moments(const MellinParts& parts, double du,
                             std::size_t max_reach) {
    PanelMoments pm;
    const auto& rho = parts.regular;
    // probe the kernel extent
    std::size_t reach = max_reach;
    {
        int below = 0;
        for (std::size_t j = 1; j < max_reach; ++j) {
            const double y = j * du;
            const double mag =
                std::max(std::abs(rho(y)), std::abs(rho(-y)));
            if (mag < 1e-16 && y > 5.0) {
                if (++below > 30) {
                    reach = j;
                    break;
                }
            } else {
                below = 0;
            }
        }
    }
    pm.reach = reach;
    pm.m0.assign(2 * reach + 1, cplx(0.0));
    pm.m1.assign(2 * reach + 1, cplx(0.0));
    pm.m2.assign(2 * reach + 1, cplx(0.0));

    const quad::Rule& gl = quad::gauss_legendre(8);
    const double half = 0.5 * du;
    for (std::ptrdiff_t j = -static_cast<std::ptrdiff_t>(reach);
         j <= static_cast<std::ptrdiff_t>(reach); ++j) {
        const std::size_t idx = j + reach;
        if (j == 0) continue;
        const double yc = j * du;
        cplx m0 = 0.0, m1 = 0.0, m2 = 0.0;
        for (std::size_t q = 0; q < gl.x.size(); ++q) {
            const double t = half * gl.x[q];
            const cplx v = rho(yc + t) * (half * gl.w[q]);
            m0 += v;
            m1 += v * t;
            m2 += v * t * t;
        }
        pm.m0[idx] = m0;
        pm.m1[idx] = m1;
        pm.m2[idx] = m2;
    }
    // singular panel
    const quad::Rule ts = quad::tanh_sinh_unit(6);
    cplx m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t q = 0; q < ts.x.size(); ++q) {
        const double t = half * ts.x[q];
        const double w = half * ts.w[q];
        const cplx vp = rho(t) * w;
        const cplx vn = rho(-t) * w;
        m0 += vp + vn;
        m1 += (vp - vn) * t;
        m2 += (vp + vn) * t * t;
    }
    pm.m0[reach] = m0;
    pm.m1[reach] = m1;
    pm.m2[reach] = m2;
    return pm;
}

// Product-integration convolution: on each cell the line function is replaced
// by its local quadratic, integrated exactly against the cell moments.
std::vector<cplx> regular_convolve(const MellinParts& parts,
                                   const std::vector<cplx>& h, double du) {
    const std::size_t n = h.size();
    const std::size_t max_reach = static_cast<std::size_t>(
        std::ceil(45.0 / (std::max(parts.tail_rate, 0.05) * du)));
    PanelMoments pm = regular_moments(parts, du, max_reach);
    const std::size_t reach = pm.reach;
    const std::size_t taps = 2 * reach + 1;

    std::vector<cplx> hp(n + 2 * reach + 4, cplx(0.0));
    std::copy(h.begin(), h.end(), hp.begin() + reach + 2);
    std::vector<cplx> d1(n + 2 * reach, cplx(0.0));
    std::vector<cplx> d2(n + 2 * reach, cplx(0.0));
    for (std::size_t i = 0; i < n + 2 * reach; ++i) {
        d1[i] = (hp[i + 3] - hp[i + 1]) / (2.0 * du);
        d2[i] = (hp[i + 3] - 2.0 * hp[i + 2] + hp[i + 1]) / (du * du);
    }

    // reversed tap arrays for the sliding dot products
    std::vector<cplx> k0(taps), k1(taps), k2(taps);
    for (std::size_t t = 0; t < taps; ++t) {
        k0[t] = pm.m0[taps - 1 - t];
        k1[t] = -pm.m1[taps - 1 - t];
        k2[t] = 0.5 * pm.m2[taps - 1 - t];
    }

    std::vector<cplx> out(n);
    const cplx* hbase = hp.data() + 2;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = simd::dot_cc(k0.data(), hbase + i, taps) +
                 simd::dot_cc(k1.data(), d1.data() + i, taps) +
                 simd::dot_cc(k2.data(), d2.data() + i, taps);
    }
    return out;
}

} // namespace

RadialFunction mellin_convolve(const MellinParts& parts,
                               const RadialFunction& g) {
    const LineFunction h = log_map(g);
    const double du = g.grid.du();
    const std::size_t n = g.grid.n;

    std::vector<cplx> acc(n, cplx(0.0));
    if (parts.c_pv != cplx(0.0)) {
        auto pv = pv_convolve(h.values, du);
        for (std::size_t i = 0; i < n; ++i)
            acc[i] += kInvSqrtTwoPi * parts.c_pv * pv[i];
    }
    if (parts.regular) {
        auto reg = regular_convolve(parts, h.values, du);
        for (std::size_t i = 0; i < n; ++i) acc[i] += kInvSqrtTwoPi * reg[i];
    }
    LineFunction res(g.grid);
    for (std::size_t i = 0; i < n; ++i)
        res.values[i] = parts.c_delta * h.values[i] + acc[i];
    return log_unmap(res);
}

} // namespace abwave::transforms
