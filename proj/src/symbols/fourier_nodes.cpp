// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <functional>

#include "abwave/quadrature.hpp"
#include "abwave/symbols.hpp"

namespace abwave::symbols::detail {

// The node set must integrate rho(y) e^{-ixy} for every |x| <= x_resolve:
// tanh-sinh on (0,1] with step fine enough for ~10 points per wavelength at
// the worst spot (max dy/dt = pi/4 at t = 0), Gauss-Legendre panels beyond
// with the per-panel phase x_resolve * width bounded.
FourierSideNodes build_side(const SymbolBuildOptions& opts,
                            const std::function<double(double)>& magnitude,
                            double rate_hint) {
    FourierSideNodes out;
    const double xr = std::max(opts.x_resolve, 40.0);
    const int level = std::max(
        opts.ts_level_min,
        static_cast<int>(std::ceil(std::log2(xr * 10.0 / 8.0))));
    quad::Rule ts = quad::tanh_sinh_unit(level);
    out.y = std::move(ts.x);
    out.w = std::move(ts.w);

    // tails: stop after the kernel magnitude stays below tail_eps
    const double width = std::min(0.5, opts.panel_phase / xr);
    const quad::Rule& gl = quad::gauss_legendre(opts.gl_points);
    double y0 = 1.0;
    int below = 0;
    const double hard_cap =
        1.0 + std::max(60.0, 40.0 / std::max(rate_hint, 0.05));
    while (y0 < hard_cap) {
        const double y1 = y0 + width;
        for (std::size_t i = 0; i < gl.x.size(); ++i) {
            out.y.push_back(0.5 * (y0 + y1) + 0.5 * width * gl.x[i]);
            out.w.push_back(0.5 * width * gl.w[i]);
        }
        if (magnitude(y1) < opts.tail_eps && y1 > 8.0) {
            if (++below >= 3) break;
        } else {
            below = 0;
        }
        y0 = y1;
    }
    return out;
}

} // namespace abwave::symbols::detail
