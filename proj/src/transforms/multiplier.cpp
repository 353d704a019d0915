// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "abwave/fft.hpp"
#include "abwave/simd.hpp"
#include "abwave/transforms.hpp"

namespace abwave::transforms {

// Frequencies follow the DFT layout: xi_k = 2 pi k / (n du) for k < n/2,
// wrapped to negative values beyond. The sign convention is pinned by the
// dilation test: the multiplier e^{i tau xi} must shift the log coordinate
// by +tau.

namespace {

LogRadialGrid fft_grid_for(const LogRadialGrid& g, int pad_factor) {
    if (pad_factor <= 1) return g;
    if ((pad_factor & (pad_factor - 1)) != 0)
        throw std::invalid_argument("multiplier: pad factor must be a power of two");
    const double extra = 0.5 * (pad_factor - 1) * (g.u_max - g.u_min);
    return LogRadialGrid(g.u_min - extra, g.u_max + extra, pad_factor * g.n);
}

} // namespace

MultiplierTable make_multiplier_table(const symbols::SpectralSymbol& s,
                                      const LogRadialGrid& g, int pad_factor) {
    const LogRadialGrid fg = fft_grid_for(g, pad_factor);
    MultiplierTable t{g, fg, std::vector<cplx>(fg.n)};
    const std::size_t n = fg.n;
    const double dxi = kTwoPi / (fg.du() * static_cast<double>(n));
    // one uniform ascending pass over xi, then reindex into DFT order
    const double x0 = -dxi * static_cast<double>(n / 2);
    auto vals = s.eval_uniform(x0, dxi, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = (k + n / 2) % n; // ascending index -> DFT index
        t.phi[idx] = vals[k];
    }
    return t;
}

MultiplierTable make_multiplier_table(const std::function<cplx(double)>& f,
                                      const LogRadialGrid& g, int pad_factor) {
    const LogRadialGrid fg = fft_grid_for(g, pad_factor);
    MultiplierTable t{g, fg, std::vector<cplx>(fg.n)};
    const std::size_t n = fg.n;
    const double dxi = kTwoPi / (fg.du() * static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const double xi = (k < n / 2) ? dxi * static_cast<double>(k)
                                      : dxi * (static_cast<double>(k) -
                                               static_cast<double>(n));
        t.phi[k] = f(xi);
    }
    return t;
}

RadialFunction apply_multiplier(const MultiplierTable& t,
                                const RadialFunction& g) {
    if (!(t.grid == g.grid))
        throw std::invalid_argument("apply_multiplier: grid mismatch");
    const LineFunction h = log_map(g);
    const std::size_t n = g.grid.n, nf = t.fft_grid.n;
    std::vector<cplx> buf(nf, cplx(0.0));
    const std::size_t off = (nf - n) / 2;
    for (std::size_t j = 0; j < n; ++j) buf[off + j] = h.values[j];
    fft_pow2(buf, false);
    simd::mul_cc(buf.data(), t.phi.data(), nf);
    fft_pow2(buf, true);
    LineFunction out(g.grid);
    for (std::size_t j = 0; j < n; ++j) out.values[j] = buf[off + j];
    return log_unmap(out);
}

RadialFunction apply_multiplier(const symbols::SpectralSymbol& s,
                                const RadialFunction& g) {
    return apply_multiplier(make_multiplier_table(s, g.grid), g);
}

} // namespace abwave::transforms
