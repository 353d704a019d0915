// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "abwave/common.hpp"

// Spectral symbols of the channel operators as functions of the dilation
// generator. Each symbol is a closed elementary part (constant + tanh) plus
// the Fourier transform of an L^1 kernel with a logarithmic singularity at
// the origin and exponential tails. The transform is realized once as a
// fixed quadrature node set (tanh-sinh near the singularity, oscillation-
// aware Gauss-Legendre panels on the tails); evaluations are sums over the
// cached nodes, with a phasor-recurrence fast path on uniform grids.

namespace abwave::symbols {

/// Channel phase: pi(|m| - |m+alpha|)/2 = -pi alpha/2 for m >= 0, else +pi alpha/2.
double delta_phase(ChannelIndex m, FluxParameter alpha);

/// Position-side kernel of the free-flux symbol correction (y != 0).
cplx phi_check3(ChannelIndex m, FluxParameter alpha, Sign sign, double y);

/// Kernel of the interior-operator symbol correction; only m in {0,-1} is
/// integrable. The y < 0 branch goes through the continued hypergeometric.
cplx phi_tilde_check3(ChannelIndex m, FluxParameter alpha, double y,
                      Cut cut = Cut::upper);

struct SymbolBuildOptions {
    double x_resolve = 600.0; // largest |x| the node set must resolve
    double tail_eps = 1e-14;  // kernel magnitude cutoff for the tails
    int ts_level_min = 8;
    int gl_points = 20;
    double panel_phase = 40.0; // max x_resolve * panel_width on the tails
};

class SpectralSymbol {
public:
    cplx eval(double x) const;

    /// Values at x0 + k dx for k = 0..count-1 (phasor recurrence).
    std::vector<cplx> eval_uniform(double x0, double dx,
                                   std::size_t count) const;

    /// The Fourier-transform correction alone, without the closed part.
    cplx eval_correction(double x) const;

    cplx limit_minus_inf() const { return lim_minus_; }
    cplx limit_plus_inf() const { return lim_plus_; }
    double sup_bound() const { return sup_bound_; }
    double x_resolve() const { return x_resolve_; }

    struct Side {
        std::vector<double> y;  // node ordinates (positive)
        std::vector<cplx> wrho; // quadrature weight * kernel * (2pi)^{-1/2}
    };

    cplx c0;     // closed part: c0 + c_tanh * tanh(pi x / 2)
    cplx c_tanh;
    Side pos;    // integral over y > 0, phase e^{-i x y}
    Side neg;    // integral over y < 0 (ordinates store |y|), phase e^{+i x y}

    void set_limits(cplx lm, cplx lp) { lim_minus_ = lm; lim_plus_ = lp; }
    void set_sup_bound(double s) { sup_bound_ = s; }
    void set_x_resolve(double x) { x_resolve_ = x; }

private:
    cplx lim_minus_ = 0.0, lim_plus_ = 0.0;
    double sup_bound_ = 0.0;
    double x_resolve_ = 0.0;
};

/// Sign-free core of the channel wave-operator symbol: both signs are
/// unimodular rotations of it, phi_± = e^{∓i delta} W.
SpectralSymbol phi_ab_base(ChannelIndex m, FluxParameter alpha,
                           const SymbolBuildOptions& opts = {});

/// Rotate the base symbol into the signed channel symbol.
SpectralSymbol phi_ab_from_base(const SpectralSymbol& base, ChannelIndex m,
                                FluxParameter alpha, Sign sign);

/// Symbol of the channel wave operator.
SpectralSymbol phi_ab(ChannelIndex m, FluxParameter alpha, Sign sign,
                      const SymbolBuildOptions& opts = {});

/// Symbol of the interior operator T_m, m in {0,-1}; limits 0 and 1.
SpectralSymbol phi_tilde(ChannelIndex m, FluxParameter alpha,
                         Cut cut = Cut::upper,
                         const SymbolBuildOptions& opts = {});

namespace detail {
/// Quadrature covering (0, y_end] able to resolve e^{i x y} up to x_resolve.
struct FourierSideNodes {
    std::vector<double> y;
    std::vector<double> w;
};
FourierSideNodes build_side(const SymbolBuildOptions& opts,
                            const std::function<double(double)>& magnitude,
                            double rate_hint);
} // namespace detail

} // namespace abwave::symbols
