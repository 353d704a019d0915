// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "abwave/grid.hpp"
#include "abwave/symbols.hpp"

// Discrete transform stack on the log-radial grid. On that grid the product
// r*kappa depends only on the index sum, so every Hankel-type quadrature is a
// correlation against a kernel table sampled at the 2n-1 distinct products;
// the tables are cached per order. The direct O(n^2) correlation is the
// default; an FFT-based path with the same contract can be switched on and is
// equivalence-tested against it.

namespace abwave::transforms {

class TransformContext {
public:
    explicit TransformContext(const LogRadialGrid& g) : grid_(g) {}

    const LogRadialGrid& grid() const { return grid_; }

    /// J_nu at e^{2 u_min + k du}, k = 0..2n-2.
    std::shared_ptr<const std::vector<double>> bessel_table(double nu);

    /// H1_nu on the same product arguments.
    std::shared_ptr<const std::vector<cplx>> hankel1_table(double nu);

    /// Smooth bandwidth window applied to the kernel tables.
    double kernel_window(double t) const;

    bool use_fft_path = false;
    double bandwidth_fraction = 0.2; // window center as fraction of 2 pi / du
    double window_width = 16.0;      // erf roll-off width in t = kappa * r

private:
    LogRadialGrid grid_;
    std::mutex mtx_;
    std::map<double, std::shared_ptr<const std::vector<double>>> j_tables_;
    std::map<double, std::shared_ptr<const std::vector<cplx>>> h_tables_;
};

/// out[j] = sum_i table[i+j] w[i], table length 2n-1.
std::vector<cplx> correlate(const TransformContext& ctx,
                            const std::vector<double>& table,
                            const std::vector<cplx>& w, bool use_fft);
std::vector<cplx> correlate(const TransformContext& ctx,
                            const std::vector<cplx>& table,
                            const std::vector<cplx>& w, bool use_fft);

/// Channel Hankel transform of order |m| with phase (-i)^{|m|}; the inverse
/// flips the phase to i^{|m|}. Unitary on L^2(r dr) up to quadrature error.
RadialFunction hankel_transform(TransformContext& ctx, ChannelIndex m,
                                const RadialFunction& g, bool inverse = false);

enum class RadialKernel { bessel_j, hankel1 };

struct DampedInversionResult {
    RadialFunction f;
    bool truncated = false; // input did not decay at the grid ends
};

struct DamperOptions {
    // Abel damper pair e^{-eps kappa}; defaults tie eps to the grid so the
    // extrapolation residue scales like du^{5/2}.
    double eps_hi = -1.0; // <0: use 2 * eps_scale * du^{5/4}
    double eps_lo = -1.0; // <0: use eps_scale * du^{5/4}
    double eps_scale = 0.25;
    // Low-kappa power of G: when 0 (a channel with nonvanishing G(0)), the
    // integral piece below the grid is added analytically from the kernel
    // series; for positive powers it is negligible.
    int low_kappa_power = -1;
    void resolve(double du);
};

/// r -> prefactor * int kappa K_order(kappa r) G(kappa) dkappa with the
/// damped, linearly-extrapolated quadrature.
DampedInversionResult generalized_inverse_hankel(
    TransformContext& ctx, double order, cplx prefactor, RadialKernel kind,
    const RadialFunction& big_g, DamperOptions opts = {});

/// Multiplier table aligned with the FFT layout. With a pad factor > 1 the
/// FFT runs on an enlarged grid with the physical samples embedded mid-span: the
/// circular wrap of slowly-decaying operator tails is pushed out at the cost
/// of exact discrete norm preservation (the cropped tail mass is lost), so
/// the padded form is used for the non-unitary interior symbols only.
struct MultiplierTable {
    LogRadialGrid grid;     // physical grid
    LogRadialGrid fft_grid; // equals grid, or the doubled padded grid
    std::vector<cplx> phi;  // phi(xi_k), k in DFT index order on fft_grid
};

MultiplierTable make_multiplier_table(const symbols::SpectralSymbol& s,
                                      const LogRadialGrid& g,
                                      int pad_factor = 1);
MultiplierTable make_multiplier_table(const std::function<cplx(double)>& f,
                                      const LogRadialGrid& g,
                                      int pad_factor = 1);

/// Functional calculus of the dilation generator: conjugate the pointwise
/// multiplier by the log map and the FFT.
RadialFunction apply_multiplier(const MultiplierTable& t,
                                const RadialFunction& g);
RadialFunction apply_multiplier(const symbols::SpectralSymbol& s,
                                const RadialFunction& g);

/// Kernel-side realization of the same operator: delta coefficient,
/// principal-value coefficient against 1/sinh, and a regular part convolved
/// in the log variable.
struct MellinParts {
    cplx c_delta = 0.0;
    cplx c_pv = 0.0;
    std::function<cplx(double)> regular; // kernel in y; may be empty
    double tail_rate = 1.0;              // decay rate bound of |regular|
};

RadialFunction mellin_convolve(const MellinParts& parts,
                               const RadialFunction& g);

} // namespace abwave::transforms
