// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <map>
#include <tuple>

#include "abwave/transforms.hpp"

// The wave operators on the radial channels, each by two independent routes:
// the stationary Hankel-integral form and the dilation-generator multiplier
// form, plus the two-channel assembly mixing the interior channels through an
// injected 2x2 scattering matrix.

namespace abwave::waveop {

using transforms::DampedInversionResult;
using transforms::LogRadialGrid;
using transforms::RadialFunction;

/// Channel scattering coefficient e^{2 i delta_m}.
cplx channel_scattering(ChannelIndex m, FluxParameter alpha);

/// Shared caches: kernel tables, built symbols and their multiplier tables.
class WaveWorkspace {
public:
    explicit WaveWorkspace(const LogRadialGrid& g, Cut cut = Cut::upper);

    transforms::TransformContext& ctx() { return tctx_; }
    const LogRadialGrid& grid() const { return tctx_.grid(); }
    Cut cut() const { return cut_; }

    const symbols::SpectralSymbol& phi(ChannelIndex m, FluxParameter alpha,
                                       Sign sign);
    const symbols::SpectralSymbol& tilde(ChannelIndex m, FluxParameter alpha);
    const transforms::MultiplierTable& phi_table(ChannelIndex m,
                                                 FluxParameter alpha, Sign sign);
    const transforms::MultiplierTable& tilde_table(ChannelIndex m,
                                                   FluxParameter alpha);

    symbols::SymbolBuildOptions symbol_options; // applies to symbols built here
    transforms::DamperOptions damper;

private:
    const symbols::SpectralSymbol& phi_base(ChannelIndex m, FluxParameter alpha);

    transforms::TransformContext tctx_;
    Cut cut_;
    std::mutex mtx_;
    std::map<std::tuple<int, double>, symbols::SpectralSymbol> phi_base_;
    std::map<std::tuple<int, double, int>, symbols::SpectralSymbol> phi_;
    std::map<std::tuple<int, double>, symbols::SpectralSymbol> tilde_;
    std::map<std::tuple<int, double>, transforms::MultiplierTable> phi_base_t_;
    std::map<std::tuple<int, double, int>, transforms::MultiplierTable> phi_t_;
    std::map<std::tuple<int, double>, transforms::MultiplierTable> tilde_t_;
};

/// Stationary route: order-|m+alpha| Bessel inversion of the channel Hankel
/// transform with phase e^{∓i delta}.
DampedInversionResult wave_ab_stationary(WaveWorkspace& ws, ChannelIndex m,
                                         FluxParameter alpha, Sign sign,
                                         const RadialFunction& g);

/// Multiplier route through the channel symbol.
RadialFunction wave_ab_spectral(WaveWorkspace& ws, ChannelIndex m,
                                FluxParameter alpha, Sign sign,
                                const RadialFunction& g);

/// Interior operator, stationary route (outgoing Hankel kernel), m in {0,-1}.
DampedInversionResult t_op_stationary(WaveWorkspace& ws, ChannelIndex m,
                                      FluxParameter alpha,
                                      const RadialFunction& g);

RadialFunction t_op_spectral(WaveWorkspace& ws, ChannelIndex m,
                             FluxParameter alpha, const RadialFunction& g);

/// Pair of interior channel functions (m = 0 and m = -1) on a shared grid.
struct TwoChannelFunction {
    RadialFunction f0;
    RadialFunction fm1;

    explicit TwoChannelFunction(const LogRadialGrid& g) : f0(g), fm1(g) {}
    TwoChannelFunction(RadialFunction a, RadialFunction b);

    double norm() const;
};

using Mat2 = std::array<cplx, 4>; // row-major [s00 s01; s10 s11]

/// 2x2 matrix-valued multiplication operator in the momentum variable.
struct SMatrixFunction {
    std::function<Mat2(double)> eval;
    bool declared_unitary = false;
};

SMatrixFunction constant_smatrix(const Mat2& m, bool unitary);
SMatrixFunction adjoint(const SMatrixFunction& s);

/// Krein-extension parameters; carried as inert metadata only.
struct ExtensionParameters {
    double eta;
    cplx a;
    cplx b;
    ExtensionParameters(double eta_, cplx a_, cplx b_);
};

/// F* S(kappa) F on the two interior channels; `offset`, when given, is a
/// constant matrix subtracted from S(kappa) inside the conjugation.
TwoChannelFunction apply_smatrix(WaveWorkspace& ws, const SMatrixFunction& s,
                                 const TwoChannelFunction& f,
                                 const Mat2* offset = nullptr);

/// Two-channel assembly: diag(phi^-) f + diag(phi~) F*[S - D_alpha]F f with
/// D_alpha = diag(e^{-i pi alpha}, e^{i pi alpha}).
TwoChannelFunction assemble_omega_minus(WaveWorkspace& ws, FluxParameter alpha,
                                        const SMatrixFunction& s,
                                        const TwoChannelFunction& f);

/// Omega_+ = Omega_- S*; requires a declared-unitary S.
TwoChannelFunction assemble_omega_plus(WaveWorkspace& ws, FluxParameter alpha,
                                       const SMatrixFunction& s,
                                       const TwoChannelFunction& f);

} // namespace abwave::waveop
