// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "abwave/waveop.hpp"

namespace abwave::waveop {

using symbols::delta_phase;
using transforms::RadialKernel;

cplx channel_scattering(ChannelIndex m, FluxParameter alpha) {
    return std::polar(1.0, 2.0 * delta_phase(m, alpha));
}

WaveWorkspace::WaveWorkspace(const LogRadialGrid& g, Cut cut)
    : tctx_(g), cut_(cut) {
    // resolve symbols across the full multiplier frequency range
    symbol_options.x_resolve = kPi / g.du();
}

const symbols::SpectralSymbol& WaveWorkspace::phi_base(ChannelIndex m,
                                                       FluxParameter alpha) {
    std::lock_guard<std::mutex> lock(mtx_);
    const auto key = std::make_tuple(m.m, alpha.alpha);
    auto it = phi_base_.find(key);
    if (it == phi_base_.end())
        it = phi_base_
                 .emplace(key, symbols::phi_ab_base(m, alpha, symbol_options))
                 .first;
    return it->second;
}

const symbols::SpectralSymbol& WaveWorkspace::phi(ChannelIndex m,
                                                  FluxParameter alpha,
                                                  Sign sign) {
    const auto& base = phi_base(m, alpha);
    std::lock_guard<std::mutex> lock(mtx_);
    const auto key = std::make_tuple(m.m, alpha.alpha, sign == Sign::plus);
    auto it = phi_.find(key);
    if (it == phi_.end())
        it = phi_.emplace(key,
                          symbols::phi_ab_from_base(base, m, alpha, sign))
                 .first;
    return it->second;
}

const symbols::SpectralSymbol& WaveWorkspace::tilde(ChannelIndex m,
                                                    FluxParameter alpha) {
    std::lock_guard<std::mutex> lock(mtx_);
    const auto key = std::make_tuple(m.m, alpha.alpha);
    auto it = tilde_.find(key);
    if (it == tilde_.end())
        it = tilde_
                 .emplace(key,
                          symbols::phi_tilde(m, alpha, cut_, symbol_options))
                 .first;
    return it->second;
}

const transforms::MultiplierTable& WaveWorkspace::phi_table(ChannelIndex m,
                                                            FluxParameter alpha,
                                                            Sign sign) {
    const auto& base = phi_base(m, alpha);
    std::lock_guard<std::mutex> lock(mtx_);
    const auto key = std::make_tuple(m.m, alpha.alpha, sign == Sign::plus);
    auto it = phi_t_.find(key);
    if (it == phi_t_.end()) {
        const auto bkey = std::make_tuple(m.m, alpha.alpha);
        auto bit = phi_base_t_.find(bkey);
        if (bit == phi_base_t_.end())
            bit = phi_base_t_
                      .emplace(bkey, transforms::make_multiplier_table(
                                         base, grid(), 2))
                      .first;
        const double d = delta_phase(m, alpha);
        const cplx phase = std::polar(1.0, sign == Sign::plus ? -d : d);
        transforms::MultiplierTable t = bit->second;
        for (auto& v : t.phi) v *= phase;
        it = phi_t_.emplace(key, std::move(t)).first;
    }
    return it->second;
}

const transforms::MultiplierTable& WaveWorkspace::tilde_table(
    ChannelIndex m, FluxParameter alpha) {
    const auto& sym = tilde(m, alpha);
    std::lock_guard<std::mutex> lock(mtx_);
    const auto key = std::make_tuple(m.m, alpha.alpha);
    auto it = tilde_t_.find(key);
    if (it == tilde_t_.end())
        it = tilde_t_
                 .emplace(key,
                          transforms::make_multiplier_table(sym, grid(), 4))
                 .first;
    return it->second;
}

namespace {

cplx i_power_int(unsigned k) {
    switch (k % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

} // namespace

DampedInversionResult wave_ab_stationary(WaveWorkspace& ws, ChannelIndex m,
                                         FluxParameter alpha, Sign sign,
                                         const RadialFunction& g) {
    const double d = delta_phase(m, alpha);
    const double order = std::abs(static_cast<double>(m.m) + alpha.alpha);
    const cplx pref = i_power_int(static_cast<unsigned>(std::abs(m.m))) *
                      std::polar(1.0, sign == Sign::plus ? -d : d);
    RadialFunction big_g = transforms::hankel_transform(ws.ctx(), m, g);
    transforms::DamperOptions opts = ws.damper;
    opts.low_kappa_power = std::abs(m.m);
    return transforms::generalized_inverse_hankel(
        ws.ctx(), order, pref, RadialKernel::bessel_j, big_g, opts);
}

RadialFunction wave_ab_spectral(WaveWorkspace& ws, ChannelIndex m,
                                FluxParameter alpha, Sign sign,
                                const RadialFunction& g) {
    return transforms::apply_multiplier(ws.phi_table(m, alpha, sign), g);
}

DampedInversionResult t_op_stationary(WaveWorkspace& ws, ChannelIndex m,
                                      FluxParameter alpha,
                                      const RadialFunction& g) {
    if (m.m != 0 && m.m != -1)
        throw std::domain_error("t_op_stationary: unsupported channel");
    const double order = std::abs(static_cast<double>(m.m) + alpha.alpha);
    const cplx pref = 0.5 * std::polar(1.0, 0.5 * kPi * order); // i^order / 2
    RadialFunction big_g = transforms::hankel_transform(ws.ctx(), m, g);
    transforms::DamperOptions opts = ws.damper;
    opts.low_kappa_power = std::abs(m.m);
    return transforms::generalized_inverse_hankel(
        ws.ctx(), order, pref, RadialKernel::hankel1, big_g, opts);
}

RadialFunction t_op_spectral(WaveWorkspace& ws, ChannelIndex m,
                             FluxParameter alpha, const RadialFunction& g) {
    if (m.m != 0 && m.m != -1)
        throw std::domain_error("t_op_spectral: unsupported channel");
    return transforms::apply_multiplier(ws.tilde_table(m, alpha), g);
}

TwoChannelFunction::TwoChannelFunction(RadialFunction a, RadialFunction b)
    : f0(std::move(a)), fm1(std::move(b)) {
    if (!(f0.grid == fm1.grid))
        throw std::invalid_argument("TwoChannelFunction: grid mismatch");
}

double TwoChannelFunction::norm() const {
    const double n0 = f0.norm(), n1 = fm1.norm();
    return std::sqrt(n0 * n0 + n1 * n1);
}

SMatrixFunction constant_smatrix(const Mat2& m, bool unitary) {
    return {[m](double) { return m; }, unitary};
}

SMatrixFunction adjoint(const SMatrixFunction& s) {
    auto e = s.eval;
    return {[e](double k) {
                const Mat2 m = e(k);
                return Mat2{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
                            std::conj(m[3])};
            },
            s.declared_unitary};
}

ExtensionParameters::ExtensionParameters(double eta_, cplx a_, cplx b_)
    : eta(eta_), a(a_), b(b_) {
    const double s = std::norm(a) + std::norm(b);
    if (std::abs(s - 1.0) > 1e-12)
        throw std::domain_error(
            "ExtensionParameters: |a|^2 + |b|^2 must equal 1");
}

namespace {

void check_unitary_sampled(const SMatrixFunction& s, const LogRadialGrid& g) {
    for (std::size_t j = 0; j < g.n; j += g.n / 16) {
        const Mat2 m = s.eval(g.r(j));
        // rows of m m* minus identity
        const cplx e00 = m[0] * std::conj(m[0]) + m[1] * std::conj(m[1]) - 1.0;
        const cplx e01 = m[0] * std::conj(m[2]) + m[1] * std::conj(m[3]);
        const cplx e11 = m[2] * std::conj(m[2]) + m[3] * std::conj(m[3]) - 1.0;
        if (std::abs(e00) > 1e-10 || std::abs(e01) > 1e-10 ||
            std::abs(e11) > 1e-10)
            throw std::invalid_argument(
                "smatrix: declared unitary but S S* != I on sampled kappa");
    }
}

} // namespace

TwoChannelFunction apply_smatrix(WaveWorkspace& ws, const SMatrixFunction& s,
                                 const TwoChannelFunction& f,
                                 const Mat2* offset) {
    if (s.declared_unitary) check_unitary_sampled(s, ws.grid());
    auto g0 = transforms::hankel_transform(ws.ctx(), ChannelIndex(0), f.f0);
    auto g1 = transforms::hankel_transform(ws.ctx(), ChannelIndex(-1), f.fm1);
    RadialFunction h0(ws.grid()), h1(ws.grid());
    for (std::size_t j = 0; j < ws.grid().n; ++j) {
        Mat2 m = s.eval(ws.grid().r(j));
        if (offset) {
            m[0] -= (*offset)[0];
            m[1] -= (*offset)[1];
            m[2] -= (*offset)[2];
            m[3] -= (*offset)[3];
        }
        if (!std::isfinite(m[0].real()) || !std::isfinite(m[0].imag()) ||
            !std::isfinite(m[1].real()) || !std::isfinite(m[1].imag()) ||
            !std::isfinite(m[2].real()) || !std::isfinite(m[2].imag()) ||
            !std::isfinite(m[3].real()) || !std::isfinite(m[3].imag()))
            throw std::domain_error("apply_smatrix: non-finite matrix entry");
        h0.values[j] = m[0] * g0.values[j] + m[1] * g1.values[j];
        h1.values[j] = m[2] * g0.values[j] + m[3] * g1.values[j];
    }
    return {transforms::hankel_transform(ws.ctx(), ChannelIndex(0), h0, true),
            transforms::hankel_transform(ws.ctx(), ChannelIndex(-1), h1, true)};
}

TwoChannelFunction assemble_omega_minus(WaveWorkspace& ws, FluxParameter alpha,
                                        const SMatrixFunction& s,
                                        const TwoChannelFunction& f) {
    const Mat2 d_alpha{std::polar(1.0, -kPi * alpha.alpha), 0.0, 0.0,
                       std::polar(1.0, kPi * alpha.alpha)};
    TwoChannelFunction bracket = apply_smatrix(ws, s, f, &d_alpha);
    RadialFunction t0 = transforms::apply_multiplier(
        ws.tilde_table(ChannelIndex(0), alpha), bracket.f0);
    RadialFunction t1 = transforms::apply_multiplier(
        ws.tilde_table(ChannelIndex(-1), alpha), bracket.fm1);
    RadialFunction p0 = transforms::apply_multiplier(
        ws.phi_table(ChannelIndex(0), alpha, Sign::minus), f.f0);
    RadialFunction p1 = transforms::apply_multiplier(
        ws.phi_table(ChannelIndex(-1), alpha, Sign::minus), f.fm1);
    TwoChannelFunction out(ws.grid());
    for (std::size_t j = 0; j < ws.grid().n; ++j) {
        out.f0.values[j] = p0.values[j] + t0.values[j];
        out.fm1.values[j] = p1.values[j] + t1.values[j];
    }
    return out;
}

TwoChannelFunction assemble_omega_plus(WaveWorkspace& ws, FluxParameter alpha,
                                       const SMatrixFunction& s,
                                       const TwoChannelFunction& f) {
    if (!s.declared_unitary)
        throw std::invalid_argument(
            "assemble_omega_plus: requires a declared-unitary S");
    check_unitary_sampled(s, ws.grid());
    TwoChannelFunction fprime = apply_smatrix(ws, adjoint(s), f);
    return assemble_omega_minus(ws, alpha, s, fprime);
}

} // namespace abwave::waveop
