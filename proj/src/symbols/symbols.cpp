// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "abwave/kernels.hpp"
#include "abwave/simd.hpp"
#include "abwave/specfun.hpp"
#include "abwave/symbols.hpp"

namespace abwave::symbols {

using kernels::scaled_f_bracket;

double delta_phase(ChannelIndex m, FluxParameter alpha) {
    return (m.m >= 0) ? -0.5 * kPi * alpha.alpha : 0.5 * kPi * alpha.alpha;
}

namespace {

double p_factor(double lead, double other) {
    return specfun::gamma(0.5 * (lead + other) + 1.0) *
           specfun::gamma(0.5 * (lead - other) + 1.0) /
           specfun::gamma(lead + 1.0);
}

// Real kernel of the wave-operator symbol correction, without the unimodular
// channel prefactor: phi_check3 = e^{∓i delta} * phi_kernel.
struct PhiKernel {
    double mu, nu, sin_delta, p_lo, p_hi;

    PhiKernel(int m, double alpha) {
        mu = std::abs(static_cast<double>(m));
        nu = std::abs(static_cast<double>(m) + alpha);
        sin_delta = std::sin((m >= 0 ? -0.5 : 0.5) * kPi * alpha);
        p_lo = p_factor(mu, nu);
        p_hi = p_factor(nu, mu);
    }

    double operator()(double y) const {
        double bracket;
        if (y > 0.0)
            bracket = scaled_f_bracket(-mu * y, 0.5 * (mu + nu),
                                       0.5 * (mu - nu), -2.0 * y, p_lo,
                                       Cut::upper)
                          .real();
        else
            bracket = scaled_f_bracket(nu * y, 0.5 * (nu + mu),
                                       0.5 * (nu - mu), 2.0 * y, p_hi,
                                       Cut::upper)
                          .real();
        return -std::sqrt(2.0 / kPi) * sin_delta * bracket / std::sinh(y);
    }
};

// Complex kernel of the interior-operator symbol correction (role-swapped
// orders: mu carries the flux).
struct PhiTildeKernel {
    double mu, nu, p_hi;
    Cut cut;

    PhiTildeKernel(int m, double alpha, Cut c) : cut(c) {
        if (m != 0 && m != -1)
            throw std::domain_error(
                "phi_tilde: unsupported channel (m must be 0 or -1)");
        mu = std::abs(static_cast<double>(m) + alpha);
        nu = std::abs(static_cast<double>(m));
        p_hi = p_factor(nu, mu);
    }

    cplx operator()(double y) const {
        const cplx bracket =
            scaled_f_bracket(-nu * y, 0.5 * (nu + mu), 0.5 * (nu - mu),
                             -2.0 * y, p_hi, cut);
        return cplx(0.0, 0.5) * std::sqrt(2.0 / kPi) * bracket / std::sinh(y);
    }
};

} // namespace

cplx phi_check3(ChannelIndex m, FluxParameter alpha, Sign sign, double y) {
    if (y == 0.0) throw std::domain_error("phi_check3: singular at y = 0");
    const PhiKernel k(m.m, alpha.alpha);
    const double d = delta_phase(m, alpha);
    return std::polar(1.0, sign == Sign::plus ? -d : d) * k(y);
}

cplx phi_tilde_check3(ChannelIndex m, FluxParameter alpha, double y, Cut cut) {
    if (y == 0.0) throw std::domain_error("phi_tilde_check3: singular at y = 0");
    const PhiTildeKernel k(m.m, alpha.alpha, cut);
    return k(y);
}

cplx SpectralSymbol::eval_correction(double x) const {
    cplx s = 0.0;
    for (std::size_t q = 0; q < pos.y.size(); ++q)
        s += pos.wrho[q] * std::polar(1.0, -x * pos.y[q]);
    for (std::size_t q = 0; q < neg.y.size(); ++q)
        s += neg.wrho[q] * std::polar(1.0, x * neg.y[q]);
    return s;
}

cplx SpectralSymbol::eval(double x) const {
    return c0 + c_tanh * std::tanh(0.5 * kPi * x) + eval_correction(x);
}

std::vector<cplx> SpectralSymbol::eval_uniform(double x0, double dx,
                                               std::size_t count) const {
    std::vector<cplx> out(count);
    const std::size_t np = pos.y.size(), nn = neg.y.size();
    std::vector<cplx> php(np), stp(np), phn(nn), stn(nn);
    for (std::size_t q = 0; q < np; ++q) stp[q] = std::polar(1.0, -dx * pos.y[q]);
    for (std::size_t q = 0; q < nn; ++q) stn[q] = std::polar(1.0, dx * neg.y[q]);
    constexpr std::size_t kBlock = 256; // phasor drift restart interval
    for (std::size_t k = 0; k < count; ++k) {
        const double x = x0 + dx * static_cast<double>(k);
        if (k % kBlock == 0) {
            for (std::size_t q = 0; q < np; ++q)
                php[q] = std::polar(1.0, -x * pos.y[q]);
            for (std::size_t q = 0; q < nn; ++q)
                phn[q] = std::polar(1.0, x * neg.y[q]);
        } else {
            simd::mul_cc(php.data(), stp.data(), np);
            simd::mul_cc(phn.data(), stn.data(), nn);
        }
        out[k] = c0 + c_tanh * std::tanh(0.5 * kPi * x) +
                 simd::dot_cc(pos.wrho.data(), php.data(), np) +
                 simd::dot_cc(neg.wrho.data(), phn.data(), nn);
    }
    return out;
}

namespace {

template <typename Kernel>
SpectralSymbol::Side make_side(const Kernel& k, double sign_y,
                               const SymbolBuildOptions& opts,
                               double rate_hint) {
    auto nodes = detail::build_side(
        opts,
        [&](double y) { return std::abs(cplx(k(sign_y * y))); }, rate_hint);
    SpectralSymbol::Side side;
    side.y = std::move(nodes.y);
    side.wrho.resize(side.y.size());
    for (std::size_t q = 0; q < side.y.size(); ++q)
        side.wrho[q] = kInvSqrtTwoPi * nodes.w[q] * cplx(k(sign_y * side.y[q]));
    return side;
}

} // namespace

SpectralSymbol phi_ab_base(ChannelIndex m, FluxParameter alpha,
                           const SymbolBuildOptions& opts) {
    const PhiKernel kern(m.m, alpha.alpha);
    const double d = delta_phase(m, alpha);
    SpectralSymbol s;
    s.c0 = std::cos(d);
    s.c_tanh = cplx(0.0, 1.0) * std::sin(d);
    s.pos = make_side(kern, 1.0, opts, 1.0);
    s.neg = make_side(kern, -1.0, opts, 1.0);
    s.set_limits(std::polar(1.0, d), std::polar(1.0, -d));
    s.set_sup_bound(1.0);
    s.set_x_resolve(opts.x_resolve);
    return s;
}

SpectralSymbol phi_ab_from_base(const SpectralSymbol& base, ChannelIndex m,
                                FluxParameter alpha, Sign sign) {
    const double d = delta_phase(m, alpha);
    const cplx phase = std::polar(1.0, sign == Sign::plus ? -d : d);
    SpectralSymbol s = base;
    s.c0 *= phase;
    s.c_tanh *= phase;
    for (auto& w : s.pos.wrho) w *= phase;
    for (auto& w : s.neg.wrho) w *= phase;
    if (sign == Sign::plus)
        s.set_limits(std::polar(1.0, -2.0 * d), 1.0);
    else
        s.set_limits(1.0, std::polar(1.0, 2.0 * d));
    return s;
}

SpectralSymbol phi_ab(ChannelIndex m, FluxParameter alpha, Sign sign,
                      const SymbolBuildOptions& opts) {
    return phi_ab_from_base(phi_ab_base(m, alpha, opts), m, alpha, sign);
}

SpectralSymbol phi_tilde(ChannelIndex m, FluxParameter alpha, Cut cut,
                         const SymbolBuildOptions& opts) {
    const PhiTildeKernel kern(m.m, alpha.alpha, cut);

    SpectralSymbol s;
    s.c0 = 0.5;
    s.c_tanh = 0.5;
    s.pos = make_side(kern, 1.0, opts, 1.0);
    // negative-side tail decays like e^{-(1-mu)|y|}
    s.neg = make_side(kern, -1.0, opts, std::max(1.0 - kern.mu, 0.02));
    s.set_limits(0.0, 1.0);
    s.set_x_resolve(opts.x_resolve);
    // record the sup from a sampling pass
    double sup = 1.0;
    auto samples = s.eval_uniform(-40.0, 0.08, 1001);
    for (const cplx& v : samples) sup = std::max(sup, std::abs(v));
    s.set_sup_bound(sup + 1e-6);
    return s;
}

} // namespace abwave::symbols
