// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "abwave/kernels.hpp"
#include "abwave/quadrature.hpp"
#include "abwave/specfun.hpp"

namespace abwave::kernels {

using specfun::gamma;
using specfun::hyp2f1;
using specfun::hyp2f1_continued;

cplx scaled_f_bracket(double t, double a, double b, double q, double p,
                      Cut cut) {
    if (std::abs(q) < 0.4) {
        // z near 1: P*F = 1 - C with the logarithmic defect expansion, so
        // e^t P F - 1 = expm1(t) - e^t C, cancellation-free.
        const cplx c = specfun::hyp2f1_cab1_defect_w(a, b, -std::expm1(q), cut);
        return std::expm1(t) - std::exp(t) * c;
    }
    const double z = std::exp(q);
    if (q < 0.0) return std::exp(t) * p * hyp2f1(a, b, a + b + 1.0, z) - 1.0;
    return std::exp(t) * p * hyp2f1_continued(a, b, a + b + 1.0, z, cut) - 1.0;
}

namespace {

double p_factor(double lead, double other) {
    // Gamma((lead+other)/2 + 1) Gamma((lead-other)/2 + 1) / Gamma(lead + 1)
    return gamma(0.5 * (lead + other) + 1.0) * gamma(0.5 * (lead - other) + 1.0) /
           gamma(lead + 1.0);
}

} // namespace

KernelDecomposition kernel_jj(double mu, double nu) {
    if (!(nu + 2.0 > std::abs(mu)) || !(mu + 2.0 > std::abs(nu)))
        throw std::domain_error("kernel_jj: requires nu+2 > |mu| and mu+2 > |nu|");
    KernelDecomposition k;
    k.kind = KernelDecomposition::Kind::jj;
    k.mu = mu;
    k.nu = nu;
    const double half = 0.5 * kPi * (nu - mu);
    k.c_delta = cplx(std::cos(half), 0.0);
    k.c_pv = cplx((2.0 / kPi) * std::sin(half), 0.0);
    k.coeff = k.c_pv;
    k.p_lo = p_factor(mu, nu);
    k.p_hi = p_factor(nu, mu);
    return k;
}

KernelDecomposition kernel_hj(double mu, double nu, Cut cut) {
    if (!(nu + 2.0 > std::abs(mu)))
        throw std::domain_error("kernel_hj: requires nu+2 > |mu|");
    KernelDecomposition k;
    k.kind = KernelDecomposition::Kind::hj;
    k.mu = mu;
    k.nu = nu;
    k.cut = cut;
    const double half = 0.5 * kPi * (nu - mu);
    const cplx phase = std::polar(1.0, half);
    k.c_delta = phase;
    k.c_pv = phase * cplx(0.0, -2.0 / kPi); // 2/(i pi) = -2i/pi
    k.coeff = k.c_pv;
    k.p_lo = p_factor(mu, nu);
    k.p_hi = p_factor(nu, mu);
    return k;
}

cplx eval_regular(const KernelDecomposition& k, double s) {
    if (!(s > 0.0)) throw std::domain_error("eval_regular: requires s > 0");
    if (s == 1.0) throw std::domain_error("eval_regular: singular point s = 1");
    const double w = std::log(s);
    const double denom = -2.0 * std::sinh(w); // = 1/s - s
    cplx bracket;
    if (k.kind == KernelDecomposition::Kind::jj) {
        if (s < 1.0) {
            bracket = scaled_f_bracket(k.mu * w, 0.5 * (k.mu + k.nu),
                                       0.5 * (k.mu - k.nu), 2.0 * w, k.p_lo,
                                       k.cut);
        } else {
            bracket = scaled_f_bracket(-k.nu * w, 0.5 * (k.nu + k.mu),
                                       0.5 * (k.nu - k.mu), -2.0 * w, k.p_hi,
                                       k.cut);
        }
    } else {
        bracket = scaled_f_bracket(-k.nu * w, 0.5 * (k.nu + k.mu),
                                   0.5 * (k.nu - k.mu), -2.0 * w, k.p_hi, k.cut);
    }
    return k.coeff * bracket / (s * denom);
}

cplx pair_with_bump(const KernelDecomposition& k, double lo, double hi,
                    const std::function<double(double)>& w) {
    if (!(lo > 0.0) || !(hi > lo))
        throw std::domain_error("pair_with_bump: bad support");
    if (lo < 1.0 && hi > 1.0)
        throw std::domain_error("pair_with_bump: bump must avoid s = 1");
    const int panels = 64, points = 16;
    const cplx pv_part =
        k.c_pv * quad::integrate_gl_real(
                     [&](double s) {
                         return w(s) / (s * (1.0 / s - s));
                     },
                     lo, hi, panels, points);
    const cplx reg_part = quad::integrate_gl(
        [&](double s) -> cplx { return eval_regular(k, s) * w(s); }, lo, hi,
        panels, points);
    // delta part vanishes: the bump avoids s = 1
    return pv_part + reg_part;
}

} // namespace abwave::kernels
