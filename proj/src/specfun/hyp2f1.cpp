// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "abwave/specfun.hpp"

namespace abwave::specfun {

namespace {

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

constexpr std::size_t kSeriesCap = 1000000;

} // namespace

namespace detail {

double hyp2f1_series(double a, double b, double c, double z,
                     std::size_t max_terms) {
    double term = 1.0, sum = 1.0;
    for (std::size_t k = 0; k < max_terms; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
    }
    throw std::runtime_error("hyp2f1: series did not converge within cap");
}

} // namespace detail

cplx hyp2f1_cab1_defect_w(double a, double b, double w, Cut cut) {
    if (std::abs(w) >= 0.75)
        throw std::domain_error("hyp2f1_cab1_defect: |1-z| too large");
    if (a == 0.0 || b == 0.0) return 0.0;
    cplx logw;
    if (w > 0.0) {
        logw = std::log(w);
    } else {
        const double s = (cut == Cut::upper) ? 1.0 : -1.0;
        logw = cplx(std::log(-w), s * kPi);
    }
    double cn = 1.0;
    double hn = digamma(1.0) + digamma(2.0) - digamma(a + 1.0) - digamma(b + 1.0);
    double wn = 1.0; // w^n
    cplx sum = cn * (hn - logw);
    for (std::size_t n = 1; n < kSeriesCap; ++n) {
        cn *= (a + n) * (b + n) / (n * (n + 1.0));
        hn += 1.0 / n + 1.0 / (n + 1.0) - 1.0 / (a + n) - 1.0 / (b + n);
        wn *= w;
        const cplx term = cn * wn * (hn - logw);
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return (a * b) * w * sum; // G2/G1 = a b
}

cplx hyp2f1_cab1_defect(double a, double b, double z, Cut cut) {
    return hyp2f1_cab1_defect_w(a, b, 1.0 - z, cut);
}

namespace {

// 1-z connection for non-integer c-a-b (argument z in (0.75, 1)).
double near_one_noninteger(double a, double b, double c, double z) {
    const double d = c - a - b;
    const double w = 1.0 - z;
    const double k1 = gamma_any(c) * gamma_any(d) * rgamma(c - a) * rgamma(c - b);
    const double k2 = gamma_any(c) * gamma_any(-d) * rgamma(a) * rgamma(b);
    double t1 = 0.0, t2 = 0.0;
    if (k1 != 0.0) t1 = k1 * detail::hyp2f1_series(a, b, 1.0 - d, w, kSeriesCap);
    if (k2 != 0.0)
        t2 = k2 * std::pow(w, d) *
             detail::hyp2f1_series(c - a, c - b, 1.0 + d, w, kSeriesCap);
    return t1 + t2;
}

} // namespace

double hyp2f1(double a, double b, double c, double z) {
    if (c <= 0.0 && is_integer(c))
        throw std::domain_error("hyp2f1: c is a non-positive integer");
    if (!(z >= 0.0) || !(z < 1.0))
        throw std::domain_error("hyp2f1: requires z in [0,1)");
    if (a == 0.0 || b == 0.0) return 1.0;
    if (z <= 0.75) return detail::hyp2f1_series(a, b, c, z, kSeriesCap);
    const double d = c - a - b;
    if (std::abs(d - 1.0) < 1e-9) {
        // logarithmic case c = a+b+1
        const double g1 = gamma(c) * rgamma(a + 1.0) * rgamma(b + 1.0);
        const cplx f = (1.0 - hyp2f1_cab1_defect(a, b, z)) * g1;
        return f.real();
    }
    if (!is_integer(d)) return near_one_noninteger(a, b, c, z);
    throw std::domain_error(
        "hyp2f1: integer c-a-b != 1 near z=1 is unsupported");
}

cplx hyp2f1_continued(double a, double b, double c, double z, Cut cut) {
    if (!(z > 1.0)) throw std::domain_error("hyp2f1_continued: requires z > 1");
    if (is_integer(a - b))
        throw std::domain_error(
            "hyp2f1_continued: a-b integer degenerates the 1/z transformation");
    if (a == 0.0 || b == 0.0) return 1.0;
    const double s = (cut == Cut::upper) ? -1.0 : 1.0; // phase of (-z)^(-p)
    const double zi = 1.0 / z;
    const cplx pa = std::pow(z, -a) * std::polar(1.0, s * kPi * a);
    const cplx pb = std::pow(z, -b) * std::polar(1.0, s * kPi * b);
    const double k1 =
        gamma_any(c) * gamma_any(b - a) * rgamma(b) * rgamma(c - a);
    const double k2 =
        gamma_any(c) * gamma_any(a - b) * rgamma(a) * rgamma(c - b);
    cplx f = 0.0;
    if (k1 != 0.0)
        f += k1 * pa * hyp2f1(a, 1.0 - c + a, 1.0 - b + a, zi);
    if (k2 != 0.0)
        f += k2 * pb * hyp2f1(b, 1.0 - c + b, 1.0 - a + b, zi);
    return f;
}

} // namespace abwave::specfun
