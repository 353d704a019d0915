// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "abwave/specfun.hpp"

namespace abwave::specfun {

namespace {

// Lanczos g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_core(double x) {
    // x >= 0.5 assumed; returns Gamma(x)
    double a = kLanczos[0];
    double t = x + 6.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i - 1.0);
    return kSqrtTwoPi * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: requires x > 0");
    if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_core(1.0 - x));
    return lanczos_core(x);
}

double rgamma(double x) {
    if (x > 0.0) return 1.0 / gamma(x);
    // Non-positive x: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi. Entire, with
    // zeros at 0, -1, -2, ...
    if (x == std::floor(x)) return 0.0;
    return std::sin(kPi * x) * gamma(1.0 - x) / kPi;
}

double gamma_any(double x) {
    if (x > 0.0) return gamma(x);
    if (x == std::floor(x)) throw std::domain_error("gamma_any: pole at non-positive integer");
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
}

double digamma(double x) {
    if (x <= 0.0) {
        if (x == std::floor(x))
            throw std::domain_error("digamma: pole at non-positive integer");
        return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    }
    double s = 0.0;
    while (x < 8.0) {
        s -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic expansion with even Bernoulli terms
    const double inv = 1.0 / x, inv2 = inv * inv;
    double series = -inv2 * (1.0 / 12.0 -
                    inv2 * (1.0 / 120.0 -
                    inv2 * (1.0 / 252.0 -
                    inv2 * (1.0 / 240.0 -
                    inv2 * (1.0 / 132.0 -
                    inv2 * (691.0 / 32760.0))))));
    return s + std::log(x) - 0.5 * inv + series;
}

} // namespace abwave::specfun
