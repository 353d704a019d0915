// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "abwave/common.hpp"

// Self-contained special functions on the real axis: Gamma, digamma, Bessel
// J/Y and the Hankel function H1 of real non-negative order, and the Gauss
// hypergeometric function on [0,1) together with its analytic continuation
// past z = 1. Orders and parameters are restricted to what the radial
// channel calculus needs; see the per-function notes.

namespace abwave::specfun {

/// Gamma function for x > 0, Lanczos approximation (~1e-13 relative).
double gamma(double x);

/// 1/Gamma(x) for any real x (entire; zero at non-positive integers).
double rgamma(double x);

/// Gamma for any real non-integer x (reflection below zero). Throws on poles.
double gamma_any(double x);

/// Digamma for real non-integer x (reflection below zero).
double digamma(double x);

/// Bessel J_nu(x), nu >= 0, x >= 0. Ascending series below the switch point
/// max(12, 2 nu), Hankel asymptotic expansion beyond.
double bessel_j(double nu, double x);

/// Bessel Y_nu(x) for non-integer nu > 0 via the J_{+/-nu} connection; the
/// asymptotic sine form past the switch point.
double bessel_y(double nu, double x);

/// H1_nu(x) = J_nu(x) + i Y_nu(x), non-integer nu, x > 0.
cplx hankel1(double nu, double x);

/// Both J and Y in one evaluation (shares the series work).
void bessel_jy(double nu, double x, double& j, double& y);

/// Gauss 2F1(a,b;c;z) for z in [0,1). Direct series up to z = 0.75, then the
/// 1-z connection formulae (logarithmic variant when c-a-b is the integer 1,
/// which is the case throughout the kernel calculus).
double hyp2f1(double a, double b, double c, double z);

/// Analytic continuation of 2F1 to z > 1 along the chosen side of the cut.
/// Requires a-b non-integer. Cut::upper fixes (-z)^(-s) = e^{-i pi s} z^(-s).
cplx hyp2f1_continued(double a, double b, double c, double z, Cut cut);

/// Defect form of the unit-argument limit in the logarithmic case c=a+b+1:
/// returns C with 2F1(a,b;a+b+1;z) * Gamma(a+1)Gamma(b+1)/Gamma(a+b+2-1) = 1 - C,
/// i.e. C = -(G2/G1) (1-z) sum_n c_n (1-z)^n [ln(1-z) - h_n] with the sign
/// convention P*F = 1 - C. Valid for |1-z| < 1/2. For z > 1 the log picks up
/// +i pi (Cut::upper) or -i pi (Cut::lower).
cplx hyp2f1_cab1_defect(double a, double b, double z, Cut cut = Cut::upper);

/// Same, but with 1-z passed exactly (avoids the 1-(1-x) round trip when the
/// caller knows 1-z to full precision, e.g. as -expm1(q) for z = e^q).
cplx hyp2f1_cab1_defect_w(double a, double b, double one_minus_z,
                          Cut cut = Cut::upper);

namespace detail {
/// Raw Gauss series (testing hook; converges for |z| < 1).
double hyp2f1_series(double a, double b, double c, double z,
                     std::size_t max_terms = 1000000);
} // namespace detail

} // namespace abwave::specfun
