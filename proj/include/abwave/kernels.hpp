// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "abwave/common.hpp"

// Structured form of the two radial product-kernel distributions on (0,inf):
// a Dirac coefficient at s = 1, a principal-value coefficient against
// s^{-1} Pv(1/(1/s - s)), and a locally integrable remainder evaluated
// pointwise. The remainder has a logarithmic singularity at s = 1; its
// evaluation switches to a cancellation-free expansion there.

namespace abwave::kernels {

struct KernelDecomposition {
    enum class Kind { jj, hj };
    Kind kind;
    double mu = 0.0;
    double nu = 0.0;
    cplx c_delta;   // coefficient of delta(s-1)
    cplx c_pv;      // coefficient of s^{-1} Pv(1/(1/s - s))
    cplx coeff;     // overall factor of the regular part (equals c_pv here)
    double p_lo = 0.0; // Gamma((mu+nu)/2+1) Gamma((mu-nu)/2+1) / Gamma(mu+1)
    double p_hi = 0.0; // Gamma((nu+mu)/2+1) Gamma((nu-mu)/2+1) / Gamma(nu+1)
    Cut cut = Cut::upper; // branch for the hj kernel on s < 1
};

/// Decomposition of int_0^inf k J_mu(s k) J_nu(k) dk. Requires nu+2 > |mu|
/// and mu+2 > |nu|.
KernelDecomposition kernel_jj(double mu, double nu);

/// Decomposition of int_0^inf k H1_mu(s k) J_nu(k) dk. Requires nu+2 > |mu|.
KernelDecomposition kernel_hj(double mu, double nu, Cut cut = Cut::upper);

/// Pointwise value of the regular part at s > 0, s != 1.
cplx eval_regular(const KernelDecomposition& k, double s);

/// Stable evaluation of e^t * P * 2F1(a,b;a+b+1;e^q) - 1 with
/// P = Gamma(a+1)Gamma(b+1)/Gamma(a+b+1) (pass it precomputed as `p`).
/// Uses the raw series for q <= -0.4, the unit-argument defect expansion for
/// |q| < 0.4, and the 1/z continuation for q >= 0.4 (branch from `cut`).
cplx scaled_f_bracket(double t, double a, double b, double q, double p, Cut cut);

/// Smeared pairing <K, w> = c_delta w(1) + c_pv int w(s)/s * 1/(1/s-s) ds
/// + int regular(s) w(s) ds for a test bump supported away from s = 1.
/// `w` is sampled by composite Gauss-Legendre on [lo, hi].
cplx pair_with_bump(const KernelDecomposition& k, double lo, double hi,
                    const std::function<double(double)>& w);

} // namespace abwave::kernels
