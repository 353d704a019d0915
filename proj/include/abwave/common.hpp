// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>

namespace abwave {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kSqrtTwoPi = 2.50662827463100050241576528481104525;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kInvSqrtTwoPi = 1.0 / kSqrtTwoPi;

/// Side of the branch cut used when a hypergeometric argument crosses z = 1.
/// `upper` fixes (-z)^(-a) = e^{-i pi a} z^(-a); `lower` the conjugate phase.
enum class Cut { upper, lower };

/// Sign label for the outgoing/incoming wave operator pair.
enum class Sign { plus, minus };

/// Magnetic flux parameter, constrained to the open interval (0,1).
struct FluxParameter {
    double alpha;
    explicit FluxParameter(double a) : alpha(a) {
        if (!(a > 0.0) || !(a < 1.0))
            throw std::domain_error("FluxParameter: alpha must lie in (0,1)");
    }
};

/// Angular-momentum channel index.
struct ChannelIndex {
    int m;
    constexpr ChannelIndex(int mm) : m(mm) {}
};

} // namespace abwave
