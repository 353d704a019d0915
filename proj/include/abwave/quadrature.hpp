// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "abwave/common.hpp"

namespace abwave::quad {

struct Rule {
    std::vector<double> x; // nodes
    std::vector<double> w; // weights
};

/// Gauss-Legendre nodes/weights on [-1,1]; cached per point count.
const Rule& gauss_legendre(int points);

/// Tanh-sinh rule for integrals over (0,1); step 2^-level. Nodes cluster at
/// both endpoints, handling integrable endpoint singularities.
Rule tanh_sinh_unit(int level, double t_max = 3.3);

/// Composite Gauss-Legendre of f over [a,b] with `panels` equal panels.
cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                  int panels, int points);

double integrate_gl_real(const std::function<double(double)>& f, double a,
                         double b, int panels, int points);

} // namespace abwave::quad
