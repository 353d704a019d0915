// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "abwave/waveop.hpp"

// Route-verification sweeps with machine-readable reports. Each configured
// case appears exactly once in the report; identical configs produce
// bit-identical reports (timings are emitted only on request).

namespace abwave::verify {

struct BumpSpec {
    double u0 = 0.0;
    double sigma = 0.3;
    double xi0 = 0.0;
};

struct Tolerances {
    double waveop_rel = 1e-4;
    double waveop_ratio_min = 4.0;
    double isometry_spectral = 1e-10;
    double isometry_stationary = 1e-4;
    double scattering = 1e-4;
    double tm_rel = 1e-4;
    double two_channel_bracket = 1e-10;
};

struct VerifyConfig {
    double u_min = -12.0;
    double u_max = 12.0;
    std::size_t n = 4096;
    std::vector<double> alphas{0.2, 0.5, 0.8};
    std::vector<int> ms{-3, -2, -1, 0, 1, 2, 3};
    std::vector<Sign> signs{Sign::plus, Sign::minus};
    std::vector<BumpSpec> bumps{{-0.8, 0.30, 0.0}, {0.0, 0.40, 0.0},
                                {0.7, 0.25, 0.0}};
    std::vector<int> tm_ms{0, -1};
    Cut cut = Cut::upper;
    bool convergence_check = true;
    bool branch_arbiter = true;   // opposite-branch T_m case must fail
    bool probe_isometry = false;  // informational two-channel probe
    bool use_fft_hankel = false;
    int threads = 0;
    Tolerances tol;
};

struct CaseRecord {
    std::string gate; // waveop_routes | isometry | scattering | interior_routes |
                      // interior_branch | two_channel | probe
    int m = 0;
    double alpha = 0.0;
    std::string sign; // "plus" | "minus" | ""
    int bump = -1;
    double value = 0.0; // primary residual of the gate
    double extra = 0.0; // ratio or secondary residual
    bool pass = true;
};

struct VerifyReport {
    std::vector<CaseRecord> cases;
    bool all_pass = false;
    double wall_seconds = 0.0;
};

VerifyConfig config_from_json_text(const std::string& text);
VerifyConfig config_from_json_file(const std::string& path);
std::string config_to_json(const VerifyConfig& c);

/// Floats rendered with 17 significant digits.
std::string report_to_json(const VerifyReport& r, const VerifyConfig& c,
                           bool with_timings);

VerifyReport run_verification(const VerifyConfig& c);

} // namespace abwave::verify
