// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

// Integration acceptance suite. Runs every gate at its pinned tolerance on
// the default grid (u in [-12,12], n = 4096) and prints one line per
// criterion; the exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "abwave/kernels.hpp"
#include "abwave/specfun.hpp"
#include "abwave/verify.hpp"
#include "abwave/waveop.hpp"
#include "support/oracles.hpp"
#include "support/test_support.hpp"

using namespace abwave;
namespace sf = abwave::specfun;
namespace sy = abwave::symbols;
namespace tr = abwave::transforms;
namespace wo = abwave::waveop;
using testing::log_slope;
using testing::rel_l2;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL",
                criterion, what.c_str(), detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char b[48];
    std::snprintf(b, sizeof(b), "%.3g", v);
    return b;
}

// frozen tail tolerances, calibrated once against the high-resolution
// quadrature oracle (worst observed: 5.44e-2 / 2.72e-2 for the channel
// symbols and 9.61e-3 / 4.81e-3 for the interior ones)
constexpr double kTailTol50 = 0.082;
constexpr double kTailTol100 = 0.041;
constexpr double kTildeTailTol50 = 0.0145;
constexpr double kTildeTailTol100 = 0.0073;

const std::vector<double> kAlphas{0.2, 0.5, 0.8};
const std::vector<int> kMs{-3, -2, -1, 0, 1, 2, 3};

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();

    // ---- engine-backed gates: route equivalence, isometry, scattering,
    //      interior routes + branch arbiter, two-channel bracket ------------
    verify::VerifyConfig cfg; // defaults pin the acceptance sweep
    verify::VerifyReport rep = verify::run_verification(cfg);
    const double engine_secs = rep.wall_seconds;

    double waveop_worst = 0.0, waveop_ratio = 1e300;
    double iso_spec = 0.0, iso_stat = 0.0;
    double scat = 0.0, tm_worst = 0.0, two_channel = 0.0;
    double branch_counter = 0.0;
    std::size_t waveop_cases = 0;
    for (const auto& c : rep.cases) {
        if (c.gate == "waveop_routes") {
            waveop_worst = std::max(waveop_worst, c.value);
            waveop_ratio = std::min(waveop_ratio, c.extra);
            ++waveop_cases;
        } else if (c.gate == "isometry") {
            iso_spec = std::max(iso_spec, c.value);
            iso_stat = std::max(iso_stat, c.extra);
        } else if (c.gate == "scattering") {
            scat = std::max(scat, c.value);
        } else if (c.gate == "interior_routes") {
            tm_worst = std::max(tm_worst, c.value);
        } else if (c.gate == "interior_branch") {
            branch_counter = c.value;
        } else if (c.gate == "two_channel") {
            two_channel = std::max(two_channel, c.value);
        }
    }

    {
        const bool pass = waveop_worst <= cfg.tol.waveop_rel &&
                          waveop_ratio >= cfg.tol.waveop_ratio_min &&
                          engine_secs <= 600.0 &&
                          waveop_cases == kMs.size() * kAlphas.size() * 2 * 3;
        report(1, pass, "stationary and multiplier routes coincide",
               "max rel residual " + fmt(waveop_worst) + ", min refinement ratio " +
                   fmt(waveop_ratio) + ", sweep wall " + fmt(engine_secs) + " s");
    }
    report(2,
           iso_spec <= cfg.tol.isometry_spectral &&
               iso_stat <= cfg.tol.isometry_stationary,
           "both routes are isometric",
           "multiplier route dev " + fmt(iso_spec) + ", stationary dev " +
               fmt(iso_stat));

    // ---- criterion 3: unimodularity, tail limits, kernel-part bound ------
    {
        double worst_mod = 0.0, worst50 = 0.0, worst100 = 0.0, sup3 = 0.0;
        sy::SymbolBuildOptions opts;
        opts.x_resolve = 120.0;
        for (int m : kMs) {
            for (double a : kAlphas) {
                for (Sign s : {Sign::plus, Sign::minus}) {
                    auto sym = sy::phi_ab(m, FluxParameter(a), s, opts);
                    auto tab = sym.eval_uniform(-20.0, 0.02, 2001);
                    for (const cplx& v : tab)
                        worst_mod =
                            std::max(worst_mod, std::abs(std::abs(v) - 1.0));
                    worst50 = std::max(
                        {worst50,
                         std::abs(sym.eval(50.0) - sym.limit_plus_inf()),
                         std::abs(sym.eval(-50.0) - sym.limit_minus_inf())});
                    worst100 = std::max(
                        {worst100,
                         std::abs(sym.eval(100.0) - sym.limit_plus_inf()),
                         std::abs(sym.eval(-100.0) - sym.limit_minus_inf())});
                    for (double x = -20.0; x <= 20.0; x += 0.5)
                        sup3 = std::max(sup3, std::abs(sym.eval_correction(x)));
                }
            }
        }
        const bool pass = worst_mod <= 1e-6 && worst50 <= kTailTol50 &&
                          worst100 <= kTailTol100 && sup3 <= 2.0;
        report(3, pass, "channel symbols are unimodular with pinned limits",
               "max | |phi|-1 | " + fmt(worst_mod) + ", tail dev " +
                   fmt(worst50) + "@50 " + fmt(worst100) + "@100, sup|phi3| " +
                   fmt(sup3));
    }

    report(4, scat <= cfg.tol.scattering,
           "channel scattering coefficient is recovered",
           "max rel defect " + fmt(scat));

    report(5, tm_worst <= cfg.tol.tm_rel && branch_counter > cfg.tol.tm_rel,
           "interior operator routes coincide on exactly one branch",
           "max rel residual " + fmt(tm_worst) + ", opposite-branch residual " +
               fmt(branch_counter));

    // ---- criterion 6: interior symbol limits and kernel decay rates ------
    {
        double lim50 = 0.0, lim100 = 0.0, worst_rate = 0.0;
        sy::SymbolBuildOptions opts;
        opts.x_resolve = 120.0;
        for (int m : {0, -1}) {
            for (double a : kAlphas) {
                const FluxParameter al(a);
                auto sym = sy::phi_tilde(m, al, Cut::upper, opts);
                lim50 = std::max({lim50, std::abs(sym.eval(-50.0)),
                                  std::abs(sym.eval(50.0) - 1.0)});
                lim100 = std::max({lim100, std::abs(sym.eval(-100.0)),
                                   std::abs(sym.eval(100.0) - 1.0)});
                auto kern = [&](double y) {
                    return sy::phi_tilde_check3(m, al, y);
                };
                const double mu = std::abs(m + a);
                const double s_pos = log_slope(kern, 5.0, 15.0);
                const double s_neg = log_slope(kern, -20.0, -10.0);
                worst_rate = std::max(worst_rate, std::abs(s_pos + 1.0) / 1.0);
                worst_rate = std::max(
                    worst_rate, std::abs(s_neg - (1.0 - mu)) / (1.0 - mu));
            }
        }
        const bool pass = lim50 <= kTildeTailTol50 &&
                          lim100 <= kTildeTailTol100 && worst_rate <= 0.10;
        report(6, pass, "interior symbol reaches 0 and 1 with stated decay",
               "tail dev " + fmt(lim50) + "@50 " + fmt(lim100) +
                   "@100, worst rate defect " + fmt(worst_rate * 100.0) + "%");
    }

    report(7, two_channel <= cfg.tol.two_channel_bracket,
           "two-channel bracket vanishes identically in the free case",
           "max rel residual " + fmt(two_channel));

    // ---- criterion 8: smeared kernel pairings vs the damped oracle -------
    {
        using testing::Mollifier;
        using testing::oscillatory_pairing;
        using testing::PairKernel;
        double worst = 0.0;
        const Mollifier wj{0.5, 0.9}, wh{1.2, 1.8};
        const double jj_pairs[3][2] = {{1.0, 0.7}, {0.0, 0.5}, {2.0, 1.3}};
        const double hj_pairs[3][2] = {{0.5, 0.0}, {0.7, 1.0}, {0.3, 0.0}};
        for (const auto& p : jj_pairs) {
            auto k = kernels::kernel_jj(p[0], p[1]);
            const cplx mine = kernels::pair_with_bump(k, wj.a, wj.b, wj);
            const cplx orac =
                oscillatory_pairing(PairKernel::jj, p[0], p[1], wj);
            worst = std::max(worst, std::abs(mine - orac) / std::abs(orac));
        }
        for (const auto& p : hj_pairs) {
            auto k = kernels::kernel_hj(p[0], p[1]);
            const cplx mine = kernels::pair_with_bump(k, wh.a, wh.b, wh);
            const cplx orac =
                oscillatory_pairing(PairKernel::hj, p[0], p[1], wh);
            worst = std::max(worst, std::abs(mine - orac) / std::abs(orac));
        }
        report(8, worst <= 1e-3, "kernel decompositions match the damped oracle",
               "max rel defect " + fmt(worst));
    }

    // ---- criterion 9: transform stack ------------------------------------
    {
        const tr::LogRadialGrid grid(cfg.u_min, cfg.u_max, cfg.n);
        tr::TransformContext ctx(grid);
        auto g = tr::gaussian_bump(grid, 0.0, 0.35);
        auto fg = tr::hankel_transform(ctx, 2, g);
        auto back = tr::hankel_transform(ctx, 2, fg, true);
        const double roundtrip = rel_l2(back, g, g.norm());

        tr::RadialFunction gauss(grid);
        for (std::size_t j = 0; j < grid.n; ++j) {
            const double r = grid.r(j);
            gauss.values[j] = std::exp(-0.5 * r * r);
        }
        auto fgauss = tr::hankel_transform(ctx, 0, gauss);
        double err = 0.0, ref = 0.0;
        for (std::size_t j = 0; j < grid.n; ++j) {
            const double k = grid.r(j);
            const double want = std::exp(-0.5 * k * k);
            err += std::norm(fgauss.values[j] - want) * k * k;
            ref += want * want * k * k;
        }
        const double gauss_err = std::sqrt(err / ref);

        const double tau = 5.0 * grid.du();
        auto dil = tr::make_multiplier_table(
            [&](double xi) { return std::polar(1.0, tau * xi); }, grid);
        auto shifted = tr::apply_multiplier(dil, g);
        double derr = 0.0;
        for (std::size_t j = 0; j + 5 < grid.n; ++j) {
            const cplx want = g.values[j + 5] * grid.r(j + 5) / grid.r(j);
            const double r = grid.r(j);
            derr += std::norm(shifted.values[j] - want) * r * r;
        }
        const double dilation = std::sqrt(derr * grid.du()) / g.norm();

        auto tanh_tab = tr::make_multiplier_table(
            [](double xi) { return cplx(std::tanh(0.5 * kPi * xi)); }, grid, 2);
        auto via_mult = tr::apply_multiplier(tanh_tab, g);
        tr::MellinParts parts;
        parts.c_pv = cplx(0.0, 1.0) * std::sqrt(2.0 / kPi);
        auto via_pv = tr::mellin_convolve(parts, g);
        const double anchor = rel_l2(via_mult, via_pv, g.norm());

        const bool pass = roundtrip <= 1e-8 && gauss_err <= 1e-6 &&
                          dilation <= 1e-10 && anchor <= 1e-6;
        report(9, pass, "transform stack identities",
               "round trip " + fmt(roundtrip) + ", gaussian pair " +
                   fmt(gauss_err) + ", dilation " + fmt(dilation) +
                   ", pv/tanh " + fmt(anchor));
    }

    // ---- criterion 10: special functions ---------------------------------
    {
        std::mt19937 gen(0xacce97);
        std::uniform_real_distribution<double> ux(0.1, 20.0);
        double gam = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double x = ux(gen);
            gam = std::max(gam, std::abs(sf::gamma(x + 1.0) -
                                         x * sf::gamma(x)) /
                                    sf::gamma(x + 1.0));
        }
        std::uniform_real_distribution<double> unu(0.1, 3.5), uxx(0.5, 50.0);
        double bes = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double nu = unu(gen) + 1.0, x = uxx(gen);
            const double lhs =
                sf::bessel_j(nu - 1.0, x) + sf::bessel_j(nu + 1.0, x);
            const double rhs = 2.0 * nu / x * sf::bessel_j(nu, x);
            bes = std::max(bes, std::abs(lhs - rhs) /
                                    std::max({std::abs(lhs), std::abs(rhs),
                                              1e-3}));
        }
        auto wronskian_defect = [](double nu, double x) {
            const double h = 1e-6;
            const double jp =
                (sf::bessel_j(nu, x + h) - sf::bessel_j(nu, x - h)) / (2 * h);
            const double yp =
                (sf::bessel_y(nu, x + h) - sf::bessel_y(nu, x - h)) / (2 * h);
            const double w =
                sf::bessel_j(nu, x) * yp - jp * sf::bessel_y(nu, x);
            return std::abs(w - 2.0 / (kPi * x)) / (2.0 / (kPi * x));
        };
        double wron = wronskian_defect(0.3, 2.0);
        std::uniform_real_distribution<double> uw(0.15, 2.7), uwx(0.8, 9.0);
        for (int i = 0; i < 20; ++i)
            wron = std::max(wron, wronskian_defect(uw(gen), uwx(gen)));

        const double a = 0.65, b = 0.15, c = a + b + 1.0;
        const double at_one = sf::gamma(c) * sf::rgamma(c - a) * sf::rgamma(c - b);
        const double gauss_lim =
            std::abs(sf::hyp2f1(a, b, c, 1.0 - 1e-6) - at_one) /
            std::abs(at_one);

        double half = std::abs(sf::bessel_j(0.5, 0.5 * kPi) - 2.0 / kPi) /
                      (2.0 / kPi);
        half = std::max(half,
                        std::abs(sf::bessel_y(0.5, kPi) - std::sqrt(2.0) / kPi) /
                            (std::sqrt(2.0) / kPi));
        half = std::max(half, std::abs(sf::hankel1(0.5, 0.5 * kPi) -
                                       cplx(2.0 / kPi, 0.0)) /
                                  (2.0 / kPi));

        const bool pass = gam <= 1e-11 && bes <= 1e-8 && wron <= 1e-6 &&
                          gauss_lim <= 1e-4 && half <= 1e-9;
        report(10, pass, "special-function identities",
               "gamma rec " + fmt(gam) + ", bessel rec " + fmt(bes) +
                   ", wronskian " + fmt(wron) + ", gauss limit " +
                   fmt(gauss_lim) + ", half-order " + fmt(half));
    }

    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("%d of 10 criteria failing; total wall %.1f s\n", failures,
                total);
    return failures;
}
