// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "abwave/quadrature.hpp"
#include "abwave/symbols.hpp"
#include "support/oracles.hpp"
#include "support/test_support.hpp"

using namespace abwave;
namespace sy = abwave::symbols;
using testing::log_slope;
using testing::rel_err;

namespace {
const sy::SymbolBuildOptions kFast{120.0, 1e-14, 8, 20, 40.0};
}

TEST_CASE("channel phase table") {
    CHECK(sy::delta_phase(0, FluxParameter(0.5)) == doctest::Approx(-kPi / 4).epsilon(1e-15));
    CHECK(sy::delta_phase(-1, FluxParameter(0.5)) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(sy::delta_phase(3, FluxParameter(0.25)) == doctest::Approx(-kPi / 8).epsilon(1e-15));
    CHECK(sy::delta_phase(2, FluxParameter(0.3)) ==
          doctest::Approx(0.5 * kPi * (2.0 - 2.3)).epsilon(1e-14));
}

TEST_CASE("phi kernel: sign enters only through the unimodular prefactor") {
    const FluxParameter a(0.3);
    const ChannelIndex m(-1);
    const double d = sy::delta_phase(m, a);
    for (double y : {-3.0, -0.4, 0.2, 5.0}) {
        const cplx p = sy::phi_check3(m, a, Sign::plus, y);
        const cplx q = sy::phi_check3(m, a, Sign::minus, y);
        CHECK(std::abs(p / q - std::polar(1.0, -2.0 * d)) <= 1e-13);
    }
    CHECK_THROWS_AS(sy::phi_check3(m, a, Sign::plus, 0.0), std::domain_error);
}

TEST_CASE("phi kernel decays exponentially and is locally integrable") {
    const FluxParameter a(0.5);
    const ChannelIndex m(0);
    auto f = [&](double y) { return sy::phi_check3(m, a, Sign::minus, y); };
    CHECK(std::abs(log_slope(f, 5.0, 15.0) + 1.0) <= 0.1);
    CHECK(std::abs(log_slope(f, -15.0, -5.0) - 1.0) <= 0.1);
    // refinement-stable L1 mass over |y| <= 1
    auto mass = [&](int panels) {
        const auto& gl = quad::gauss_legendre(10);
        double s = 0.0;
        for (int side = 0; side < 2; ++side) {
            for (int p = 0; p < panels; ++p) {
                const double lo = 1e-9 + (1.0 - 1e-9) * p / panels;
                const double hi = 1e-9 + (1.0 - 1e-9) * (p + 1) / panels;
                for (std::size_t q = 0; q < gl.x.size(); ++q) {
                    const double t = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.x[q];
                    s += 0.5 * (hi - lo) * gl.w[q] *
                         std::abs(f(side ? t : -t));
                }
            }
        }
        return s;
    };
    CHECK(std::abs(mass(48) - mass(96)) <= 0.01 * mass(96));
}

TEST_CASE("interior kernel channel restriction and asymptotics") {
    CHECK_THROWS_AS(
        sy::phi_tilde_check3(ChannelIndex(5), FluxParameter(0.5), 1.0),
        std::domain_error);
    CHECK_THROWS_AS(
        sy::phi_tilde_check3(ChannelIndex(0), FluxParameter(0.5), 0.0),
        std::domain_error);

    // y -> +inf: decrease driven by 1/sinh
    auto f0 = [&](double y) {
        return sy::phi_tilde_check3(ChannelIndex(0), FluxParameter(0.5), y);
    };
    CHECK(std::abs(log_slope(f0, 5.0, 15.0) + 1.0) <= 0.1);

    // y -> -inf: leading exponent -(|m+alpha| - 1)
    auto fm = [&](double y) {
        return sy::phi_tilde_check3(ChannelIndex(-1), FluxParameter(0.3), y);
    };
    CHECK(std::abs(log_slope(fm, -20.0, -10.0) - 0.3) <= 0.03);
    auto f05 = [&](double y) {
        return sy::phi_tilde_check3(ChannelIndex(0), FluxParameter(0.5), y);
    };
    CHECK(std::abs(log_slope(f05, -20.0, -10.0) - 0.5) <= 0.05);
}

TEST_CASE("wave-operator symbol: limits, unimodularity, bounds") {
    for (int m : {-1, 0, 2}) {
        for (double av : {0.3, 0.8}) {
            const FluxParameter a(av);
            const double d = sy::delta_phase(m, a);
            auto sp = sy::phi_ab(m, a, Sign::plus, kFast);
            auto sm = sy::phi_ab(m, a, Sign::minus, kFast);

            CHECK(rel_err(sp.limit_plus_inf(), cplx(1.0)) <= 1e-15);
            CHECK(rel_err(sp.limit_minus_inf(), std::polar(1.0, -2 * d)) <= 1e-15);
            CHECK(rel_err(sm.limit_minus_inf(), cplx(1.0)) <= 1e-15);
            CHECK(rel_err(sm.limit_plus_inf(), std::polar(1.0, 2 * d)) <= 1e-15);

            // phase bridge phi+(-inf) conj(phi-(+inf)) = e^{-4 i delta}
            CHECK(std::abs(sp.limit_minus_inf() * std::conj(sm.limit_plus_inf()) -
                           std::polar(1.0, -4.0 * d)) <= 1e-14);

            auto tab = sm.eval_uniform(-20.0, 0.02, 2001);
            double worst = 0.0, sup3 = 0.0;
            for (std::size_t k = 0; k < tab.size(); ++k)
                worst = std::max(worst, std::abs(std::abs(tab[k]) - 1.0));
            CHECK(worst <= 1e-6);
            for (double x : {-15.0, -3.0, 0.0, 1.7, 8.0})
                sup3 = std::max(sup3, std::abs(sm.eval_correction(x)));
            CHECK(sup3 <= 2.0);
            CHECK(sm.sup_bound() == 1.0);

            // approach to the declared limits
            CHECK(std::abs(sm.eval(-60.0) - sm.limit_minus_inf()) <= 0.1);
            CHECK(std::abs(sm.eval(60.0) - sm.limit_plus_inf()) <= 0.1);
        }
    }
}

TEST_CASE("uniform evaluation matches pointwise evaluation") {
    auto s = sy::phi_ab(ChannelIndex(-1), FluxParameter(0.4), Sign::minus, kFast);
    auto tab = s.eval_uniform(-7.0, 0.37, 400);
    for (std::size_t k = 0; k < tab.size(); k += 57)
        CHECK(std::abs(tab[k] - s.eval(-7.0 + 0.37 * k)) <= 1e-12);
}

TEST_CASE("fourier convention anchor: Pv(1/sinh) maps to tanh") {
    // int_0^inf sin(x y)/sinh(y) dy = (pi/2) tanh(pi x / 2)
    const auto& gl = quad::gauss_legendre(16);
    for (double x : {0.3, 1.0, 4.2}) {
        double s = 0.0;
        for (int p = 0; p < 400; ++p) {
            const double lo = 40.0 * p / 400, hi = 40.0 * (p + 1) / 400;
            for (std::size_t q = 0; q < gl.x.size(); ++q) {
                const double y = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.x[q];
                const double v = y == 0.0 ? x : std::sin(x * y) / std::sinh(y);
                s += 0.5 * (hi - lo) * gl.w[q] * v;
            }
        }
        CHECK(std::abs(s - 0.5 * kPi * std::tanh(0.5 * kPi * x)) <= 1e-6);
    }
}

TEST_CASE("interior symbol: limits and the elementary part") {
    const FluxParameter a(0.5);
    auto s = sy::phi_tilde(ChannelIndex(0), a, Cut::upper, kFast);
    CHECK(s.limit_minus_inf() == cplx(0.0));
    CHECK(s.limit_plus_inf() == cplx(1.0));
    // elementary part at x=2: (1 + tanh(pi))/2
    const cplx elem = s.c0 + s.c_tanh * std::tanh(kPi);
    CHECK(rel_err(elem.real(), 0.99813603811037497) <= 1e-14);
    // value at 0: 1/2 plus the kernel correction, checked against an
    // independent quadrature of the kernel
    auto kern = [&](double y) {
        return sy::phi_tilde_check3(ChannelIndex(0), a, y);
    };
    const cplx corr0 =
        kInvSqrtTwoPi * (testing::fourier_side_oracle(kern, 0.0, 40.0) +
                         testing::fourier_side_oracle(
                             [&](double y) { return kern(-y); }, -0.0, 90.0));
    CHECK(std::abs(s.eval_correction(0.0) - corr0) <= 1e-8);
    CHECK(std::abs(s.eval(0.0) - (0.5 + corr0)) <= 1e-8);

    CHECK(s.sup_bound() >= 1.0);
    double worst = 0.0;
    auto tab = s.eval_uniform(-30.0, 0.06, 1001);
    for (auto& v : tab) worst = std::max(worst, std::abs(v));
    CHECK(worst <= s.sup_bound());

    CHECK_THROWS_AS(sy::phi_tilde(ChannelIndex(3), a, Cut::upper, kFast),
                    std::domain_error);
}

TEST_CASE("symbols are continuous under sampled refinement") {
    auto s = sy::phi_ab(ChannelIndex(0), FluxParameter(0.5), Sign::minus, kFast);
    for (double x : {-3.0, 0.1, 7.0}) {
        const double d2 = std::abs(s.eval(x + 1e-2) - s.eval(x));
        const double d4 = std::abs(s.eval(x + 1e-4) - s.eval(x));
        CHECK(d4 <= 0.05 * d2 + 1e-12);
    }
}

TEST_CASE("symbol approach to interior limits at large |x|") {
    auto s = sy::phi_tilde(ChannelIndex(-1), FluxParameter(0.3), Cut::upper,
                           kFast);
    CHECK(std::abs(s.eval(-70.0)) <= 0.05);
    CHECK(std::abs(s.eval(70.0) - 1.0) <= 0.05);
}
