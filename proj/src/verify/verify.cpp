// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "abwave/verify.hpp"

namespace abwave::verify {

using transforms::LogRadialGrid;
using transforms::RadialFunction;
using waveop::TwoChannelFunction;
using waveop::WaveWorkspace;

namespace {

double rel_l2_diff(const RadialFunction& a, const RadialFunction& b,
                   double ref) {
    double s = 0.0;
    const double d = a.grid.du();
    for (std::size_t j = 0; j < a.grid.n; ++j) {
        const double r = a.grid.r(j);
        s += std::norm(a.values[j] - b.values[j]) * r * r;
    }
    return std::sqrt(s * d) / ref;
}

void run_parallel(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
    unsigned nt = threads > 0 ? static_cast<unsigned>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, count == 0 ? 1 : count);
    if (nt <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

struct RouteCase {
    int m;
    double alpha;
    Sign sign;
    int bump;
};

} // namespace

VerifyReport run_verification(const VerifyConfig& cfg) {
    const auto t_start = std::chrono::steady_clock::now();
    VerifyReport rep;

    const LogRadialGrid grid(cfg.u_min, cfg.u_max, cfg.n);
    WaveWorkspace ws(grid, cfg.cut);
    ws.ctx().use_fft_path = cfg.use_fft_hankel;

    std::unique_ptr<LogRadialGrid> grid2;
    std::unique_ptr<WaveWorkspace> ws2;
    if (cfg.convergence_check) {
        grid2 = std::make_unique<LogRadialGrid>(cfg.u_min, cfg.u_max, 2 * cfg.n);
        ws2 = std::make_unique<WaveWorkspace>(*grid2, cfg.cut);
        ws2->ctx().use_fft_path = cfg.use_fft_hankel;
    }

    // bump corpus on both grids
    for (const auto& b : cfg.bumps) {
        const double lo = std::exp(cfg.u_min + 1.0), hi = std::exp(cfg.u_max - 1.0);
        const double half = b.sigma * std::sqrt(2.0 * std::log(1e14));
        if (!(std::exp(b.u0 - half) > lo) || !(std::exp(b.u0 + half) < hi))
            throw std::invalid_argument(
                "verify: bump support exceeds (e^{u_min+1}, e^{u_max-1})");
    }
    std::vector<RadialFunction> bumps, bumps2;
    for (const auto& b : cfg.bumps)
        bumps.push_back(transforms::gaussian_bump(grid, b.u0, b.sigma, b.xi0));
    if (ws2)
        for (const auto& b : cfg.bumps)
            bumps2.push_back(
                transforms::gaussian_bump(*grid2, b.u0, b.sigma, b.xi0));

    // ---- route-equivalence + isometry sweep ------------------------------
    std::vector<RouteCase> cases;
    for (int m : cfg.ms)
        for (double a : cfg.alphas)
            for (Sign s : cfg.signs)
                for (std::size_t b = 0; b < bumps.size(); ++b)
                    cases.push_back({m, a, s, static_cast<int>(b)});

    struct Thm1Out {
        double residual, ratio, dev_spec, dev_stat;
    };
    std::vector<Thm1Out> touts(cases.size());
    run_parallel(cases.size(), cfg.threads, [&](std::size_t i) {
        const RouteCase& c = cases[i];
        const FluxParameter alpha(c.alpha);
        const ChannelIndex m(c.m);
        const RadialFunction& g = bumps[c.bump];
        const double gn = g.norm();
        auto stat = waveop::wave_ab_stationary(ws, m, alpha, c.sign, g);
        auto spec = waveop::wave_ab_spectral(ws, m, alpha, c.sign, g);
        Thm1Out o{};
        o.residual = rel_l2_diff(stat.f, spec, gn);
        o.dev_spec = std::abs(spec.norm() / gn - 1.0);
        o.dev_stat = std::abs(stat.f.norm() / gn - 1.0);
        o.ratio = 0.0;
        if (ws2) {
            const RadialFunction& g2 = bumps2[c.bump];
            auto stat2 = waveop::wave_ab_stationary(*ws2, m, alpha, c.sign, g2);
            auto spec2 = waveop::wave_ab_spectral(*ws2, m, alpha, c.sign, g2);
            const double r2 = rel_l2_diff(stat2.f, spec2, g2.norm());
            o.ratio = r2 > 0.0 ? o.residual / r2 : 1e9;
        }
        touts[i] = o;
    });
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const RouteCase& c = cases[i];
        const char* sname = c.sign == Sign::plus ? "plus" : "minus";
        CaseRecord r1{"waveop_routes", c.m, c.alpha, sname, c.bump,
                      touts[i].residual, touts[i].ratio, true};
        r1.pass = touts[i].residual <= cfg.tol.waveop_rel &&
                  (!cfg.convergence_check ||
                   touts[i].ratio >= cfg.tol.waveop_ratio_min);
        rep.cases.push_back(r1);
        CaseRecord r2{"isometry", c.m, c.alpha, sname, c.bump,
                      touts[i].dev_spec, touts[i].dev_stat, true};
        r2.pass = touts[i].dev_spec <= cfg.tol.isometry_spectral &&
                  touts[i].dev_stat <= cfg.tol.isometry_stationary;
        rep.cases.push_back(r2);
    }

    // ---- channel scattering identity ------------------------------------
    struct ScatCase {
        int m;
        double alpha;
        int bump;
    };
    std::vector<ScatCase> scases;
    for (int m : cfg.ms)
        for (double a : cfg.alphas)
            for (std::size_t b = 0; b < bumps.size(); ++b)
                scases.push_back({m, a, static_cast<int>(b)});
    std::vector<double> sres(scases.size());
    run_parallel(scases.size(), cfg.threads, [&](std::size_t i) {
        const ScatCase& c = scases[i];
        const FluxParameter alpha(c.alpha);
        const ChannelIndex m(c.m);
        const RadialFunction& g = bumps[c.bump];
        const RadialFunction& h = bumps[(c.bump + 1) % bumps.size()];
        auto wg = waveop::wave_ab_stationary(ws, m, alpha, Sign::plus, g);
        auto wh = waveop::wave_ab_stationary(ws, m, alpha, Sign::minus, h);
        const cplx lhs = transforms::inner(wg.f, wh.f);
        const cplx rhs =
            waveop::channel_scattering(m, alpha) * transforms::inner(g, h);
        sres[i] = std::abs(lhs - rhs) / std::abs(transforms::inner(g, h));
    });
    for (std::size_t i = 0; i < scases.size(); ++i) {
        CaseRecord r{"scattering", scases[i].m, scases[i].alpha, "", scases[i].bump,
                     sres[i], 0.0, sres[i] <= cfg.tol.scattering};
        rep.cases.push_back(r);
    }

    // ---- interior operator: two routes ----------------------------------
    struct TmCase {
        int m;
        double alpha;
        int bump;
    };
    std::vector<TmCase> tcases;
    for (int m : cfg.tm_ms)
        for (double a : cfg.alphas)
            for (std::size_t b = 0; b < bumps.size(); ++b)
                tcases.push_back({m, a, static_cast<int>(b)});
    std::vector<double> tres(tcases.size());
    run_parallel(tcases.size(), cfg.threads, [&](std::size_t i) {
        const TmCase& c = tcases[i];
        const FluxParameter alpha(c.alpha);
        const ChannelIndex m(c.m);
        const RadialFunction& g = bumps[c.bump];
        auto stat = waveop::t_op_stationary(ws, m, alpha, g);
        auto spec = waveop::t_op_spectral(ws, m, alpha, g);
        tres[i] = rel_l2_diff(stat.f, spec, g.norm());
    });
    for (std::size_t i = 0; i < tcases.size(); ++i) {
        CaseRecord r{"interior_routes", tcases[i].m, tcases[i].alpha, "", tcases[i].bump,
                     tres[i], 0.0, tres[i] <= cfg.tol.tm_rel};
        rep.cases.push_back(r);
    }

    // branch arbiter: the opposite continuation branch must fail the gate
    if (cfg.branch_arbiter && !cfg.tm_ms.empty() && !cfg.alphas.empty()) {
        const Cut other = cfg.cut == Cut::upper ? Cut::lower : Cut::upper;
        WaveWorkspace wso(grid, other);
        wso.ctx().use_fft_path = cfg.use_fft_hankel;
        const FluxParameter alpha(cfg.alphas.front());
        const ChannelIndex m(cfg.tm_ms.front());
        const RadialFunction& g = bumps.front();
        auto stat = waveop::t_op_stationary(wso, m, alpha, g);
        auto spec = waveop::t_op_spectral(wso, m, alpha, g);
        const double r = rel_l2_diff(stat.f, spec, g.norm());
        CaseRecord rec{"interior_branch", m.m, alpha.alpha, "", 0, r, 0.0,
                       r > cfg.tol.tm_rel};
        rep.cases.push_back(rec);
    }

    // ---- two-channel assembly, degenerate scattering matrix -------------
    {
        std::vector<double> bres(cfg.alphas.size());
        run_parallel(cfg.alphas.size(), cfg.threads, [&](std::size_t i) {
            const FluxParameter alpha(cfg.alphas[i]);
            TwoChannelFunction f(grid);
            f.f0 = bumps[0];
            f.fm1 = bumps[bumps.size() > 1 ? 1 : 0];
            const waveop::Mat2 dalpha{std::polar(1.0, -kPi * alpha.alpha), 0.0,
                                      0.0, std::polar(1.0, kPi * alpha.alpha)};
            auto s = waveop::constant_smatrix(dalpha, true);
            auto omega = waveop::assemble_omega_minus(ws, alpha, s, f);
            auto p0 = waveop::wave_ab_spectral(ws, ChannelIndex(0), alpha,
                                               Sign::minus, f.f0);
            auto p1 = waveop::wave_ab_spectral(ws, ChannelIndex(-1), alpha,
                                               Sign::minus, f.fm1);
            const double fn = f.norm();
            const double d0 = rel_l2_diff(omega.f0, p0, fn);
            const double d1 = rel_l2_diff(omega.fm1, p1, fn);
            bres[i] = std::max(d0, d1);
        });
        for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
            CaseRecord r{"two_channel", 0, cfg.alphas[i], "", 0, bres[i], 0.0,
                         bres[i] <= cfg.tol.two_channel_bracket};
            rep.cases.push_back(r);
        }
    }

    // ---- informational probe: constant unitary mixing -------------------
    if (cfg.probe_isometry && !cfg.alphas.empty()) {
        const FluxParameter alpha(cfg.alphas.front());
        TwoChannelFunction f(grid);
        f.f0 = bumps[0];
        f.fm1 = bumps[bumps.size() > 1 ? 1 : 0];
        const double th = 0.3, ph = 0.7;
        const waveop::Mat2 u{std::cos(th), -std::sin(th) * std::polar(1.0, ph),
                             std::sin(th) * std::polar(1.0, -ph), std::cos(th)};
        auto s = waveop::constant_smatrix(u, true);
        auto omega = waveop::assemble_omega_minus(ws, alpha, s, f);
        CaseRecord r{"probe", 0, alpha.alpha, "", 0,
                     omega.norm() / f.norm(), 0.0, true};
        rep.cases.push_back(r);
    }

    rep.all_pass = true;
    for (const auto& c : rep.cases) rep.all_pass = rep.all_pass && c.pass;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    return rep;
}

// ---------------------------------------------------------------------------
// config / report serialization

VerifyConfig config_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    VerifyConfig c;
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (g.contains("u_min")) c.u_min = g["u_min"].get<double>();
        if (g.contains("u_max")) c.u_max = g["u_max"].get<double>();
        if (g.contains("n")) c.n = g["n"].get<std::size_t>();
    }
    if (j.contains("alphas")) c.alphas = j["alphas"].get<std::vector<double>>();
    if (j.contains("ms")) c.ms = j["ms"].get<std::vector<int>>();
    if (j.contains("tm_ms")) c.tm_ms = j["tm_ms"].get<std::vector<int>>();
    if (j.contains("signs")) {
        c.signs.clear();
        for (const auto& s : j["signs"]) {
            const std::string v = s.get<std::string>();
            if (v == "plus") c.signs.push_back(Sign::plus);
            else if (v == "minus") c.signs.push_back(Sign::minus);
            else throw std::invalid_argument("verify config: bad sign " + v);
        }
    }
    if (j.contains("bumps")) {
        c.bumps.clear();
        for (const auto& b : j["bumps"]) {
            BumpSpec s;
            s.u0 = b.at("u0").get<double>();
            s.sigma = b.at("sigma").get<double>();
            if (b.contains("xi0")) s.xi0 = b["xi0"].get<double>();
            c.bumps.push_back(s);
        }
    }
    if (j.contains("branch")) {
        const std::string v = j["branch"].get<std::string>();
        if (v == "upper") c.cut = Cut::upper;
        else if (v == "lower") c.cut = Cut::lower;
        else throw std::invalid_argument("verify config: bad branch " + v);
    }
    if (j.contains("convergence_check"))
        c.convergence_check = j["convergence_check"].get<bool>();
    if (j.contains("branch_arbiter"))
        c.branch_arbiter = j["branch_arbiter"].get<bool>();
    if (j.contains("probe_isometry"))
        c.probe_isometry = j["probe_isometry"].get<bool>();
    if (j.contains("use_fft_hankel"))
        c.use_fft_hankel = j["use_fft_hankel"].get<bool>();
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
    if (j.contains("tolerances")) {
        const auto& t = j["tolerances"];
        auto grab = [&](const char* k, double& dst) {
            if (t.contains(k)) dst = t[k].get<double>();
        };
        grab("waveop_rel", c.tol.waveop_rel);
        grab("waveop_ratio_min", c.tol.waveop_ratio_min);
        grab("isometry_spectral", c.tol.isometry_spectral);
        grab("isometry_stationary", c.tol.isometry_stationary);
        grab("scattering", c.tol.scattering);
        grab("tm_rel", c.tol.tm_rel);
        grab("two_channel_bracket", c.tol.two_channel_bracket);
    }
    return c;
}

VerifyConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("verify: cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

std::string config_to_json(const VerifyConfig& c) {
    std::ostringstream o;
    o << "{\"grid\":{\"u_min\":" << fmt17(c.u_min)
      << ",\"u_max\":" << fmt17(c.u_max) << ",\"n\":" << c.n << "},";
    o << "\"alphas\":[";
    for (std::size_t i = 0; i < c.alphas.size(); ++i)
        o << (i ? "," : "") << fmt17(c.alphas[i]);
    o << "],\"ms\":[";
    for (std::size_t i = 0; i < c.ms.size(); ++i)
        o << (i ? "," : "") << c.ms[i];
    o << "],\"tm_ms\":[";
    for (std::size_t i = 0; i < c.tm_ms.size(); ++i)
        o << (i ? "," : "") << c.tm_ms[i];
    o << "],\"signs\":[";
    for (std::size_t i = 0; i < c.signs.size(); ++i)
        o << (i ? "," : "")
          << (c.signs[i] == Sign::plus ? "\"plus\"" : "\"minus\"");
    o << "],\"bumps\":[";
    for (std::size_t i = 0; i < c.bumps.size(); ++i)
        o << (i ? "," : "") << "{\"u0\":" << fmt17(c.bumps[i].u0)
          << ",\"sigma\":" << fmt17(c.bumps[i].sigma)
          << ",\"xi0\":" << fmt17(c.bumps[i].xi0) << "}";
    o << "],\"branch\":" << (c.cut == Cut::upper ? "\"upper\"" : "\"lower\"");
    o << ",\"convergence_check\":" << (c.convergence_check ? "true" : "false");
    o << ",\"branch_arbiter\":" << (c.branch_arbiter ? "true" : "false");
    o << ",\"probe_isometry\":" << (c.probe_isometry ? "true" : "false");
    o << ",\"use_fft_hankel\":" << (c.use_fft_hankel ? "true" : "false");
    o << ",\"threads\":" << c.threads;
    o << ",\"tolerances\":{"
      << "\"waveop_rel\":" << fmt17(c.tol.waveop_rel)
      << ",\"waveop_ratio_min\":" << fmt17(c.tol.waveop_ratio_min)
      << ",\"isometry_spectral\":" << fmt17(c.tol.isometry_spectral)
      << ",\"isometry_stationary\":" << fmt17(c.tol.isometry_stationary)
      << ",\"scattering\":" << fmt17(c.tol.scattering)
      << ",\"tm_rel\":" << fmt17(c.tol.tm_rel)
      << ",\"two_channel_bracket\":" << fmt17(c.tol.two_channel_bracket) << "}}";
    return o.str();
}

std::string report_to_json(const VerifyReport& r, const VerifyConfig& c,
                           bool with_timings) {
    std::ostringstream o;
    o << "{\"config\":" << config_to_json(c) << ",\"cases\":[";
    for (std::size_t i = 0; i < r.cases.size(); ++i) {
        const CaseRecord& cr = r.cases[i];
        o << (i ? "," : "") << "{\"gate\":\"" << cr.gate << "\",\"m\":" << cr.m
          << ",\"alpha\":" << fmt17(cr.alpha) << ",\"sign\":\"" << cr.sign
          << "\",\"bump\":" << cr.bump << ",\"value\":" << fmt17(cr.value)
          << ",\"extra\":" << fmt17(cr.extra)
          << ",\"pass\":" << (cr.pass ? "true" : "false") << "}";
    }
    o << "],\"summary\":{\"cases\":" << r.cases.size()
      << ",\"all_pass\":" << (r.all_pass ? "true" : "false") << "}";
    if (with_timings) o << ",\"wall_seconds\":" << fmt17(r.wall_seconds);
    o << "}";
    return o.str();
}

} // namespace abwave::verify
