// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abwave/kernels.hpp"
#include "abwave/verify.hpp"
#include "abwave/waveop.hpp"

// Exit codes: 0 success, 1 numerical gate failure, 2 usage or unsupported
// parameters, 3 I/O or config errors.

namespace {

using namespace abwave;
namespace tr = abwave::transforms;
namespace sy = abwave::symbols;
namespace wo = abwave::waveop;

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct GridArg {
    double u_min = -12.0, u_max = 12.0;
    std::size_t n = 4096;
};

GridArg parse_grid(const std::string& text) {
    GridArg g;
    if (std::sscanf(text.c_str(), "%lf,%lf,%zu", &g.u_min, &g.u_max, &g.n) != 3)
        throw CLI::ValidationError("--grid expects u_min,u_max,n");
    return g;
}

struct BumpArg {
    double u0 = 0.0, sigma = 0.3, xi0 = 0.0;
};

BumpArg parse_bump(const std::string& text) {
    BumpArg b;
    const int k =
        std::sscanf(text.c_str(), "%lf,%lf,%lf", &b.u0, &b.sigma, &b.xi0);
    if (k < 2) throw CLI::ValidationError("--bump expects u0,sigma[,xi0]");
    return b;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open output file " + path);
    return out;
}

int cmd_symbols(int m, double alpha, const std::string& sign_name,
                bool phi_tilde_flag, double xmin, double xmax, std::size_t n,
                Cut cut, const std::string& out_path) {
    const FluxParameter a(alpha);
    const ChannelIndex mm(m);
    sy::SymbolBuildOptions opts;
    opts.x_resolve = std::max({std::abs(xmin), std::abs(xmax), 40.0});
    sy::SpectralSymbol s =
        phi_tilde_flag
            ? sy::phi_tilde(mm, a, cut, opts)
            : sy::phi_ab(mm, a,
                         sign_name == "plus" ? Sign::plus : Sign::minus, opts);
    auto out = open_out(out_path);
    out << "x,re_phi,im_phi,abs_phi\n";
    const double dx = n > 1 ? (xmax - xmin) / static_cast<double>(n - 1) : 0.0;
    auto vals = s.eval_uniform(xmin, n > 1 ? dx : 1.0, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = xmin + dx * static_cast<double>(k);
        out << fmt17(x) << ',' << fmt17(vals[k].real()) << ','
            << fmt17(vals[k].imag()) << ',' << fmt17(std::abs(vals[k]))
            << '\n';
    }
    return kExitOk;
}

int cmd_kernel(const std::string& kind, double mu, double nu, double smin,
               double smax, std::size_t n, Cut cut, const std::string& out_path,
               double pair_lo, double pair_hi) {
    kernels::KernelDecomposition k = kind == "jj"
                                         ? kernels::kernel_jj(mu, nu)
                                         : kernels::kernel_hj(mu, nu, cut);
    auto out = open_out(out_path);
    out << "# kind=" << kind << " mu=" << fmt17(mu) << " nu=" << fmt17(nu)
        << "\n";
    out << "# c_delta=" << fmt17(k.c_delta.real()) << ','
        << fmt17(k.c_delta.imag()) << "\n";
    out << "# c_pv=" << fmt17(k.c_pv.real()) << ',' << fmt17(k.c_pv.imag())
        << "\n";
    if (pair_hi > pair_lo) {
        const double lo = pair_lo, hi = pair_hi;
        const auto w = [lo, hi](double s) {
            if (s <= lo || s >= hi) return 0.0;
            const double t = (2.0 * s - lo - hi) / (hi - lo);
            return std::exp(-1.0 / (1.0 - t * t));
        };
        const cplx p = kernels::pair_with_bump(k, lo, hi, w);
        out << "# pairing_bump=" << fmt17(lo) << ',' << fmt17(hi)
            << " value=" << fmt17(p.real()) << ',' << fmt17(p.imag()) << "\n";
        std::cout << "pairing " << fmt17(p.real()) << ' ' << fmt17(p.imag())
                  << "\n";
    }
    out << "s,re_regular,im_regular\n";
    const double ds = n > 1 ? (smax - smin) / static_cast<double>(n - 1) : 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double s = smin + ds * static_cast<double>(j);
        cplx v = 0.0;
        if (s > 0.0 && s != 1.0) v = kernels::eval_regular(k, s);
        out << fmt17(s) << ',' << fmt17(v.real()) << ',' << fmt17(v.imag())
            << '\n';
    }
    return kExitOk;
}

int cmd_apply(const std::string& route, int m, double alpha,
              const std::string& sign_name, const BumpArg& bump,
              const GridArg& grid_arg, Cut cut, const std::string& out_path) {
    const tr::LogRadialGrid grid(grid_arg.u_min, grid_arg.u_max, grid_arg.n);
    const FluxParameter a(alpha);
    const ChannelIndex mm(m);
    const Sign sign = sign_name == "plus" ? Sign::plus : Sign::minus;
    auto g = tr::gaussian_bump(grid, bump.u0, bump.sigma, bump.xi0);

    wo::WaveWorkspace ws(grid, cut);
    tr::RadialFunction out(grid);
    if (route == "stationary") {
        out = wo::wave_ab_stationary(ws, mm, a, sign, g).f;
    } else if (route == "spectral") {
        out = wo::wave_ab_spectral(ws, mm, a, sign, g);
    } else { // mellin
        const double d = sy::delta_phase(mm, a);
        const cplx phase = std::polar(1.0, sign == Sign::plus ? -d : d);
        tr::MellinParts parts;
        parts.c_delta = phase * std::cos(d);
        parts.c_pv = -std::sqrt(2.0 / kPi) * phase * std::sin(d);
        parts.regular = [mm, a, sign](double y) {
            return sy::phi_check3(mm, a, sign, y);
        };
        out = tr::mellin_convolve(parts, g);
    }
    auto file = open_out(out_path);
    file << "r,re,im\n";
    for (std::size_t j = 0; j < grid.n; ++j)
        file << fmt17(grid.r(j)) << ',' << fmt17(out.values[j].real()) << ','
             << fmt17(out.values[j].imag()) << '\n';
    return kExitOk;
}

int cmd_verify(const std::string& config_path, const std::string& out_path,
               bool timings, bool fast, int threads,
               const std::string& branch) {
    verify::VerifyConfig cfg;
    if (!config_path.empty()) cfg = verify::config_from_json_file(config_path);
    if (fast) cfg.use_fft_hankel = true;
    if (threads > 0) cfg.threads = threads;
    if (!branch.empty()) cfg.cut = branch == "lower" ? Cut::lower : Cut::upper;

    verify::VerifyReport rep = verify::run_verification(cfg);
    const std::string json = verify::report_to_json(rep, cfg, timings);
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        auto out = open_out(out_path);
        out << json << "\n";
    }
    int fails = 0;
    for (const auto& c : rep.cases) fails += c.pass ? 0 : 1;
    std::cerr << "verify: " << rep.cases.size() << " cases, " << fails
              << " failing\n";
    return rep.all_pass ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"abwave: flux-threaded radial wave operators, three ways"};
    app.require_subcommand(1);
    std::string branch = "upper";
    app.add_option("--branch", branch, "continuation branch past z=1")
        ->check(CLI::IsMember({"upper", "lower"}));

    auto* sym = app.add_subcommand("symbols", "tabulate a spectral symbol");
    int s_m = 0;
    double s_alpha = 0.5, s_xmin = -20.0, s_xmax = 20.0;
    std::size_t s_n = 401;
    bool s_tilde = false;
    std::string s_sign = "minus", s_out;
    sym->add_option("--m", s_m, "channel index")->required();
    sym->add_option("--alpha", s_alpha, "flux in (0,1)")->required();
    sym->add_option("--sign", s_sign)->check(CLI::IsMember({"plus", "minus"}));
    sym->add_flag("--phi-tilde", s_tilde, "interior symbol instead");
    sym->add_option("--xmin", s_xmin);
    sym->add_option("--xmax", s_xmax);
    sym->add_option("--n", s_n);
    sym->add_option("--out", s_out)->required();

    auto* ker = app.add_subcommand("kernel", "tabulate a kernel decomposition");
    std::string k_kind = "jj", k_out;
    double k_mu = 0.0, k_nu = 0.5, k_smin = 0.2, k_smax = 3.0;
    double k_plo = 0.0, k_phi = 0.0;
    std::size_t k_n = 200;
    ker->add_option("--kind", k_kind)->check(CLI::IsMember({"jj", "hj"}));
    ker->add_option("--mu", k_mu)->required();
    ker->add_option("--nu", k_nu)->required();
    ker->add_option("--smin", k_smin);
    ker->add_option("--smax", k_smax);
    ker->add_option("--n", k_n);
    ker->add_option("--pair-lo", k_plo, "smeared-pairing bump lower edge");
    ker->add_option("--pair-hi", k_phi, "smeared-pairing bump upper edge");
    ker->add_option("--out", k_out)->required();

    auto* ap = app.add_subcommand("apply", "apply a wave-operator route");
    std::string a_route = "spectral", a_sign = "minus", a_out;
    std::string a_bump = "0.0,0.35", a_grid = "-12,12,4096";
    int a_m = 0;
    double a_alpha = 0.5;
    ap->add_option("--route", a_route)
        ->check(CLI::IsMember({"stationary", "spectral", "mellin"}));
    ap->add_option("--m", a_m)->required();
    ap->add_option("--alpha", a_alpha)->required();
    ap->add_option("--sign", a_sign)->check(CLI::IsMember({"plus", "minus"}));
    ap->add_option("--bump", a_bump, "u0,sigma[,xi0]");
    ap->add_option("--grid", a_grid, "u_min,u_max,n");
    ap->add_option("--out", a_out)->required();

    auto* ver =
        app.add_subcommand("verify", "run the route-verification sweep");
    std::string v_cfg, v_out;
    bool v_timings = false, v_fast = false;
    int v_threads = 0;
    ver->add_option("--config", v_cfg, "JSON config path");
    ver->add_option("--out", v_out, "report path (default stdout)");
    ver->add_flag("--timings", v_timings, "include wall times in the report");
    ver->add_flag("--fast", v_fast, "use the FFT correlation path");
    ver->add_option("--threads", v_threads);

    try {
        app.parse(argc, argv);
        const Cut cut = branch == "lower" ? Cut::lower : Cut::upper;
        if (sym->parsed())
            return cmd_symbols(s_m, s_alpha, s_sign, s_tilde, s_xmin, s_xmax,
                               s_n, cut, s_out);
        if (ker->parsed())
            return cmd_kernel(k_kind, k_mu, k_nu, k_smin, k_smax, k_n, cut,
                              k_out, k_plo, k_phi);
        if (ap->parsed())
            return cmd_apply(a_route, a_m, a_alpha, a_sign, parse_bump(a_bump),
                             parse_grid(a_grid), cut, a_out);
        if (ver->parsed())
            return cmd_verify(v_cfg, v_out, v_timings, v_fast, v_threads,
                              branch);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "unsupported parameters: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
