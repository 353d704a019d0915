// Copyright (c) 2026 The abwave developers.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

const std::string kCli = ABWAVE_CLI_PATH;
const std::string kTmp = ABWAVE_TEST_TMPDIR;

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << text;
}

// small, fast verify config: one channel, no grid doubling
const char* kSmallConfig = R"({
  "grid": {"u_min": -12.0, "u_max": 12.0, "n": 2048},
  "alphas": [0.3],
  "ms": [1],
  "tm_ms": [0],
  "signs": ["minus"],
  "bumps": [{"u0": 0.0, "sigma": 0.35}],
  "convergence_check": false,
  "branch_arbiter": false,
  "threads": 2
})";

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Table read_csv(const std::string& path) {
    Table t;
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (t.header.empty()) {
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) t.header.push_back(cell);
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

TEST_CASE("symbols table: unimodular column and declared limits") {
    const std::string out = kTmp + "/sym.csv";
    REQUIRE(run("symbols --m -1 --alpha 0.5 --sign minus --xmin -40 --xmax 40 "
                "--n 161 --out " + out) == 0);
    Table t = read_csv(out);
    REQUIRE(t.header.size() == 4);
    CHECK(t.header[0] == "x");
    CHECK(t.header[3] == "abs_phi");
    REQUIRE(t.rows.size() == 161);
    for (const auto& row : t.rows)
        CHECK(std::abs(row[3] - 1.0) <= 1e-6);
    // first/last rows approach the declared limits (1 at -inf for sign minus)
    CHECK(std::abs(t.rows.front()[1] - 1.0) <= 0.05);
    CHECK(std::abs(t.rows.front()[2]) <= 0.05);
}

TEST_CASE("symbols table: degenerate single-row range") {
    const std::string out = kTmp + "/sym1.csv";
    REQUIRE(run("symbols --m 0 --alpha 0.3 --n 1 --xmin 2.0 --out " + out) == 0);
    Table t = read_csv(out);
    CHECK(t.rows.size() == 1);
    CHECK(t.rows[0][0] == 2.0);
}

TEST_CASE("unsupported interior channel exits with the usage code") {
    const std::string out = kTmp + "/sym_bad.csv";
    CHECK(run("symbols --m 5 --alpha 0.5 --phi-tilde --out " + out) == 2);
}

TEST_CASE("kernel dump carries coefficients and the pairing value") {
    const std::string out = kTmp + "/kern.csv";
    REQUIRE(run("kernel --kind jj --mu 1.0 --nu 0.7 --smin 0.3 --smax 2.5 "
                "--n 64 --pair-lo 0.5 --pair-hi 0.9 --out " + out) == 0);
    const std::string text = slurp(out);
    CHECK(text.find("# c_delta=") != std::string::npos);
    CHECK(text.find("# c_pv=") != std::string::npos);
    CHECK(text.find("# pairing_bump=") != std::string::npos);
    Table t = read_csv(out);
    CHECK(t.rows.size() == 64);
}

TEST_CASE("apply: the routes agree on the emitted tables") {
    const std::string o1 = kTmp + "/stat.csv", o2 = kTmp + "/spec.csv",
                      o3 = kTmp + "/mell.csv";
    const std::string common =
        " --m 0 --alpha 0.5 --sign minus --bump 0.0,0.35 --grid -12,12,2048 ";
    REQUIRE(run("apply --route stationary" + common + "--out " + o1) == 0);
    REQUIRE(run("apply --route spectral" + common + "--out " + o2) == 0);
    REQUIRE(run("apply --route mellin" + common + "--out " + o3) == 0);
    Table st = read_csv(o1), sp = read_csv(o2), me = read_csv(o3);
    REQUIRE(st.rows.size() == sp.rows.size());
    REQUIRE(me.rows.size() == sp.rows.size());
    double d_stat = 0.0, d_mel = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < sp.rows.size(); ++i) {
        const double r = sp.rows[i][0];
        auto sq = [](double x, double y) { return x * x + y * y; };
        d_stat += sq(st.rows[i][1] - sp.rows[i][1],
                     st.rows[i][2] - sp.rows[i][2]) * r * r;
        d_mel += sq(me.rows[i][1] - sp.rows[i][1],
                    me.rows[i][2] - sp.rows[i][2]) * r * r;
        ref += sq(sp.rows[i][1], sp.rows[i][2]) * r * r;
    }
    CHECK(std::sqrt(d_stat / ref) <= 1e-4);
    CHECK(std::sqrt(d_mel / ref) <= 1e-5);
}

TEST_CASE("apply: zero-amplitude bump gives a zero column") {
    const std::string out = kTmp + "/zero.csv";
    // a bump centered far outside the grid underflows to zero samples
    REQUIRE(run("apply --route spectral --m 1 --alpha 0.5 --bump 40.0,0.2 "
                "--grid -12,12,2048 --out " + out) == 0);
    Table t = read_csv(out);
    for (const auto& row : t.rows) {
        CHECK(row[1] == 0.0);
        CHECK(row[2] == 0.0);
    }
}

TEST_CASE("verify: small passing config, determinism, exit codes") {
    const std::string cfg = kTmp + "/cfg.json";
    write_file(cfg, kSmallConfig);
    const std::string r1 = kTmp + "/rep1.json", r2 = kTmp + "/rep2.json";
    CHECK(run("verify --config " + cfg + " --out " + r1) == 0);
    CHECK(run("verify --config " + cfg + " --out " + r2) == 0);
    CHECK(slurp(r1) == slurp(r2));
    CHECK(slurp(r1).find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("verify: impossible tolerance fails numerically") {
    const std::string cfg = kTmp + "/cfg_tol0.json";
    std::string text(kSmallConfig);
    text.insert(text.rfind('}'), R"(,"tolerances": {"waveop_rel": 0.0})");
    write_file(cfg, text);
    CHECK(run("verify --config " + cfg) == 1);
}

TEST_CASE("verify: unsupported interior channel in the config") {
    const std::string cfg = kTmp + "/cfg_m5.json";
    std::string text(kSmallConfig);
    const auto pos = text.find("\"tm_ms\": [0]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("\"tm_ms\": [0]").size(), "\"tm_ms\": [5]");
    write_file(cfg, text);
    CHECK(run("verify --config " + cfg) == 2);
}

TEST_CASE("verify: unreadable or malformed configs") {
    CHECK(run("verify --config " + kTmp + "/does_not_exist.json") == 3);
    const std::string cfg = kTmp + "/cfg_bad.json";
    write_file(cfg, "{ this is not json ");
    CHECK(run("verify --config " + cfg) == 3);
}

TEST_CASE("usage errors") {
    CHECK(run("symbols --alpha 0.5 --out /dev/null") == 2); // missing --m
    CHECK(run("frobnicate") == 2);
}
