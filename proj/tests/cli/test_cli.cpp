#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "signet/bifurcation.hpp"
#include "signet/ingest.hpp"
#include "signet/sbm.hpp"
#include "signet/spectral.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string kCli = SIGNET_CLI_PATH;
const std::string kData = SIGNET_DATA_DIR;
const fs::path kTmp = SIGNET_TEST_TMP;

int run(const std::string& args) {
    const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = kTmp / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

json read_json(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("regime command on the bundled fixture") {
    const fs::path out = fresh_dir("regime");
    const int rc = run("regime --bias edges --bias-path " + kData +
                       "/ww1_1913.csv --beta 1 --L 6 --alpha 0.03 --out " + out.string());
    CHECK(rc == 0);
    const json doc = read_json(out / "regime.json");
    CHECK(doc["regime"] == "Bistable");
    CHECK(std::abs(doc["lambda_D1"].get<double>() - 5.8649) < 1e-3);
    CHECK(fs::exists(out / "manifest.json"));
    CHECK(fs::exists(out / "bias_matrix.csv"));
}

TEST_CASE("result files are byte-identical across reruns") {
    const fs::path out1 = fresh_dir("det1");
    const fs::path out2 = fresh_dir("det2");
    const std::string args =
        "sbm --n 40 --d-in 0.4 --d-out 0.4 --p-in-plus 1 --p-out-plus 0.2 "
        "--p-out-sweep 0.1:0.9:5 --seed 11 --out ";
    CHECK(run(args + out1.string()) == 0);
    CHECK(run(args + out2.string()) == 0);
    for (const char* name : {"sbm_matrix.csv", "signal.json", "sbm_sweep.csv"})
        CHECK(slurp(out1 / name) == slurp(out2 / name));
}

TEST_CASE("config file values are picked up and flags win") {
    const fs::path out = fresh_dir("config");
    const fs::path cfg = out / "run.ini";
    {
        std::ofstream f(cfg);
        f << "[regime]\n"
          << "bias=gaussian\nn=20\nnoise-std=0.5\ncontrast=0.4\n"
          << "beta=1.0\nL=6.0\nalpha=0.011\nseed=3\n";
    }
    CHECK(run("regime --config " + cfg.string() + " --out " + out.string()) == 0);
    const json doc = read_json(out / "regime.json");
    CHECK(doc["alpha"].get<double>() == doctest::Approx(0.011));

    const fs::path out2 = fresh_dir("config2");
    CHECK(run("regime --config " + cfg.string() + " --alpha 0.02 --out " + out2.string()) == 0);
    CHECK(read_json(out2 / "regime.json")["alpha"].get<double>() == doctest::Approx(0.02));
}

TEST_CASE("exit codes follow the contract") {
    const fs::path out = fresh_dir("errors");
    // config errors -> 2
    CHECK(run("regime --bias nonsense --out " + out.string()) == 2);
    CHECK(run("sweep --bias gaussian --n 10 --alpha-grid '' --out " + out.string()) == 2);
    CHECK(run("sensitivity --bias edges --bias-path " + kData + "/ww1_1913.csv --delta 0 --out " +
              out.string()) == 2);
    CHECK(run("definitely-not-a-command") == 2);
    // numerical failures -> 3
    CHECK(run("perturb --bias edges --bias-path " + kData +
              "/ww1_1913.csv --beta 1 --L 6 --alpha 0.2 --samples 10 --out " + out.string()) == 3);
    // io failures -> 4
    CHECK(run("regime --bias edges --bias-path /nonexistent/file.csv --out " + out.string()) == 4);
}

TEST_CASE("simulate reproduces the raise-then-relax schedule narrative") {
    // pick schedule values from the fixture's own thresholds
    const signet::SignedNetwork bias = signet::build_bias_matrix(
        signet::load_edge_list_file(kData + "/ww1_1913.csv"), -2.0, 2.0);
    const double lam = signet::eigendecompose(bias).leading();
    const double a_pw = signet::alpha_peace_to_war(1.0, lam);

    const double a_peace = 0.75 * a_pw; // bistable: stays where it started
    const double a_war = 2.0 * a_pw;    // monostable war
    const double a_low = 0.1 * signet::alpha_war_to_peace(1.0, 10.0, bias.size(), lam);

    std::ostringstream cmd;
    const fs::path out = fresh_dir("simulate");
    cmd << "simulate --bias edges --bias-path " << kData << "/ww1_1913.csv"
        << " --beta 1 --L 10 --alpha " << a_peace << " --alpha-schedule 30:" << a_war << ",90:"
        << a_peace << ",150:" << a_low << " --t-end 240 --snap-times 20,60 --out " << out.string();
    REQUIRE(run(cmd.str()) == 0);

    const json doc = read_json(out / "result.json");
    REQUIRE(doc["segments"].size() == 4);
    CHECK(doc["segments"][0]["classification"] == "Peace");
    CHECK(doc["segments"][1]["classification"] == "War");
    CHECK(doc["segments"][2]["classification"] == "War"); // hysteresis holds the war state
    CHECK(doc["segments"][3]["classification"] == "Peace");
    CHECK(fs::exists(out / "trajectory.csv"));
    CHECK(fs::exists(out / "snapshot_t20.csv"));
    CHECK(fs::exists(out / "snapshot_t60.csv"));
}

TEST_CASE("matrix output feeds back in as a matrix source") {
    const fs::path out = fresh_dir("roundtrip");
    REQUIRE(run("spectra --bias edges --bias-path " + kData + "/ww1_1913.csv --out " +
                out.string()) == 0);
    const fs::path out2 = fresh_dir("roundtrip2");
    REQUIRE(run("spectra --bias matrix --bias-path " + (out / "bias_matrix.csv").string() +
                " --out " + out2.string()) == 0);
    CHECK(slurp(out / "spectra.csv") == slurp(out2 / "spectra.csv"));
}

TEST_CASE("csd with a single magnitude reports insufficient points") {
    const fs::path out = fresh_dir("csd_short");
    CHECK(run("csd --bias edges --bias-path " + kData +
              "/ww1_1913.csv --beta 1 --L 6 --alpha 0.03 --magnitudes 0.3 --t-end 200 --out " +
              out.string()) == 3);
}

TEST_CASE("perturb on the fixture reports the documented quantities") {
    const fs::path out = fresh_dir("perturb");
    REQUIRE(run("perturb --bias edges --bias-path " + kData +
                "/ww1_1913.csv --beta 1 --L 10 --alpha 0.03 --samples 3000 --schemes energy "
                "--seed 1 --out " +
                out.string()) == 0);
    const json doc = read_json(out / "perturb.json");
    CHECK(doc["lambda_tilde_star"].get<double>() == doctest::Approx(25.0 / 3.0).epsilon(1e-12));
    CHECK(doc["sigma_min"].get<double>() == doctest::Approx(2.4684).epsilon(1e-3));
    CHECK(doc["schemes"]["energy"].size() == 3);

    // top-k beyond the sample budget is clamped, not fatal
    const fs::path out2 = fresh_dir("perturb_clamp");
    CHECK(run("perturb --bias edges --bias-path " + kData +
              "/ww1_1913.csv --beta 1 --L 10 --alpha 0.03 --samples 5 --top-k 9 "
              "--schemes energy --out " +
              out2.string()) == 0);
}

TEST_CASE("plots are written only when requested") {
    const fs::path out = fresh_dir("plots");
    REQUIRE(run("sbm --n 20 --p-out-plus 0.2 --p-out-sweep 0.1:0.9:3 --plot --out " +
                out.string()) == 0);
    CHECK(fs::exists(out / "sbm_sweep.svg"));
    CHECK(fs::exists(out / "sbm_matrix.svg"));
    const fs::path out2 = fresh_dir("noplots");
    REQUIRE(run("sbm --n 20 --p-out-plus 0.2 --out " + out2.string()) == 0);
    CHECK_FALSE(fs::exists(out2 / "sbm_matrix.svg"));
}
