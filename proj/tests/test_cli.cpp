#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "krzyz/extremal.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

const std::string kCli = KRZYZ_CLI_PATH;

fs::path scratch() {
    auto dir = fs::temp_directory_path() / "krzyz_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run(const std::string& args) {
    int rc = std::system((kCli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("kappa subcommand emits the covering series") {
    auto out = scratch() / "kappa8.json";
    CHECK(run("kappa --order 8 --out " + out.string()) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["rho"].get<double>() == 0.0);
    CHECK(j["order"].get<int>() == 8);
    CHECK(j["deriv0"].get<double>() == doctest::Approx(2.0 / std::numbers::e).epsilon(1e-14));
    auto& series = j["series"];
    REQUIRE(series.size() == 9);
    CHECK(series[1][0].get<double>() == doctest::Approx(2.0 / std::numbers::e).epsilon(1e-14));
    CHECK(std::abs(series[2][0].get<double>()) < 1e-12);
}

TEST_CASE("kappa subcommand covers an annulus") {
    auto out = scratch() / "kappa_rho.json";
    CHECK(run("kappa --rho 0.25 --order 32 --out " + out.string()) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["deriv0"].get<double>() == doctest::Approx(0.48496818976422307).epsilon(1e-12));
    CHECK(j["series"][0][0].get<double>() == doctest::Approx(0.60063521331645986).epsilon(1e-12));
}

TEST_CASE("invalid arguments exit with code 2") {
    CHECK(run("kappa --rho 1.5") == 2);
    CHECK(run("kappa --rho -0.2") == 2);
    CHECK(run("sweep-rho --rho 0") == 2);
    CHECK(run("hsz --p 1 --n 1") == 2);
    CHECK(run("verify") == 2);          // --n is required
    CHECK(run("does-not-exist") == 2);
}

TEST_CASE("rho sweep emits the derivative table") {
    auto out = scratch() / "sweep.csv";
    CHECK(run("sweep-rho --rho 0.5 --rho 0.1 --rho 0.01 --out " + out.string()) == 0);
    std::istringstream csv(slurp(out));
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == "rho,alpha");
    double want[] = {0.31965182793585539, 0.59437324688275561, 0.6869556386811938};
    for (double alpha : want) {
        REQUIRE(std::getline(csv, line));
        auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::stod(line.substr(comma + 1)) == doctest::Approx(alpha).epsilon(1e-12));
    }
    CHECK_FALSE(std::getline(csv, line));
}

TEST_CASE("hsz subcommand reports the coefficient bound") {
    auto out = scratch() / "hsz.json";
    CHECK(run("hsz --p 2 --n 1 --order 64 --out " + out.string()) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["p"].get<double>() == 2.0);
    CHECK(j["n"].get<int>() == 1);
    CHECK(j["coeff"].get<double>() == doctest::Approx(0.85776388496070677).epsilon(1e-12));
    CHECK(j["bound"].get<double>() == doctest::Approx(0.85776388496070677).epsilon(1e-12));
    CHECK(std::abs(j["slack"].get<double>()) < 1e-12);
    CHECK(j["hp_norm"].get<double>() == doctest::Approx(1.0).epsilon(5e-3));
}

TEST_CASE("verify subcommand produces both campaign reports") {
    auto out = scratch() / "verify.json";
    CHECK(run("verify --n 1 --atoms 1 --starts 3 --budget 800 --seed 11 --out " + out.string()) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["n"].get<int>() == 1);
    CHECK(j["bound"].get<double>() == doctest::Approx(krzyz::kTwoOverE).epsilon(1e-15));
    CHECK_FALSE(j["exceeded"].get<bool>());
    for (const char* key : {"cn", "in"}) {
        auto& rep = j[key];
        CHECK(rep["best_value"].get<double>() >= 0.73);
        CHECK(rep["best_value"].get<double>() <=
              krzyz::kTwoOverE + rep["tau"].get<double>());
        CHECK(rep["config"]["starts"].get<int>() == 3);
        CHECK(rep["certified_count"].get<long long>() > 0);
    }
}

TEST_CASE("verify runs are byte-deterministic") {
    auto a = scratch() / "det_a.json";
    auto b = scratch() / "det_b.json";
    const std::string args = "verify --n 1 --atoms 1 --starts 2 --budget 600 --seed 9 --out ";
    CHECK(run(args + a.string()) == 0);
    CHECK(run(args + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("verify writes an improvement trace") {
    auto out = scratch() / "traced.json";
    auto trace = scratch() / "trace.csv";
    CHECK(run("verify --n 1 --atoms 1 --starts 2 --budget 600 --seed 9 --out " + out.string() +
              " --trace " + trace.string()) == 0);
    std::istringstream csv(slurp(trace));
    std::string line;
    REQUIRE(std::getline(csv, line));
    CHECK(line == "functional,start,eval,value");
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows > 0);
}

TEST_CASE("config file overrides command-line flags") {
    auto cfg = scratch() / "cfg.json";
    {
        std::ofstream out(cfg);
        out << "{\"starts\": 2, \"budget\": 500}\n";
    }
    auto out = scratch() / "override.json";
    CHECK(run("verify --n 1 --atoms 1 --starts 5 --budget 900 --seed 4 --config " + cfg.string() +
              " --out " + out.string()) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["cn"]["config"]["starts"].get<int>() == 2);
    CHECK(j["cn"]["config"]["budget"].get<int>() == 500);
    // flags not present in the file survive
    CHECK(j["cn"]["config"]["seed"].get<unsigned long long>() == 4);

    auto bad = scratch() / "bad_cfg.json";
    {
        std::ofstream out(bad);
        out << "{\"startz\": 2}\n";
    }
    CHECK(run("verify --n 1 --config " + bad.string()) == 2);
}

TEST_CASE("stdout is the default sink") {
    auto out = scratch() / "stdout.json";
    int rc = std::system((kCli + " kappa --order 4 > " + out.string() + " 2>/dev/null").c_str());
    CHECK(WEXITSTATUS(rc) == 0);
    auto j = json::parse(slurp(out));
    CHECK(j["order"].get<int>() == 4);
}
