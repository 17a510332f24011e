#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "symplecta/cli.hpp"
#include "symplecta/error.hpp"

using namespace symplecta;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("symplecta_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path.string();
}

struct Csv {
    std::vector<std::string> meta;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;

    double at(std::size_t row, const std::string& col) const {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == col) return std::strtod(cells[row][c].c_str(), nullptr);
        }
        FAIL("no column " << col);
        return 0.0;
    }
};

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    return out;
}

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        REQUIRE(line.find('\r') == std::string::npos);
        if (line.rfind('#', 0) == 0) {
            csv.meta.push_back(line);
        } else if (csv.header.empty()) {
            csv.header = split(line);
        } else {
            csv.cells.push_back(split(line));
            REQUIRE(csv.cells.back().size() == csv.header.size());
        }
    }
    return csv;
}

const std::string kPair = R"({"kind":"classical","n":2,"diag_freq":[1.2,0.8],"couplings":[-0.3]})";
const std::string kDecoupled = R"({"kind":"classical","n":3,"diag_freq":[3,2,1],"couplings":[0,0]})";
const std::string kUnstable = R"({"kind":"classical","n":2,"diag_freq":[1,1],"couplings":[-1.5]})";
const std::string kQuantum = R"({"kind":"quantum","n":2,"g_diag":[1,1],"g_couple":[-0.1]})";

}  // namespace

TEST_CASE("config parsing") {
    const auto c = cli::parse_config(kPair);
    CHECK(c.kind == cli::NetworkKind::Classical);
    CHECK(c.n == 2);
    CHECK(c.couple(0) == -0.3);

    const auto q = cli::parse_config(kQuantum);
    CHECK(q.kind == cli::NetworkKind::Quantum);
    CHECK_THROWS_AS(q.classical(), Error);

    const auto sm = cli::parse_config(
        R"({"kind":"classical","n":2,"spring_mass":{"m1":1,"m2":1,"k1":1,"k2":1,"k":1}})");
    REQUIRE(sm.spring_mass.has_value());
    CHECK(sm.diag(0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(sm.couple(0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
}

TEST_CASE("config parsing rejects bad documents") {
    const char* bad[] = {
        "not json",
        "[1,2]",
        R"({"n":2,"diag_freq":[1,1],"couplings":[0]})",
        R"({"kind":"classical","n":2,"diag_freq":[1,1],"couplings":[0],"extra":1})",
        R"({"kind":"classical","n":3,"diag_freq":[1,1],"couplings":[0]})",
        R"({"kind":"classical","n":2,"diag_freq":[1,1]})",
        R"({"kind":"classical","n":2,"diag_freq":[1,"x"],"couplings":[0]})",
        R"({"kind":"classical","n":2,"diag_freq":[1,1],"couplings":[0],
            "spring_mass":{"m1":1,"m2":1,"k1":1,"k2":1,"k":1}})",
        R"({"kind":"classical","n":3,"spring_mass":{"m1":1,"m2":1,"k1":1,"k2":1,"k":1}})",
        R"({"kind":"classical","n":2,"spring_mass":{"m1":1,"m2":1,"k1":1,"k2":1}})",
        R"({"kind":"quantum","n":2,"g_diag":[1,1],"g_couple":[0],"couplings":[0]})",
        R"({"kind":"optical","n":2})",
        R"({"kind":"classical","n":0,"diag_freq":[],"couplings":[]})",
    };
    for (const char* text : bad) {
        CAPTURE(text);
        CHECK_THROWS_AS(cli::parse_config(text), Error);
    }
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 12345.678901234567, 0.0}) {
        CHECK(std::strtod(cli::format_double(v).c_str(), nullptr) == v);
    }
    CHECK(cli::format_double(0.5) == "0.5");
}

TEST_CASE("normal-modes: decoupled config") {
    const auto r = invoke({"normal-modes", "--config", write("dec.json", kDecoupled)});
    REQUIRE(r.code == cli::kExitOk);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["omegas"][0].get<double>() == doctest::Approx(3.0));
    CHECK(doc["omegas"][2].get<double>() == doctest::Approx(1.0));
    CHECK(doc["givens"]["rotations"].empty());
    CHECK(doc["symplectic_residual"].get<double>() < 1e-14);
    CHECK(doc.contains("m_s"));
    CHECK(doc.contains("m_t"));
    CHECK(doc.contains("big_g"));
}

TEST_CASE("normal-modes: two-oscillator example") {
    const auto path = write("ex.json", R"({"kind":"classical","n":2,"diag_freq":[1,1],"couplings":[-0.5]})");
    const auto out = (scratch() / "ex_modes.json").string();
    REQUIRE(invoke({"normal-modes", "--config", path, "--out", out}).code == 0);
    std::ifstream in(out);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["omegas"][0].get<double>() == doctest::Approx(1.224745).epsilon(1e-6));
    CHECK(doc["omegas"][1].get<double>() == doctest::Approx(0.707107).epsilon(1e-6));
    const auto& rot = doc["givens"]["rotations"][0];
    CHECK(rot["i"] == 1);
    CHECK(rot["j"] == 2);
}

TEST_CASE("normal-modes: instability exits 2 and names the mode") {
    const auto r = invoke({"normal-modes", "--config", write("uns.json", kUnstable)});
    CHECK(r.code == cli::kExitUnstable);
    CHECK(r.err.find("unstable modes: 2") != std::string::npos);
}

TEST_CASE("normal-modes: quantum config") {
    const auto r = invoke({"normal-modes", "--config", write("q.json", kQuantum)});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["lambdas"][0].get<double>() == doctest::Approx(1.1));
    CHECK(doc["lambdas"][1].get<double>() == doctest::Approx(0.9));
}

TEST_CASE("input errors exit 1") {
    CHECK(invoke({"normal-modes", "--config", (scratch() / "missing.json").string()}).code == 1);
    CHECK(invoke({"normal-modes", "--config", write("bad.json", "{")}).code == 1);
    CHECK(invoke({"normal-modes"}).code == 1);
    CHECK(invoke({"no-such-command"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"evolve", "--config", write("qq.json", kQuantum), "--initial",
                  write("x.json", R"({"q":[1,0],"p":[0,0]})")})
              .code == 1);
}

TEST_CASE("help exits 0") {
    const auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("normal-modes") != std::string::npos);
}

TEST_CASE("evolve: t_max = 0 gives the initial state") {
    const auto cfg = write("pair.json", kPair);
    const auto init = write("init.json", R"({"q":[0.25,-0.5],"p":[0.125,1]})");
    const auto r = invoke({"evolve", "--config", cfg, "--initial", init, "--t-max", "0"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    CHECK(csv.header == std::vector<std::string>{"t", "q1", "q2", "p1", "p2", "energy"});
    REQUIRE(csv.cells.size() == 1);
    CHECK(csv.at(0, "q1") == 0.25);
    CHECK(csv.at(0, "q2") == -0.5);
    CHECK(csv.at(0, "p1") == 0.125);
    CHECK(csv.at(0, "p2") == 1.0);
}

TEST_CASE("evolve: energy column is constant") {
    const auto cfg = write("pair.json", kPair);
    const auto init = write("init.json", R"({"q":[0.25,-0.5],"p":[0.125,1]})");
    const auto r = invoke({"evolve", "--config", cfg, "--initial", init, "--t-max", "100", "--dt", "0.1"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    REQUIRE(csv.cells.size() == 1001);
    const double e0 = csv.at(0, "energy");
    for (std::size_t k = 0; k < csv.cells.size(); ++k) {
        REQUIRE(std::abs(csv.at(k, "energy") - e0) <= 1e-9 * e0);
    }
}

TEST_CASE("evolve: decoupled unit displacement follows cos(w1 t)") {
    const auto cfg = write("dec.json", kDecoupled);
    const auto init = write("unit.json", R"({"q":[1,0,0],"p":[0,0,0]})");
    const auto r = invoke({"evolve", "--config", cfg, "--initial", init, "--t-max", "5", "--dt", "0.5"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    for (std::size_t k = 0; k < csv.cells.size(); ++k) {
        REQUIRE(std::abs(csv.at(k, "q1") - std::cos(3.0 * csv.at(k, "t"))) < 1e-13);
    }
}

TEST_CASE("evolve: dimension mismatch exits 1; instability exits 2") {
    const auto init = write("init3.json", R"({"q":[1,0,0],"p":[0,0,0]})");
    CHECK(invoke({"evolve", "--config", write("pair.json", kPair), "--initial", init}).code == 1);
    const auto init2 = write("init2.json", R"({"q":[1,0],"p":[0,0]})");
    CHECK(invoke({"evolve", "--config", write("uns.json", kUnstable), "--initial", init2}).code == 2);
}

TEST_CASE("CSV outputs are a write-read-write fixed point") {
    const auto cfg = write("pair.json", kPair);
    const auto init = write("init.json", R"({"q":[0.25,-0.5],"p":[0.125,1]})");
    const auto r = invoke({"evolve", "--config", cfg, "--initial", init, "--t-max", "3", "--dt", "0.37"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    for (const auto& row : csv.cells) {
        for (const auto& cell : row) {
            REQUIRE(cli::format_double(std::strtod(cell.c_str(), nullptr)) == cell);
        }
    }
}

TEST_CASE("sections: stages and planes") {
    const auto cfg = write("pair.json", kPair);
    auto r = invoke({"sections", "--config", cfg, "--stage", "after-t", "--plane", "q1,p1",
                     "--energy", "2", "--samples", "64"});
    REQUIRE(r.code == 0);
    auto csv = parse_csv(r.out);
    CHECK(csv.header == std::vector<std::string>{"u", "v"});
    CHECK(csv.cells.size() == 64);
    CHECK(std::find(csv.meta.begin(), csv.meta.end(), "# stage=after-t") != csv.meta.end());
    CHECK(std::find(csv.meta.begin(), csv.meta.end(), "# plane=q1,p1") != csv.meta.end());
    CHECK(std::find(csv.meta.begin(), csv.meta.end(), "# energy=2") != csv.meta.end());
    double rmin = 1e300;
    double rmax = 0.0;
    for (std::size_t k = 0; k < csv.cells.size(); ++k) {
        const double rad = std::hypot(csv.at(k, "u"), csv.at(k, "v"));
        rmin = std::min(rmin, rad);
        rmax = std::max(rmax, rad);
    }
    CHECK(rmax / rmin - 1.0 < 1e-10);

    r = invoke({"sections", "--config", cfg});
    CHECK(r.code == 0);
    CHECK(parse_csv(r.out).cells.size() == 256);

    CHECK(invoke({"sections", "--config", cfg, "--stage", "after-q"}).code == 1);
    CHECK(invoke({"sections", "--config", cfg, "--plane", "q1,q9"}).code == 1);
}

TEST_CASE("sections: indefinite section exits 3") {
    const auto r = invoke({"sections", "--config", write("uns.json", kUnstable), "--plane", "q1,q2"});
    CHECK(r.code == cli::kExitGeometry);
    CHECK(r.err.find("IndefiniteSection") != std::string::npos);
}

TEST_CASE("quantum-evolve: t = 0 row, norm, survival") {
    const auto cfg = write("q.json", kQuantum);
    const auto r = invoke({"quantum-evolve", "--config", cfg, "--initial-site", "1", "--t-max", "100",
                           "--dt", "0.25"});
    REQUIRE(r.code == 0);
    const auto csv = parse_csv(r.out);
    CHECK(csv.header == std::vector<std::string>{"t", "re_c1", "im_c1", "re_c2", "im_c2", "norm",
                                                 "survival"});
    CHECK(csv.at(0, "re_c1") == 1.0);
    CHECK(csv.at(0, "im_c1") == 0.0);
    CHECK(csv.at(0, "re_c2") == 0.0);
    CHECK(csv.at(0, "im_c2") == 0.0);
    for (std::size_t k = 0; k < csv.cells.size(); ++k) {
        const double t = csv.at(k, "t");
        REQUIRE(std::abs(csv.at(k, "norm") - 1.0) <= 1e-12);
        REQUIRE(std::abs(csv.at(k, "survival") - std::pow(std::cos(0.1 * t), 2)) <= 1e-9);
    }
}

TEST_CASE("quantum-evolve: bad site exits 1") {
    const auto cfg = write("q.json", kQuantum);
    CHECK(invoke({"quantum-evolve", "--config", cfg, "--initial-site", "0"}).code == 1);
    CHECK(invoke({"quantum-evolve", "--config", cfg, "--initial-site", "3"}).code == 1);
    CHECK(invoke({"quantum-evolve", "--config", write("pair.json", kPair)}).code == 1);
}

TEST_CASE("verify: decoupled and random configs pass") {
    auto r = invoke({"verify", "--config", write("dec.json", kDecoupled)});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = invoke({"verify", "--config", write("q.json", kQuantum), "--seed", "42"});
    CHECK(r.code == 0);
    const auto random_cfg = write(
        "rand.json",
        R"({"kind":"classical","n":4,"diag_freq":[1.7,0.9,2.4,1.1],"couplings":[0.3,-0.5,0.2]})");
    r = invoke({"verify", "--config", random_cfg, "--seed", "42"});
    CHECK(r.code == 0);
    std::stringstream ss(r.out);
    std::string line;
    int checks = 0;
    while (std::getline(ss, line)) {
        if (line.rfind("PASS ", 0) == 0) ++checks;
    }
    CHECK(checks >= 8);
}

TEST_CASE("verify: corrupted M_R fails the symplectic check") {
    const auto r = invoke({"verify", "--config", write("pair.json", kPair), "--corrupt-mr"});
    CHECK(r.code != 0);
    CHECK(r.code == cli::kExitVerifyFailed);
    CHECK(r.out.find("FAIL symplectic_condition") != std::string::npos);
    const auto q = invoke({"verify", "--config", write("q.json", kQuantum), "--corrupt-mr"});
    CHECK(q.code == cli::kExitVerifyFailed);
}

TEST_CASE("seed precedence: flag, then environment, then default") {
    ::unsetenv("SYMPLECTA_SEED");
    CHECK(cli::resolve_seed(std::nullopt) == 42);
    ::setenv("SYMPLECTA_SEED", "7", 1);
    CHECK(cli::resolve_seed(std::nullopt) == 7);
    CHECK(cli::resolve_seed(99) == 99);
    ::setenv("SYMPLECTA_SEED", "seven", 1);
    CHECK_THROWS_AS(cli::resolve_seed(std::nullopt), Error);
    ::unsetenv("SYMPLECTA_SEED");
}

TEST_CASE("from-spring-mass round trip through normal-modes") {
    const auto out = (scratch() / "sm.json").string();
    REQUIRE(invoke({"from-spring-mass", "--m1", "1", "--k1", "1", "--m2", "1", "--k2", "1", "--k", "1",
                    "--out", out})
                .code == 0);
    std::ifstream in(out);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["diag_freq"][0].get<double>() == doctest::Approx(std::sqrt(2.0)));
    CHECK(doc["couplings"][0].get<double>() == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(invoke({"normal-modes", "--config", out}).code == 0);

    const auto zero = invoke({"from-spring-mass", "--m1", "1", "--k1", "1", "--m2", "1", "--k2", "1",
                              "--k", "0"});
    REQUIRE(zero.code == 0);
    CHECK(cli::parse_config(zero.out).couple(0) == 0.0);

    CHECK(invoke({"from-spring-mass", "--m1", "0", "--k1", "1", "--m2", "1", "--k2", "1", "--k", "1"})
              .code == 1);
    CHECK(invoke({"from-spring-mass", "--m1", "1", "--k1", "-1", "--m2", "1", "--k2", "1", "--k", "1"})
              .code == 1);
}

TEST_CASE("installed binary reports exit codes to the shell") {
    const auto uns = write("uns.json", kUnstable);
    const std::string cmd = std::string(SYMPLECTA_TOOL) + " normal-modes --config " + uns + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 2);
    const std::string ok = std::string(SYMPLECTA_TOOL) + " normal-modes --config " +
                           write("pair.json", kPair) + " >/dev/null 2>&1";
    CHECK(std::system(ok.c_str()) == 0);
}
