#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string cli() { return HWMC_CLI_PATH; }

int run(const std::string& args) {
    const std::string cmd = cli() + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

fs::path sandbox() {
    const fs::path dir = fs::temp_directory_path() / "hwmc_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("group table emits the 27x27 CSV and validates n") {
    const fs::path dir = sandbox();
    const fs::path out = dir / "table.csv";
    REQUIRE(run("group table --n 3 --out " + out.string()) == 0);
    std::ifstream is(out);
    std::string line;
    int rows = 0;
    std::getline(is, line);
    CHECK(line.substr(0, 10) == "1,2,3,4,5,");
    ++rows;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 27);

    CHECK(run("group table --n 4 --out " + (dir / "bad.csv").string()) == 2);
    CHECK(run("group table --n 2 --out " + (dir / "bad.csv").string()) == 2);
}

TEST_CASE("out-dir prefixes relative outputs") {
    const fs::path dir = sandbox() / "prefixed";
    fs::remove_all(dir);
    REQUIRE(run("--out-dir " + dir.string() + " group table --n 3 --out nested/t.csv") == 0);
    CHECK(fs::exists(dir / "nested" / "t.csv"));
}

TEST_CASE("deterministic output for identical configs") {
    const fs::path dir = sandbox();
    const fs::path a = dir / "a.csv", b = dir / "b.csv";
    REQUIRE(run("group table --n 5 --out " + a.string()) == 0);
    REQUIRE(run("group table --n 5 --out " + b.string()) == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("star-exp with oracle emits symbol and oracle_error") {
    const fs::path dir = sandbox();
    const fs::path mfile = dir / "m.json";
    {
        std::ofstream os(mfile);
        os << "[[[1.0,0.0],[0.2,0.1],[0.0,0.0]],"
              "[[0.2,-0.1],[0.5,0.0],[0.3,0.0]],"
              "[[0.0,0.0],[0.3,0.0],[-0.7,0.0]]]";
    }
    const fs::path out = dir / "se.json";
    REQUIRE(run("star-exp --n 3 --alpha 1 --matrix " + mfile.string() +
                " --t 1 --steps 64 --oracle --out " + out.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    REQUIRE(j.contains("symbol"));
    REQUIRE(j.contains("oracle_symbol"));
    REQUIRE(j.contains("oracle_error"));
    CHECK(j["symbol"].size() == 27);
    CHECK(j["oracle_symbol"].size() == 27);
    CHECK(j["oracle_error"].get<double>() < 20.0 / 64.0);

    // missing matrix file is a config error
    CHECK(run("star-exp --n 3 --alpha 1 --matrix " + (dir / "nope.json").string() +
              " --out " + out.string()) == 2);

    // non-Hermitian input takes the scaling-and-squaring oracle route
    const fs::path nh = dir / "nh.json";
    {
        std::ofstream os(nh);
        os << "[[[0.1,0.2],[0.4,0.0],[0.0,0.0]],"
              "[[0.0,0.0],[-0.3,0.1],[0.2,0.0]],"
              "[[0.5,0.0],[0.0,0.0],[0.0,-0.2]]]";
    }
    REQUIRE(run("star-exp --n 3 --alpha 2 --matrix " + nh.string() +
                " --t 0.8 --steps 64 --oracle --out " + out.string()) == 0);
    const auto jn = nlohmann::json::parse(slurp(out));
    CHECK(jn["oracle_error"].get<double>() < 20.0 / 64.0);
}

TEST_CASE("symbol subcommand honors --format json") {
    const fs::path dir = sandbox();
    const fs::path mfile = dir / "id.json";
    {
        std::ofstream os(mfile);
        os << "[[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[1,0]]]";
    }
    const fs::path out = dir / "sym.json";
    REQUIRE(run("--format json symbol --n 3 --alpha 1 --matrix " + mfile.string() + " --out " +
                out.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j["values"].size() == 27);

    const fs::path csv = dir / "sym.csv";
    REQUIRE(run("symbol --n 3 --alpha 1 --matrix " + mfile.string() + " --out " + csv.string()) ==
            0);
    CHECK(slurp(csv).substr(0, 9) == "u,v,w,re,");
}

TEST_CASE("modeconv pipeline: run, coeffs, rays") {
    const fs::path dir = sandbox();
    const fs::path cfg = dir / "cfg.json";
    {
        std::ofstream os(cfg);
        os << R"({"omega1": {"base": 20, "delta": -5, "T": 5},
                  "omega2": {"base": 20, "delta": 5, "T": 5},
                  "eta": 17.88854381999832,
                  "t0": -30, "t1": 30, "sample_dt": 0.05})";
    }
    const fs::path traj = dir / "traj.csv";
    REQUIRE(run("modeconv run --config " + cfg.string() + " --out " + traj.string()) == 0);
    std::ifstream is(traj);
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,x1_re,x1_im,x2_re,x2_im");

    const fs::path scat = dir / "scat.json";
    REQUIRE(run("modeconv coeffs --config " + cfg.string() + " --out " + scat.string()) == 0);
    const auto j = nlohmann::json::parse(slurp(scat));
    CHECK(j["tau"].get<double>() == doctest::Approx(std::exp(-M_PI * 0.1)).epsilon(1e-9));

    const fs::path ray = dir / "ray.csv";
    REQUIRE(run("modeconv rays --config " + cfg.string() + " --channel 1 --t-seed -20 --sigma 1 --out " +
                ray.string()) == 0);
    CHECK(run("modeconv rays --config " + cfg.string() + " --channel 7 --out " +
              (dir / "r7.csv").string()) == 2);
}

TEST_CASE("wigner subcommand consumes a sampled trajectory") {
    const fs::path dir = sandbox();
    const fs::path traj = dir / "wtraj.csv";
    {
        std::ofstream os(traj);
        os << "t,x1_re,x1_im,x2_re,x2_im\n";
        const double dt = 0.05, w0 = 10.0;
        for (int i = 0; i < 64; ++i) {
            const double t = i * dt;
            os << t << ',' << std::cos(w0 * t) << ',' << -std::sin(w0 * t) << ",0,0\n";
        }
    }
    const fs::path out = dir / "w.csv";
    REQUIRE(run("wigner --traj " + traj.string() + " --n-freq 32 --out " + out.string()) == 0);
    std::ifstream is(out);
    std::string header;
    std::getline(is, header);
    CHECK(header.substr(0, 8) == "t,omega,");
}

TEST_CASE("hocorr subcommands") {
    const fs::path dir = sandbox();
    const fs::path cfg = dir / "hc.json";
    {
        std::ofstream os(cfg);
        os << R"({"a1": 3e-3, "b1": 7.4e-3, "c1": 1e-4,
                  "a2": 3e-3, "b2": 7.4e-3, "c2": -5e-4,
                  "eta": [0.5, 0.0], "epsilon": 1.0})";
    }
    const fs::path coeffs = dir / "coeffs.json";
    REQUIRE(run("hocorr coefficients --config " + cfg.string() + " --out " + coeffs.string()) ==
            0);
    const auto j = nlohmann::json::parse(slurp(coeffs));
    CHECK(j["residual"].get<double>() < 1e-10);

    const fs::path match = dir / "match.json";
    REQUIRE(run("hocorr match --config " + cfg.string() + " --qstar -4 --qstarstar 4 --pstar 4 --out " +
                match.string()) == 0);
    const auto jm = nlohmann::json::parse(slurp(match));
    const double mu = 0.25;
    CHECK(std::abs(jm["upper"][0].get<double>()) <= 1.0);
    CHECK(std::hypot(jm["upper"][0].get<double>(), jm["upper"][1].get<double>()) ==
          doctest::Approx(std::exp(-M_PI * mu)).epsilon(1e-9));
}
