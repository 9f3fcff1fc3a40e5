#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("STARLIKE_CLI");
    REQUIRE_MESSAGE(env != nullptr, "STARLIKE_CLI must point at the CLI binary");
    return env;
}

fs::path tmp_dir() {
    const char* env = std::getenv("STARLIKE_TEST_TMPDIR");
    fs::path dir = env ? fs::path(env) : fs::temp_directory_path() / "starlike_cli_tests";
    fs::create_directories(dir);
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) {
        result.output.append(buf, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char ch : text) {
        if (ch == '\n') ++lines;
    }
    return lines;
}

}  // namespace

TEST_CASE("radius reproduces the reference values") {
    auto res = run_cli("radius --class K1 --b -1 --region parabolic");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("rho=0.202134709") != std::string::npos);
    CHECK(res.output.find("ntilde=2") != std::string::npos);
    CHECK(res.output.find("sharp=yes") != std::string::npos);

    res = run_cli("radius --class K1 --b -1 --region order --alpha 0.5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("rho=0.202134") != std::string::npos);

    res = run_cli("radius --class K3 --b 0 --c 0 --region order --alpha 0");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("rho=0.350864113") != std::string::npos);

    res = run_cli("radius --class K1 --b -1 --region parabolic --method margin");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("rho=0.202134709") != std::string::npos);
    CHECK(res.output.find("method=margin_oracle") != std::string::npos);
}

TEST_CASE("exit codes are the documented contract") {
    CHECK(run_cli("radius --class K1 --b -1 --region parabolic --bogus-flag").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("radius --class K1 --b 3 --region parabolic").exit_code == 2);
    CHECK(run_cli("radius --class K1 --b -1 --region atlantis").exit_code == 2);
    CHECK(run_cli("radius --class K2 --b 1 --c -1 --region parabolic").exit_code == 2);
    CHECK(run_cli("radius --class K1 --b -1 --region order --alpha 1.5").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("table sweep: deterministic files with the pinned schema") {
    const fs::path dir = tmp_dir();
    const fs::path csv1 = dir / "k1_sweep_a.csv";
    const fs::path csv2 = dir / "k1_sweep_b.csv";

    auto res = run_cli("table --class K1 --b-grid -1:1:0.25 --out " + csv1.string());
    CHECK(res.exit_code == 0);
    const std::string body1 = slurp(csv1);
    CHECK(count_lines(body1) == 1 + 9 * 10);  // header + 9 b-values x 10 regions
    CHECK(body1.rfind("class,b,c,p1,p2,region,alpha,rho,residual,method,sharp\n", 0) == 0);
    CHECK(body1.find("\r") == std::string::npos);

    res = run_cli("table --class K1 --b-grid -1:1:0.25 --out " + csv2.string());
    CHECK(res.exit_code == 0);
    CHECK(body1 == slurp(csv2));  // byte-identical rerun

    // the (b=0, parabolic) row agrees with the radius command
    auto single = run_cli("radius --class K1 --b 0 --region parabolic");
    const auto pos = single.output.find("rho=");
    REQUIRE(pos != std::string::npos);
    const std::string rho_str = single.output.substr(pos + 4, single.output.find(' ', pos + 4) - pos - 4);
    CHECK(body1.find("K1,0,,0,,parabolic,," + rho_str) != std::string::npos);

    const fs::path json_path = dir / "k1_sweep.json";
    res = run_cli("table --class K1 --b-grid -1:1:0.5 --regions lune sine --format json --out " +
                  json_path.string());
    CHECK(res.exit_code == 0);
    const std::string json_body = slurp(json_path);
    CHECK(json_body.find("\"region\": \"lune\"") != std::string::npos);
    CHECK(json_body.find("\"class\": \"K1\"") != std::string::npos);
}

TEST_CASE("verify lemma mode and fault injection") {
    auto res = run_cli("verify --lemma --b 1 --alpha 0 --trials 2000 --seed 7");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("violations=0") != std::string::npos);

    res = run_cli("verify --lemma --trials 10");
    CHECK(res.exit_code == 1);  // missing --b/--alpha

    const fs::path report = tmp_dir() / "tampered.json";
    res = run_cli("verify --tamper K1:parabolic:c2:+0.1 --out " + report.string());
    CHECK(res.exit_code == 4);
    CHECK(res.output.find("FAIL") != std::string::npos);
    CHECK(res.output.find("parabolic") != std::string::npos);
    const std::string body = slurp(report);
    CHECK(body.find("\"agreement\": false") != std::string::npos);
}

TEST_CASE("verify default matrix passes; report identical across thread caps") {
    const fs::path report1 = tmp_dir() / "matrix_t1.json";
    const fs::path report4 = tmp_dir() / "matrix_t4.json";

    auto res = run_cli("verify --out " + report1.string(), "STARLIKE_THREADS=1 ");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("0 failed") != std::string::npos);

    res = run_cli("verify --out " + report4.string(), "STARLIKE_THREADS=4 ");
    CHECK(res.exit_code == 0);
    CHECK(slurp(report1) == slurp(report4));
}

TEST_CASE("K2 table skips grid points outside the class hypotheses") {
    const fs::path path = tmp_dir() / "k2_sweep.csv";
    auto res = run_cli("table --class K2 --b-grid -1:1:0.5 --c-grid -1:1:0.5 --out " +
                       path.string());
    CHECK(res.exit_code == 0);
    // 13 of the 25 (b, c) pairs satisfy m = |4b-2c| <= 2
    CHECK(count_lines(slurp(path)) == 1 + 13 * 10);
}

TEST_CASE("plot-data emits boundary, image, and touch files") {
    const fs::path dir = tmp_dir();
    const std::string prefix = (dir / "parab").string();
    auto res = run_cli("plot-data --region parabolic --class K1 --b -1 --out-prefix " + prefix +
                       " --samples 360");
    CHECK(res.exit_code == 0);
    CHECK(fs::exists(prefix + "_region.csv"));
    CHECK(fs::exists(prefix + "_image.csv"));
    CHECK(fs::exists(prefix + "_touch.csv"));

    // parabolic touch lands on the vertex w = 1/2
    const std::string touch = slurp(prefix + "_touch.csv");
    std::istringstream is(touch);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header == "theta,u,v");
    double theta = 0.0, u = 0.0, v = 0.0;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &theta, &u, &v) == 3);
    CHECK(std::abs(u - 0.5) < 1e-9);
    CHECK(std::abs(v) < 1e-9);

    // region-only export: nephroid boundary passes through 5/3 and 1/3
    const std::string neph_prefix = (dir / "neph").string();
    res = run_cli("plot-data --region nephroid --out-prefix " + neph_prefix + " --samples 360");
    CHECK(res.exit_code == 0);
    const std::string body = slurp(neph_prefix + "_region.csv");
    CHECK(body.find(",1.66666667,") != std::string::npos);
    CHECK(body.find(",0.333333333,") != std::string::npos);
    CHECK_FALSE(fs::exists(neph_prefix + "_image.csv"));

    // K3 has no sharpness overlay
    res = run_cli("plot-data --region parabolic --class K3 --b 0.1 --c 0.1 --out-prefix " +
                  (dir / "k3").string());
    CHECK(res.exit_code == 2);
}
