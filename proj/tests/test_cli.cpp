// End-to-end tests of the installed CLI binary: exit codes, output
// determinism, error hygiene (no partial files), golden outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "spinchain_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string cmd = std::string(SPINCHAIN_CLI_PATH) + " " + args + " > " + out.string() +
                          " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    rows.push_back(fields);
  }
  return rows;
}

}  // namespace

TEST_CASE("predict: PST line with certificate, exit 0 either way") {
  const RunResult hit = run_cli("predict --N 3 --alpha 1 --beta 1 --kind pst");
  CHECK(hit.code == 0);
  CHECK(hit.out.find("PST at t = 1*pi/beta = 3.1415926535897931") != std::string::npos);
  CHECK(hit.out.find("q=1") != std::string::npos);

  const RunResult miss = run_cli("predict --N 2 --alpha 1 --beta 1 --kind pst");
  CHECK(miss.code == 0);
  CHECK(miss.out.find("no PST predicted") != std::string::npos);
}

TEST_CASE("predict: json and csv formats") {
  const RunResult json = run_cli("predict --N 1 --alpha 1 --beta 1 --kind fr --format json");
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["result"]["kind"] == "BalancedFR");
  CHECK(doc["result"]["time_multiple_of_pi_over_beta"] == "1/2");

  const RunResult csv = run_cli("predict --N 1 --alpha 1 --beta 1 --kind fr --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("kind,time,time_multiple,p,q,N,p_odd,q_odd,N_odd\n", 0) == 0);
}

TEST_CASE("verify: balanced FR passes with |mu|^2 = 0.5, exit 0") {
  const RunResult r = run_cli("verify --N 1 --alpha 1 --beta 1 --kind fr --tol 1e-7");
  CHECK(r.code == 0);
  CHECK(r.out.find("|mu|^2 = 0.5") != std::string::npos);
  CHECK(r.out.find("-> pass") != std::string::npos);
}

TEST_CASE("verify: a None prediction exits nonzero") {
  const RunResult r = run_cli("verify --N 2 --alpha 1 --beta 1 --kind pst");
  CHECK(r.code == 2);
  CHECK(r.err.find("nothing to verify") != std::string::npos);
}

TEST_CASE("verify: cross-check against the matrix-exponential oracle") {
  const RunResult r =
      run_cli("verify --N 3 --alpha 1 --beta 1 --kind pst --cross-check 5 --seed 42");
  CHECK(r.code == 0);
  CHECK(r.out.find("cross-check: max |delta| = ") != std::string::npos);

  // seeded, so byte-identical
  const RunResult again =
      run_cli("verify --N 3 --alpha 1 --beta 1 --kind pst --cross-check 5 --seed 42");
  CHECK(again.out == r.out);
}

TEST_CASE("scan: max nu_sq sits at t ~ pi for the NN chain") {
  const fs::path out = work_dir() / "scan.csv";
  const RunResult r = run_cli("scan --N 5 --alpha 0 --beta 1 --t-max 6.2832 --steps 1000 "
                              "--time-units abs --output " +
                              out.string());
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 1001);
  CHECK(rows[0] == std::vector<std::string>{"t", "mu_sq", "nu_sq", "leakage"});
  double best_t = -1.0;
  double best_nu = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double t = std::strtod(rows[i][0].c_str(), nullptr);
    const double nu = std::strtod(rows[i][2].c_str(), nullptr);
    if (nu > best_nu) {
      best_nu = nu;
      best_t = t;
    }
  }
  CHECK(std::abs(best_t - 3.141592653589793) < 0.02);
  CHECK(best_nu > 0.999);
}

TEST_CASE("scan: time units default to multiples of pi/beta") {
  const fs::path out = work_dir() / "scan_units.csv";
  const RunResult r =
      run_cli("scan --N 1 --alpha 0 --beta 2 --t-max 1 --steps 3 --output " + out.string());
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 4);
  // t-max = 1 * pi/beta = pi/2
  CHECK(std::abs(std::strtod(rows[3][0].c_str(), nullptr) - 1.5707963267948966) < 1e-15);
}

TEST_CASE("outputs are byte-identical across repeated runs") {
  const fs::path a = work_dir() / "scan_a.json";
  const fs::path b = work_dir() / "scan_b.json";
  const std::string args = "scan --N 6 --alpha 1/3 --beta 1 --t-max 4 --steps 500 --format json";
  REQUIRE(run_cli(args + " --output " + a.string()).code == 0);
  REQUIRE(run_cli(args + " --output " + b.string()).code == 0);
  const std::string content = slurp(a);
  CHECK(!content.empty());
  CHECK(content == slurp(b));
}

TEST_CASE("export: golden CSV and JSON") {
  const RunResult csv = run_cli("export --N 1 --alpha 1 --beta 1");
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "n,j1,j2,b\n"
        "0,,,0.25\n"
        "1,0.5,,0.25\n");

  const RunResult json = run_cli("export --N 2 --alpha 0 --beta 1 --format json");
  CHECK(json.code == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["spec"]["N"] == 2);
  CHECK(doc["spec"]["alpha"] == "0");
  CHECK(doc["result"]["b"] == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("simulate: default units give t = pi/beta") {
  const fs::path out = work_dir() / "state.csv";
  const RunResult r = run_cli("simulate --N 1 --alpha 0 --beta 1 --t 1 --site 0 --output " +
                              out.string());
  REQUIRE(r.code == 0);
  const auto rows = parse_csv(slurp(out));
  REQUIRE(rows.size() == 3);
  CHECK(std::abs(std::strtod(rows[2][3].c_str(), nullptr) - 1.0) < 1e-12);  // prob at site N
}

TEST_CASE("negative rationals and rational beta work end to end") {
  // alpha/beta = (-3/5)/(1/5) = -3; p odd, q = 1, N = 3: FR at pi/(2 beta) = 5 pi/2
  const RunResult r = run_cli("verify --N 3 --alpha -3/5 --beta 1/5 --kind fr --tol 1e-7");
  CHECK(r.code == 0);
  CHECK(r.out.find("p=-3, q=1") != std::string::npos);
  CHECK(r.out.find("7.8539816339744828") != std::string::npos);
  CHECK(r.out.find("-> pass") != std::string::npos);

  const RunResult eq = run_cli("predict --N 3 --alpha=-1 --beta=-1 --kind pst");
  CHECK(eq.code == 0);
  CHECK(eq.out.find("PST at t = 1*pi/beta") != std::string::npos);
}

TEST_CASE("N at the hard cap still runs") {
  const RunResult r = run_cli("predict --N 100 --alpha 1 --beta 1 --kind pst");
  CHECK(r.code == 0);
  CHECK(r.out.find("PST") != std::string::npos);

  const fs::path out = work_dir() / "cap.csv";
  CHECK(run_cli("simulate --N 100 --alpha 1/2 --beta 1 --t 1 --output " + out.string()).code == 0);
  const auto rows = parse_csv(slurp(out));
  CHECK(rows.size() == 102);
}

TEST_CASE("error paths: nonzero exit, one-line stderr, no partial file") {
  SUBCASE("malformed rational") {
    const fs::path out = work_dir() / "never_written_1.csv";
    const RunResult r = run_cli("export --N 2 --alpha 1/0 --beta 1 --output " + out.string());
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error: ", 0) == 0);
    CHECK(!r.err.empty());
    CHECK(!fs::exists(out));
  }
  SUBCASE("N out of range") {
    CHECK(run_cli("export --N 0 --alpha 1 --beta 1").code == 1);
    CHECK(run_cli("export --N 101 --alpha 1 --beta 1").code == 1);
  }
  SUBCASE("beta = 0 with pi/beta time units") {
    const RunResult r = run_cli("simulate --N 2 --alpha 1 --beta 0 --t 1");
    CHECK(r.code == 1);
    CHECK(r.err.find("beta") != std::string::npos);
  }
  SUBCASE("beta = 0 prediction") {
    CHECK(run_cli("predict --N 2 --alpha 1 --beta 0 --kind pst").code == 1);
  }
  SUBCASE("unwritable output path") {
    const RunResult r = run_cli(
        "export --N 2 --alpha 1 --beta 1 --output /nonexistent_dir_73/out.csv");
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open output file") != std::string::npos);
    CHECK(!fs::exists("/nonexistent_dir_73/out.csv"));
  }
  SUBCASE("unknown subcommand / missing required option") {
    CHECK(run_cli("frobnicate").code != 0);
    CHECK(run_cli("scan --N 3 --alpha 0 --beta 1").code != 0);  // missing --t-max
  }
  SUBCASE("site out of range") {
    const RunResult r = run_cli("simulate --N 3 --alpha 0 --beta 1 --t 1 --site 4");
    CHECK(r.code == 1);
    CHECK(r.err.find("site") != std::string::npos);
  }
  SUBCASE("too few scan steps") {
    CHECK(run_cli("scan --N 3 --alpha 0 --beta 1 --t-max 2 --steps 1").code == 1);
  }
}
