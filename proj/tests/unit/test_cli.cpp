#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli/commands.hpp"
#include "cli/output.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace krein::cli;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("krein_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

struct Outcome {
  int code;
  std::string log, err;
};

Outcome invoke(const std::string& command, const json& config, const fs::path& out,
               std::optional<int> threads = {}) {
  RunRequest req;
  req.command = command;
  req.config = config;
  req.out = out;
  req.threads = threads;
  std::ostringstream log, err;
  const int code = run(req, log, err);
  return {code, log.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(slurp(p));
  for (std::string line; std::getline(is, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

const json kQ0Scan = json::parse(R"({
  "problem": {"kind": "q0"},
  "form": "necessary",
  "region": {"kind": "near_zero", "R": 0.01, "decades": 3, "radial_points": 13, "angles": [1.5707963267948966]}
})");

}  // namespace

TEST_CASE("number formatting") {
  CHECK(fmt(1.0) == "1.000000000000e+00");
  CHECK(fmt(-0.0) == "0.000000000000e+00");
  CHECK(fmt(std::nan("")) == "nan");
  CHECK(fmt(-INFINITY) == "-inf");
  CHECK(problem_hash(json{{"b", 1}, {"a", 2}}) == problem_hash(json::parse(R"({"a":2,"b":1})")));
}

TEST_CASE("m-eval of the free problem at lambda = i") {
  TempDir d;
  const auto r = invoke("m-eval", json::parse(R"({"problem": {"kind": "free"}, "lambdas": [[0, 1]]})"), d.path);
  REQUIRE(r.code == kOk);
  const auto rows = read_csv(d.path / "m.csv");
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"lambda_re", "lambda_im", "side", "m_re", "m_im"});
  CHECK(std::stod(rows[1][3]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  CHECK(std::stod(rows[1][4]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  const json meta = json::parse(slurp(d.path / "m.meta.json"));
  CHECK(meta.contains("problem_hash"));
}

TEST_CASE("configuration errors exit with status 2 and write nothing") {
  TempDir d;
  auto r = invoke("m-eval", json::parse(R"({"problem": {"kind": "power", "alpha": -1.5}, "lambdas": [[0, 1]]})"), d.path);
  CHECK(r.code == kConfigError);
  CHECK(r.err.find("alpha > -1") != std::string::npos);
  r = invoke("m-eval", json::parse(R"({"problem": {"kind": "free"}, "lambdas": [[0, 1]], "lamdbas": 3})"), d.path);
  CHECK(r.code == kConfigError);
  CHECK(r.err.find("lamdbas") != std::string::npos);
  r = invoke("m-eval", json::parse(R"({"command": "classify", "problem": {"kind": "free"}, "lambdas": [[0, 1]]})"), d.path);
  CHECK(r.code == kConfigError);
  r = invoke("m-eval", json::parse(R"({"problem": {"kind": "finite_zone", "zone": {"mu_r0": 0, "mu_l": [2], "mu_r": [1], "xi": [1.5], "eps": [1]}}})"), d.path);
  CHECK(r.code == kConfigError);
  CHECK(fs::is_empty(d.path));
}

TEST_CASE("numerical failures exit with status 1 and leave error.json") {
  TempDir d;
  const auto r = invoke("m-eval", json::parse(R"({"problem": {"kind": "numeric", "q": {"kind": "constant", "value": 0}}, "lambdas": [[1, 0]]})"), d.path);
  CHECK(r.code == kNumericalFailure);
  const json e = json::parse(slurp(d.path / "error.json"));
  CHECK(e["status"] == "numerical_failure");
  CHECK(e["command"] == "m-eval");
  CHECK(!e["code"].get<std::string>().empty());
}

TEST_CASE("necessary scan of q0 reports the y^(-1/2) growth") {
  TempDir d;
  REQUIRE(invoke("criterion-scan", kQ0Scan, d.path).code == kOk);
  const json meta = json::parse(slurp(d.path / "scan.meta.json"));
  CHECK(meta["summary"]["growth_exponent"].get<double>() == doctest::Approx(0.5).epsilon(0.06));
  CHECK(read_csv(d.path / "scan.csv").size() == 14);
}

TEST_CASE("outputs are bit-identical across runs and thread counts") {
  TempDir a, b, c;
  REQUIRE(invoke("criterion-scan", kQ0Scan, a.path, 1).code == kOk);
  REQUIRE(invoke("criterion-scan", kQ0Scan, b.path, 1).code == kOk);
  REQUIRE(invoke("criterion-scan", kQ0Scan, c.path, 3).code == kOk);
  CHECK(slurp(a.path / "scan.csv") == slurp(b.path / "scan.csv"));
  CHECK(slurp(a.path / "scan.csv") == slurp(c.path / "scan.csv"));

  const json zone = json::parse(R"({"seed": 7, "problem": {"kind": "finite_zone", "random_gaps": 3, "random_seed": 11}})");
  REQUIRE(invoke("zone-build", zone, a.path).code == kOk);
  REQUIRE(invoke("zone-build", zone, b.path).code == kOk);
  CHECK(slurp(a.path / "zone.json") == slurp(b.path / "zone.json"));
}

TEST_CASE("atomic writes leave no temporaries behind") {
  TempDir d;
  atomic_write(d.path / "x.txt", "first");
  atomic_write(d.path / "x.txt", "second");
  CHECK(slurp(d.path / "x.txt") == "second");
  int files = 0;
  for (const auto& e : fs::directory_iterator(d.path)) files += e.is_regular_file();
  CHECK(files == 1);
  fs::create_directories(d.path / "busy" / "inner");
  CHECK_THROWS_AS(atomic_write(d.path / "busy", "z"), OutputError);
  for (const auto& e : fs::directory_iterator(d.path)) CHECK(e.path().filename().string().find("tmp") == std::string::npos);
}
