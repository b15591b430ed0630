#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "krein/contour.hpp"
#include "krein/criteria.hpp"
#include "krein/errors.hpp"
#include "krein/mcatalog.hpp"

namespace krein::cli {

using json = nlohmann::json;

// Anything wrong with the configuration itself; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Typed access to a JSON object that remembers which keys were read, so
// that leftovers can be rejected as unknown.
class Reader {
 public:
  Reader(const json& j, std::string path);

  bool has(const std::string& key) const;
  const json& raw(const std::string& key);
  double number(const std::string& key);
  double number(const std::string& key, double fallback);
  double positive(const std::string& key, double fallback);
  int integer(const std::string& key, int fallback);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key);
  std::string string(const std::string& key, const std::string& fallback);
  std::vector<double> numbers(const std::string& key);
  Reader object(const std::string& key);
  std::optional<Reader> optional_object(const std::string& key);
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& key, const std::string& why) const;

  // Throws ConfigError naming the first key that was never read.
  void finish() const;

 private:
  const json& at(const std::string& key);
  const json* j_;
  std::string path_;
  std::set<std::string> used_;
};

Coefficient parse_coefficient(Reader r);

// Problem block. Catalog kinds map to closed forms; "numeric" and
// "decaying" integrate the given coefficients.
struct ProblemSpec {
  std::string kind;
  EvaluatorKind evaluator;
  std::optional<FullLineProblem> full_line;  // present when a finite-difference model exists
  bool even = false;
  json tolerances;  // echoed in sidecars
};

ProblemSpec parse_problem(Reader r);

ScanRegion parse_region(Reader r);
contour::Rect parse_rect(Reader r);

struct CommonSettings {
  std::uint64_t seed = 1;
  int threads = 1;
};

// Accepted spellings: "m-eval", "criterion-scan", "classify", "zone-build",
// "eigs-find", "discrete-spectrum", "discrete-functional".
const std::vector<std::string>& command_names();

}  // namespace krein::cli
