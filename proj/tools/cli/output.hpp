#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace krein::cli {

// Raised when an output file cannot be written; carries the path.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fixed 13-significant-digit scientific notation; NaN and infinities are
// spelled nan, inf, -inf.
std::string fmt(double x);

// Writes to a sibling temporary file and renames it over `path`.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

// FNV-1a over the compact dump of a JSON value (keys are sorted).
std::uint64_t fnv1a(const std::string& s);
std::string problem_hash(const nlohmann::json& problem);

class Csv {
 public:
  explicit Csv(std::vector<std::string> columns);
  // Cells are preformatted strings; use fmt for numbers.
  void row(std::vector<std::string> cells);
  std::string str() const;
  std::size_t rows() const { return rows_; }

 private:
  std::size_t width_;
  std::size_t rows_ = 0;
  std::string body_;
};

// CSV plus <name>.meta.json next to it.
void emit_table(const std::filesystem::path& dir, const std::string& name, const Csv& csv,
                const nlohmann::json& meta);
void emit_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace krein::cli
