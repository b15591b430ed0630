#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace krein::cli {

enum ExitCode { kOk = 0, kNumericalFailure = 1, kConfigError = 2 };

struct RunRequest {
  std::string command;
  nlohmann::json config;
  std::filesystem::path out = ".";
  std::optional<std::uint64_t> seed;  // overrides config "seed"
  std::optional<int> threads;         // overrides config "threads"
};

// Executes one command. Numerical failures leave error.json in the output
// directory; configuration errors write nothing.
int run(const RunRequest& req, std::ostream& log, std::ostream& err);

// Full command line: `krein <command> --config <path> [--out dir] [--seed n] [--threads n]`.
int run_cli(int argc, char** argv, std::ostream& log, std::ostream& err);

}  // namespace krein::cli
