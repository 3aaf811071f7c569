#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kunneth/e2.hpp"

namespace kunneth::cli {

enum ExitCode : int { kOk = 0, kValidation = 2, kTruncation = 3, kInconsistent = 4 };

/// One run of `e2` or `bar-dims`.  Factors are "r1", "s1" or "file:<path>"
/// (a module over Ass in the JSON module format).
struct RunConfig {
  std::string left = "r1";
  std::string right = "r1";
  int points_first = 2;
  int points_last = 2;
  std::optional<int> max_degree;  // default: top possible degree for the factors
  bool characters = false;
  std::string format = "table";  // table | json | csv
  std::string cache_dir;          // empty: no disk cache
  int threads = 1;
  std::string resolution = "auto";  // auto | bar
};

/// Validation failures of a config or an input file (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// The requested computation does not fit the available truncation (exit code 3).
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "3" or "2-4".
std::pair<int, int> parse_points(const std::string& s);
/// Reads the same field names as the flags: left, right, points, max_degree,
/// characters, format, cache_dir, threads, resolution.
void apply_config_json(RunConfig& config, const nlohmann::json& j);
void validate(const RunConfig& config);

/// Top degree used when max_degree is not given: k - 1 for R x R, plus one per
/// circle or file factor (0 when k = 0).
int default_max_degree(const RunConfig& config, int k);

struct E2Result {
  E2Table e2;
  BettiTable betti;
  bool characters = false;
};

/// Runs the pipeline for every k in the configured range.
std::vector<E2Result> run_e2(const RunConfig& config);

std::string format_table(const RunConfig& config, const std::vector<E2Result>& results);
nlohmann::json to_json(const RunConfig& config, const E2Result& result);
std::string format_json(const RunConfig& config, const std::vector<E2Result>& results);
std::string format_csv(const std::vector<E2Result>& results);

/// Entry point shared by the executable and the tests; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kunneth::cli
