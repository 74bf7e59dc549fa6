#pragma once

// Batch verification commands behind the `cay` executable. Each command
// returns a Report; the executable only parses flags and prints.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/cayley_engine.hpp"

namespace cay::cli {

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
  std::string name;
  Status status;
  std::string detail;
};

struct Report {
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;
  std::optional<int> degree;
  std::optional<std::map<std::size_t, uint64_t>> histogram;
  nlohmann::json data;  // null when absent
  double elapsed_ms = 0.0;
  /// Extra body lines for text output only.
  std::vector<std::string> text_lines;

  void add(std::string name, bool pass, std::string detail = {});
  void skip(std::string name, std::string detail);

  /// 0 iff every non-skipped check passes, else 1.
  int exit_code() const;
  nlohmann::json to_json(bool include_time = true) const;
  std::string to_text() const;
};

/// Thrown for bad flags or parameters; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error kinds that indicate bad input rather than a failed verification.
bool is_usage_error(ErrorKind kind);

struct SlnOptions {
  long long n = 0;
  std::optional<uint64_t> prime;
  std::optional<std::size_t> zeta;
  uint64_t seed = 0;
  std::size_t samples = 20;
};

struct G2Options {
  uint64_t prime = 1009;
  bool brute = false;
  uint64_t seed = 0;
  std::size_t samples = 20;
};

struct SexticOptions {
  bool check = false;
  uint64_t prime = 1009;
  std::size_t samples = 100;
  uint64_t seed = 0;
};

struct BruteOptions {
  std::string map;
  std::optional<uint64_t> prime;
  uint64_t seed = 0;
  bool serial = false;
};

struct ClassicalOptions {
  long long n = 3;
  std::size_t trials = 100;
  uint64_t seed = 0;
};

Report verify_sln(const SlnOptions& opts);
Report verify_g2(const G2Options& opts);
Report sextic(const SexticOptions& opts);
Report brute_degree(const BruteOptions& opts);
Report table();
Report classical(const ClassicalOptions& opts);

/// Default prime for a brute-degree map name.
uint64_t default_brute_prime(const std::string& map);

/// The maps accepted by brute-degree: pgl2, sl2, sl3, sl4, g2,
/// sl2-sq-isogeny and product:<a>,<b>. UsageError on unknown names.
MapCandidate builtin_map(const std::string& name, uint64_t p);

}  // namespace cay::cli
