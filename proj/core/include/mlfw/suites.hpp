#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlfw {

/// Bad flags or parameters outside the safe ranges; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Range {
  int lo = 0;
  int hi = 0;
};
/// "2..9" or "5".
Range parse_range(const std::string& text);
/// "3,5,7".
std::vector<std::uint32_t> parse_list(const std::string& text);

const std::vector<std::string>& suite_names();  // canonical order, without "all"

struct RunConfig {
  std::string suite = "all";
  Range d{2, 9};
  /// Genus range; each suite has its own default when unset.
  std::optional<Range> g;
  std::vector<std::uint32_t> primes{3, 5};
  /// Defaults: 16 for p-adic work, 8 for Lubin-Tate series.
  std::optional<int> precision;
  int degree = 8;
  std::vector<int> residue_degrees{1, 2};
  std::vector<std::uint32_t> moduli{2, 3};
  std::size_t samples = 20;
  std::uint64_t seed = 42;
  bool allow_large = false;
  bool timings = false;
};

/// Throws UsageError naming the offending flag.
void validate(const RunConfig& config);

struct CheckRecord {
  std::string suite;
  std::string name;
  std::string inputs;    // JSON text
  std::string expected;  // JSON text
  std::string observed;  // JSON text
  bool pass = false;
  double runtime_ms = 0;
};

struct Report {
  std::string suite;
  RunConfig config;
  std::vector<CheckRecord> records;

  bool passed() const;
  /// Deterministic given (config, seed); runtimes only when config.timings.
  std::string to_json() const;
  /// One line per record plus a verdict line.
  std::string summary() const;
};

Report run_suite(const RunConfig& config);

std::string tool_version();

}  // namespace mlfw
