#pragma once

// Command front end. `run` executes one configured command, writes its
// payload to `out` and returns the verdict; argument parsing lives in the
// executable.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "eopart/classes.hpp"

namespace eopart::cli {

enum class Command { Count, IdentityCheck, RecurrenceCheck, BijectionCheck, Series, List, Table };
enum class OutputFormat { Table, Json, Csv };

struct RunConfig {
  Command command = Command::Count;
  std::optional<Family> family;
  std::optional<int> i;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> n;
  std::int64_t max_n = 0;
  std::optional<std::int64_t> max_r;
  std::optional<std::int64_t> max_s;
  std::optional<std::size_t> order;
  std::optional<std::string> transform;  // bijection-check: one case, e.g. "G-EvenMin"
  bool refined = false;
  OutputFormat format = OutputFormat::Table;
  std::optional<std::string> output;
};

struct VerdictSummary {
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::optional<std::string> first_failure;
  double wall_seconds = 0.0;

  [[nodiscard]] bool ok() const noexcept { return passed == attempted; }
};

// Bad or missing options for the chosen command.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOverflow = 3;
inline constexpr int kExitIo = 4;

// Throws UsageError for an invalid config; CountOverflow propagates.
VerdictSummary run(const RunConfig& config, std::ostream& out);

// One-line summary for standard error, including wall time.
[[nodiscard]] std::string summary_line(const VerdictSummary& summary);

}  // namespace eopart::cli
