#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fareycorr/box.hpp"
#include "fareycorr/errors.hpp"

namespace fareycorr::cli {

enum class Command { kFareyDump, kG2Table, kNuLevel, kEmpirical, kCompare, kExpsumCheck, kAsymptotic };

enum class OutputFormat { kCsv, kJson };

inline constexpr std::uint64_t kDefaultSeed = 20050118;

/// Bad or inconsistent command-line input.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  Command command = Command::kCompare;
  std::int64_t order = 1000;  // --Q
  int nu = 2;
  double lambda_max = 3.0;
  int bins = 12;
  std::optional<BoxRegion> box;
  double tol = 1e-4;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  std::int64_t r_max = 0;  // expsum-check; 0 means "same as Q"
  std::string output_path;  // empty: standard output
  std::optional<OutputFormat> format;

  /// Format actually written: nu-level and box-mode empirical default to JSON.
  OutputFormat effective_format() const;
};

Command parse_command(const std::string& name);
std::string command_name(Command command);

/// Parses argv (argv[0] is the program name). Throws UsageError. Returns
/// nullopt when --help was requested (help text already printed).
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv);

/// Throws UsageError for any field outside its valid range.
void validate(const RunConfig& config);

}  // namespace fareycorr::cli
