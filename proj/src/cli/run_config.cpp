#include "fareycorr/cli/run_config.hpp"

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "fareycorr/farey.hpp"

namespace fareycorr::cli {
namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> table{
      {"farey-dump", Command::kFareyDump},   {"g2-table", Command::kG2Table},
      {"nu-level", Command::kNuLevel},       {"empirical", Command::kEmpirical},
      {"compare", Command::kCompare},        {"expsum-check", Command::kExpsumCheck},
      {"asymptotic", Command::kAsymptotic},
  };
  return table;
}

}  // namespace

Command parse_command(const std::string& name) {
  const auto it = command_table().find(name);
  if (it == command_table().end()) throw UsageError("unknown command '" + name + "'");
  return it->second;
}

std::string command_name(Command command) {
  for (const auto& [name, value] : command_table()) {
    if (value == command) return name;
  }
  return "unknown";
}

OutputFormat RunConfig::effective_format() const {
  if (format) return *format;
  if (command == Command::kNuLevel) return OutputFormat::kJson;
  if (command == Command::kEmpirical && box) return OutputFormat::kJson;
  return OutputFormat::kCsv;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Farey fraction correlations: empirical counts and limiting formulas"};
  RunConfig config;
  std::string command;
  std::string box_text;
  std::string format_text;

  std::string commands;
  for (const auto& [name, value] : command_table()) commands += (commands.empty() ? "" : ", ") + name;
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("--Q", config.order, "Farey order");
  app.add_option("--nu", config.nu, "Correlation level (>= 2)");
  app.add_option("--lambda-max", config.lambda_max, "Upper end of the lambda range");
  app.add_option("--bins", config.bins, "Number of histogram bins / grid points");
  app.add_option("--box", box_text, "Box as lo:hi per axis, comma separated");
  app.add_option("--tol", config.tol, "Absolute area tolerance for nu-level");
  app.add_option("--mc-samples", config.mc_samples, "Monte Carlo samples per term (nu-level)");
  app.add_option("--seed", config.seed, "Random seed");
  app.add_option("--workers", config.workers, "Worker threads");
  app.add_option("--r-max", config.r_max, "Largest |r| for expsum-check (default: Q)");
  app.add_option("--out", config.output_path, "Output file (default: standard output)");
  app.add_option("--format", format_text, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.command = parse_command(command);
  if (!box_text.empty()) {
    try {
      config.box = BoxRegion::parse(box_text);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (!format_text.empty()) {
    if (format_text == "csv") {
      config.format = OutputFormat::kCsv;
    } else if (format_text == "json") {
      config.format = OutputFormat::kJson;
    } else {
      throw UsageError("--format must be csv or json");
    }
  }
  if (config.box && app.count("--nu") == 0) config.nu = config.box->nu();
  validate(config);
  return config;
}

void validate(const RunConfig& config) {
  if (config.order < 1) throw UsageError("--Q must be at least 1");
  if (config.nu < 2) throw UsageError("--nu must be at least 2");
  if (!(config.lambda_max > 0.0)) throw UsageError("--lambda-max must be positive");
  if (config.bins < 1) throw UsageError("--bins must be at least 1");
  if (!(config.tol > 0.0)) throw UsageError("--tol must be positive");
  if (config.workers < 1 || config.workers > 256) throw UsageError("--workers must be in [1, 256]");
  if (config.r_max < 0) throw UsageError("--r-max must be non-negative");
  if (config.mc_samples == 1) throw UsageError("--mc-samples must be 0 or at least 2");
  if (config.box && config.box->nu() != config.nu) {
    throw UsageError("--box has " + std::to_string(config.box->dimension()) +
                     " axes but --nu needs " + std::to_string(config.nu - 1));
  }
  if (config.command == Command::kNuLevel && !config.box) {
    throw UsageError("nu-level needs --box");
  }
}

}  // namespace fareycorr::cli
