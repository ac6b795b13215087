#include "fareycorr/cli/execute.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fareycorr/cli/report.hpp"
#include "fareycorr/errors.hpp"
#include "fareycorr/expsum.hpp"
#include "fareycorr/farey.hpp"
#include "fareycorr/format.hpp"
#include "fareycorr/nu_level.hpp"
#include "fareycorr/numeric.hpp"
#include "fareycorr/pair_correlation.hpp"
#include "fareycorr/region_area.hpp"
#include "fareycorr/sieve.hpp"
#include "fareycorr/spacing.hpp"

namespace fareycorr::cli {
namespace {

// Tolerances of the exponential-sum audit, relative to N_Q.
constexpr double kExpsumAbsTolerance = 1e-6;
constexpr double kExpsumImagTolerance = 1e-9;

std::string box_json(const BoxRegion& box) {
  std::string out = "[";
  for (std::size_t j = 0; j < box.dimension(); ++j) {
    out += (j ? ", [" : "[") + format_real(box[j].lo) + ", " + format_real(box[j].hi) + "]";
  }
  return out + "]";
}

void write_table(std::ostream& out, const Table& table, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int farey_dump(const RunConfig& config, std::ostream& out) {
  if (config.order > FareySequence::kDefaultMaxOrder) {
    throw SizingError("Farey order exceeds the configured maximum");
  }
  if (config.effective_format() == OutputFormat::kCsv) {
    out << "a,q,value\n";
    for (const FareyFraction& f : FareyRange(config.order)) {
      out << f.a << ',' << f.q << ',' << format_real(f.value()) << '\n';
    }
    return kExitOk;
  }
  Table table{{"a", "q", "value"}, {}};
  for (const FareyFraction& f : FareyRange(config.order)) {
    table.rows.push_back({f.a, f.q, f.value()});
  }
  write_json(out, table);
  return kExitOk;
}

int g2_table(const RunConfig& config, std::ostream& out) {
  const SieveTables tables = build_sieves(g2_required_limit(config.lambda_max));
  Table table{{"lambda", "g2", "g_gue", "g_poisson"}, {}};
  for (int i = 1; i <= config.bins; ++i) {
    const double lambda = i == config.bins ? config.lambda_max : config.lambda_max * i / config.bins;
    table.rows.push_back({lambda, g2(tables, lambda), g_reference(ReferenceModel::kGue, lambda),
                          g_reference(ReferenceModel::kPoisson, lambda)});
  }
  write_table(out, table, config.effective_format());
  return kExitOk;
}

int nu_level(const RunConfig& config, std::ostream& out) {
  NuLevelOptions options;
  options.workers = config.workers;
  std::vector<CorrelationTerm> terms;
  std::vector<AreaEstimate> areas;
  const NuLevelResult result =
      nu_level_measure(config.nu, *config.box, config.tol, options, terms, areas);

  JsonObject record;
  record.add("nu", std::int64_t{result.nu})
      .add_raw("box", box_json(result.box))
      .add("value", result.value)
      .add("error_bound", result.error_bound)
      .add("term_count", static_cast<std::uint64_t>(result.term_count))
      .add("tol", result.tol)
      .add("lambda", result.lambda);

  double mc_value = 0.0;
  double mc_variance = 0.0;
  if (config.mc_samples > 0) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const MonteCarloEstimate mc = monte_carlo_term_area(terms[i], *config.box, config.mc_samples,
                                                          splitmix64(config.seed + i));
      mc_value += 2.0 * mc.value;
      mc_variance += 4.0 * mc.std_error * mc.std_error;
    }
    record.add_raw("monte_carlo", JsonObject()
                                      .add("value", mc_value)
                                      .add("std_error", std::sqrt(mc_variance))
                                      .add("samples_per_term", config.mc_samples)
                                      .add("seed", config.seed)
                                      .str());
  }

  if (config.effective_format() == OutputFormat::kJson) {
    out << record.str() << '\n';
    return kExitOk;
  }
  Table table{{"nu", "box", "value", "error_bound", "term_count", "tol"},
              {{std::int64_t{result.nu}, result.box.to_string(), result.value, result.error_bound,
                static_cast<std::uint64_t>(result.term_count), result.tol}}};
  if (config.mc_samples > 0) {
    table.columns.insert(table.columns.end(), {"mc_value", "mc_std_error"});
    table.rows[0].insert(table.rows[0].end(), {mc_value, std::sqrt(mc_variance)});
  }
  write_csv(out, table);
  return kExitOk;
}

int empirical(const RunConfig& config, std::ostream& out) {
  const std::vector<double> points = unit_interval_points(config.order);
  if (config.box) {
    const CorrelationEstimate estimate =
        empirical_correlation(points, config.nu, *config.box, config.workers);
    if (config.effective_format() == OutputFormat::kJson) {
      out << JsonObject()
                 .add("Q", config.order)
                 .add("N", estimate.n_points)
                 .add("nu", std::int64_t{estimate.nu})
                 .add_raw("box", box_json(estimate.box))
                 .add("tuple_count", estimate.tuple_count)
                 .add("value", estimate.value)
                 .str()
          << '\n';
    } else {
      write_csv(out, Table{{"Q", "N", "nu", "box", "tuple_count", "value"},
                           {{config.order, estimate.n_points, std::int64_t{estimate.nu},
                             estimate.box.to_string(), estimate.tuple_count, estimate.value}}});
    }
    return kExitOk;
  }
  const auto histogram =
      pair_correlation_histogram(points, config.lambda_max, config.bins, config.workers);
  Table table{{"bin_lo", "bin_hi", "density", "count"}, {}};
  for (const HistogramBin& bin : histogram) {
    table.rows.push_back({bin.lo, bin.hi, bin.density, bin.count});
  }
  write_table(out, table, config.effective_format());
  return kExitOk;
}

int compare(const RunConfig& config, std::ostream& out, std::ostream& log) {
  const CorrelationReport report =
      compare_pair_correlation(config.order, config.lambda_max, config.bins, config.workers);
  if (config.effective_format() == OutputFormat::kJson) {
    out << report.to_json();
  } else {
    write_csv(out, report.to_table());
  }
  log << "compare: Q=" << report.order << " N=" << report.n_points
      << " max_rel_deviation=" << format_real(report.max_rel_deviation()) << '\n';
  return kExitOk;
}

int expsum_check(const RunConfig& config, std::ostream& out, std::ostream& log) {
  if (config.order > FareySequence::kDefaultMaxOrder) {
    throw SizingError("Farey order exceeds the configured maximum");
  }
  const std::int64_t r_max = config.r_max > 0 ? config.r_max : config.order;
  const SieveTables tables = build_sieves(static_cast<std::uint64_t>(config.order));
  std::vector<std::int64_t> rs;
  for (std::int64_t r = -r_max; r <= r_max; ++r) {
    if (r != 0) rs.push_back(r);
  }

  Table table{{"Q", "r", "direct_re", "direct_im", "identity", "abs_error"}, {}};
  bool ok = true;
  double worst = 0.0;
  for (std::int64_t q = 1; q <= config.order; ++q) {
    const FareySequence sequence = farey_sequence(q);
    const double n = static_cast<double>(sequence.size());
    const auto direct = farey_exponential_sums_direct(sequence, rs);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::int64_t identity = farey_exponential_sum_identity(tables, q, rs[i]);
      const double error = std::abs(direct[i] - std::complex<double>(static_cast<double>(identity), 0.0));
      worst = std::max(worst, error / n);
      if (error > kExpsumAbsTolerance * n || std::abs(direct[i].imag()) > kExpsumImagTolerance * n) {
        ok = false;
      }
      table.rows.push_back({q, rs[i], direct[i].real(), direct[i].imag(), identity, error});
    }
  }
  write_table(out, table, config.effective_format());
  log << "expsum-check: max abs_error / N_Q = " << format_real(worst) << (ok ? " (ok)" : " (FAILED)")
      << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int asymptotic(const RunConfig& config, std::ostream& out) {
  std::vector<double> ladder;
  for (double lambda = 10.0; lambda <= config.lambda_max * (1.0 + 1e-12); lambda *= 10.0) {
    ladder.push_back(lambda);
  }
  if (ladder.empty()) ladder.push_back(config.lambda_max);
  const SieveTables tables = build_sieves(g2_required_limit(ladder.back()) + 1);
  const auto points = g2_asymptotic_diagnostic(tables, ladder);
  Table table{{"lambda", "g2", "scaled_deviation", "x", "totient_log_ratio"}, {}};
  for (const AsymptoticPoint& p : points) {
    const double x = p.lambda / kThreeOverPiSquared;
    const double ratio =
        x > 1.0 ? weighted_totient_log_sum(tables, x) * 2.0 * kPiSquared / (3.0 * x * x) : 0.0;
    table.rows.push_back({p.lambda, p.g2, p.scaled_deviation, x, ratio});
  }
  write_table(out, table, config.effective_format());
  return kExitOk;
}

void print_error(std::ostream& err, const std::string& kind, const std::string& message, int code,
                 const double* residual = nullptr) {
  JsonObject object;
  object.add("error", kind).add("message", message).add("exit_code", std::int64_t{code});
  if (residual) object.add("residual", *residual);
  err << object.str() << '\n';
}

}  // namespace

int execute(const RunConfig& config, std::ostream& out, std::ostream& log) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream buffer;
  int code = kExitOk;
  switch (config.command) {
    case Command::kFareyDump: code = farey_dump(config, buffer); break;
    case Command::kG2Table: code = g2_table(config, buffer); break;
    case Command::kNuLevel: code = nu_level(config, buffer); break;
    case Command::kEmpirical: code = empirical(config, buffer); break;
    case Command::kCompare: code = compare(config, buffer, log); break;
    case Command::kExpsumCheck: code = expsum_check(config, buffer, log); break;
    case Command::kAsymptotic: code = asymptotic(config, buffer); break;
  }
  if (config.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file '" + config.output_path + "'");
    file << buffer.str();
    if (!file.flush()) throw Error("failed writing '" + config.output_path + "'");
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  log << command_name(config.command) << ": wall time " << format_real(elapsed.count()) << " s\n";
  return code;
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_command_line(argc, argv);
    if (!config) return kExitOk;
    return execute(*config, out, err);
  } catch (const UsageError& e) {
    print_error(err, "usage", e.what(), kExitUsage);
    return kExitUsage;
  } catch (const DomainError& e) {
    print_error(err, "domain", e.what(), kExitDomain);
    return kExitDomain;
  } catch (const SizingError& e) {
    print_error(err, "sizing", e.what(), kExitSizing);
    return kExitSizing;
  } catch (const RangeError& e) {
    print_error(err, "range", e.what(), kExitRange);
    return kExitRange;
  } catch (const ConvergenceError& e) {
    const double residual = e.residual();
    print_error(err, "convergence", e.what(), kExitConvergence, &residual);
    return kExitConvergence;
  } catch (const std::exception& e) {
    print_error(err, "internal", e.what(), kExitInternal);
    return kExitInternal;
  }
}

}  // namespace fareycorr::cli
