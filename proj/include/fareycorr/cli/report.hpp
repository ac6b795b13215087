#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fareycorr::cli {

using Value = std::variant<std::int64_t, std::uint64_t, double, std::string>;

/// Column-ordered rows, written as CSV (header line first) or as a JSON array
/// of objects. Reals always carry 17 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

void write_csv(std::ostream& out, const Table& table);
void write_json(std::ostream& out, const Table& table);

std::string to_json(const Value& value);
std::string json_string(const std::string& text);

/// Insertion-ordered JSON object builder.
class JsonObject {
 public:
  JsonObject& add(const std::string& key, const Value& value);
  JsonObject& add_raw(const std::string& key, std::string json);
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

/// Empirical pair correlation of F_Q against the limiting density g2 on a
/// uniform grid of bins over [0, lambda_max). Deviations are derived from the
/// two stored arrays on demand.
struct CorrelationReport {
  std::int64_t order = 0;
  std::uint64_t n_points = 0;
  double lambda_max = 0.0;
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;
  std::vector<double> empirical;    // bin densities of F_Q
  std::vector<double> theoretical;  // bin averages of g2

  std::size_t bins() const noexcept { return empirical.size(); }
  double abs_deviation(std::size_t i) const;
  /// |e - t| / t; 0 when both vanish, infinity when only t does.
  double rel_deviation(std::size_t i) const;
  double max_abs_deviation() const;
  double max_rel_deviation() const;

  Table to_table() const;
  std::string to_json() const;
};

CorrelationReport compare_pair_correlation(std::int64_t order, double lambda_max, int bins,
                                           unsigned workers);

}  // namespace fareycorr::cli
