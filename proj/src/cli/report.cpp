#include "fareycorr/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "fareycorr/errors.hpp"
#include "fareycorr/farey.hpp"
#include "fareycorr/format.hpp"
#include "fareycorr/pair_correlation.hpp"
#include "fareycorr/sieve.hpp"
#include "fareycorr/spacing.hpp"

namespace fareycorr::cli {
namespace {

std::string csv_cell(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (const char c : v) {
            if (c == '"') quoted += '"';
            quoted += c;
          }
          return quoted + "\"";
        } else {
          return std::to_string(v);
        }
      },
      value);
}

}  // namespace

std::string json_string(const std::string& text) {
  std::string out = "\"";
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string to_json(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          // JSON has no infinities or NaN.
          return std::isfinite(v) ? format_real(v) : "null";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return json_string(v);
        } else {
          return std::to_string(v);
        }
      },
      value);
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    out << (c ? "," : "") << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  out << "[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? ", " : "") << json_string(table.columns[c]) << ": " << to_json(table.rows[r][c]);
    }
    out << "}";
  }
  out << "\n]\n";
}

JsonObject& JsonObject::add(const std::string& key, const Value& value) {
  fields_.emplace_back(key, to_json(value));
  return *this;
}

JsonObject& JsonObject::add_raw(const std::string& key, std::string json) {
  fields_.emplace_back(key, std::move(json));
  return *this;
}

std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    out += (i ? ", " : "") + json_string(fields_[i].first) + ": " + fields_[i].second;
  }
  return out + "}";
}

double CorrelationReport::abs_deviation(std::size_t i) const {
  return std::abs(empirical.at(i) - theoretical.at(i));
}

double CorrelationReport::rel_deviation(std::size_t i) const {
  const double diff = abs_deviation(i);
  if (theoretical[i] != 0.0) return diff / std::abs(theoretical[i]);
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

double CorrelationReport::max_abs_deviation() const {
  double m = 0.0;
  for (std::size_t i = 0; i < bins(); ++i) m = std::max(m, abs_deviation(i));
  return m;
}

double CorrelationReport::max_rel_deviation() const {
  double m = 0.0;
  for (std::size_t i = 0; i < bins(); ++i) m = std::max(m, rel_deviation(i));
  return m;
}

Table CorrelationReport::to_table() const {
  Table table{{"bin_lo", "bin_hi", "count", "empirical", "theoretical", "abs_deviation",
               "rel_deviation"},
              {}};
  for (std::size_t i = 0; i < bins(); ++i) {
    table.rows.push_back({edges[i], edges[i + 1], counts[i], empirical[i], theoretical[i],
                          abs_deviation(i), rel_deviation(i)});
  }
  return table;
}

std::string CorrelationReport::to_json() const {
  std::ostringstream rows;
  write_json(rows, to_table());
  std::string bins_json = rows.str();
  while (!bins_json.empty() && bins_json.back() == '\n') bins_json.pop_back();
  return JsonObject()
             .add("command", std::string("compare"))
             .add("Q", order)
             .add("N", n_points)
             .add("nu", std::int64_t{2})
             .add("lambda_max", lambda_max)
             .add_raw("bins", bins_json)
             .add("max_abs_deviation", max_abs_deviation())
             .add("max_rel_deviation", max_rel_deviation())
             .str() +
         "\n";
}

CorrelationReport compare_pair_correlation(std::int64_t order, double lambda_max, int bins,
                                           unsigned workers) {
  const std::vector<double> points = unit_interval_points(order);
  const auto histogram = pair_correlation_histogram(points, lambda_max, bins, workers);
  const SieveTables tables = build_sieves(g2_required_limit(lambda_max));

  CorrelationReport report;
  report.order = order;
  report.n_points = points.size();
  report.lambda_max = lambda_max;
  const double bin_width = lambda_max / bins;
  report.edges.push_back(histogram.front().lo);
  for (const HistogramBin& bin : histogram) {
    report.edges.push_back(bin.hi);
    report.counts.push_back(bin.count);
    report.empirical.push_back(bin.density);
    const double lo = std::max(bin.lo, std::numeric_limits<double>::min());
    report.theoretical.push_back(g2_integral(tables, lo, bin.hi) / bin_width);
  }
  return report;
}

}  // namespace fareycorr::cli
