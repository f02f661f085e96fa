#include "closure/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace closure {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

namespace {

// Dataset names come from file prefixes; quote only when CSV requires it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const EvalReport> reports) {
  out << kReportCsvHeader << '\n';
  for (const auto& rep : reports) {
    for (const auto& r : rep.results) {
      out << csv_field(rep.dataset) << ',' << rep.k << ',' << format_real(rep.train_fraction) << ','
          << method_name(r.method) << ',' << format_real(r.pr_auc) << ',' << format_real(r.baseline)
          << ',' << format_real(r.performance) << ',' << r.candidates << ',' << r.positives << '\n';
    }
  }
}

void write_json(std::ostream& out, std::span<const EvalReport> reports) {
  // Values go through the same %.6g rounding as the CSV so both formats
  // carry identical numbers.
  auto real = [](double v) { return std::stod(format_real(v)); };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& rep : reports) {
    for (const auto& r : rep.results) {
      nlohmann::ordered_json row;
      row["dataset"] = rep.dataset;
      row["k"] = rep.k;
      row["train_frac"] = real(rep.train_fraction);
      row["method"] = std::string(method_name(r.method));
      row["pr_auc"] = real(r.pr_auc);
      row["baseline"] = real(r.baseline);
      row["performance"] = real(r.performance);
      row["candidates"] = r.candidates;
      row["positives"] = r.positives;
      rows.push_back(std::move(row));
    }
  }
  out << rows.dump(2) << '\n';
}

void write_stats_csv(std::ostream& out, const StatsRecord& stats) {
  out << stats.nodes << ',' << stats.skeleton_edges << ',' << stats.simplices << '\n';
}

void write_stats_json(std::ostream& out, const std::string& dataset, const StatsRecord& stats) {
  nlohmann::ordered_json j;
  j["dataset"] = dataset;
  j["nodes"] = stats.nodes;
  j["edges"] = stats.skeleton_edges;
  j["simplices"] = stats.simplices;
  out << j.dump(2) << '\n';
}

}  // namespace closure
