#include "qsl/cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qsl::cli {

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& table) {
  nlohmann::json doc = nlohmann::json::object();
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    nlohmann::json column = nlohmann::json::array();
    for (const auto& row : table.rows) column.push_back(row[c]);
    doc[table.columns[c]] = std::move(column);
  }
  return doc;
}

Table sweep_table(const Dataset& data) {
  Table t;
  t.columns = {data.axis_name, "alpha", "ratio", "distance", "path_length", "frozen", "converged"};
  for (const auto& row : data.rows) {
    const QsltResult& r = row.result;
    t.rows.push_back({row.axis_value, row.alpha, r.ratio, r.distance, r.path_length, r.frozen ? 1.0 : 0.0,
                      r.converged ? 1.0 : 0.0});
  }
  return t;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  out.close();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace qsl::cli

namespace qsl::cli {

nlohmann::json sweep_manifest(const SweepConfig& config) {
  using nlohmann::json;
  auto optional = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  const auto [lo, hi] = config.range();
  json m = json::object();
  m["channel"] = std::string(to_string(config.channel));
  m["axis"] = std::string(to_string(config.axis));
  m["axis_lo"] = lo;
  m["axis_hi"] = hi;
  m["axis_count"] = config.count;
  m["omega"] = config.omega;
  m["temperature"] = optional(config.temperature);
  m["mass"] = optional(config.mass);
  m["alpha"] = optional(config.alpha);
  m["concurrence"] = optional(config.concurrence);
  m["branch"] = std::string(to_string(config.branch));
  m["p_tau"] = optional(config.p_tau);
  m["format"] = std::string(to_string(config.format));
  m["quadrature_tolerance"] = kQuadratureTolerance;
  m["quadrature_max_depth"] = kQuadratureMaxDepth;
  m["quadrature_kink_node"] = 0.5;
  m["csv_significant_digits"] = 12;
  m["version"] = QSLT_VERSION;
  return m;
}

}  // namespace qsl::cli
