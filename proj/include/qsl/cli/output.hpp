#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsl/cli/sweep.hpp"

namespace qsl::cli {

// 12 significant digits, the CSV number format.
std::string format_number(double value);

// Numeric table: header row, comma-separated, '\n' line endings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string to_csv(const Table& table);
// Column-keyed JSON object at full double precision, keys sorted.
nlohmann::json to_json(const Table& table);

// axis value, ratio, distance, path_length, frozen, converged.
Table sweep_table(const Dataset& data);

// Writes text to `path`, creating parent directories. Throws std::runtime_error
// naming the path on failure.
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace qsl::cli

namespace qsl::cli {

// Parameters, tolerances and version for a sweep; keys sorted.
nlohmann::json sweep_manifest(const SweepConfig& config);

}  // namespace qsl::cli
