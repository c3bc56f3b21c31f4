#pragma once

// CSV emission and the four command pipelines behind the CLI.
//
// Numbers are written with 9 significant digits ("nan" for missing values),
// LF line endings, fixed column order. Files are written to a temporary name
// in the output directory and renamed into place.

#include <filesystem>
#include <string>
#include <vector>

#include "hetnet/config.hpp"
#include "hetnet/optimizer.hpp"

namespace hetnet {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string format_number(double v);
std::string render_csv(const CsvTable& table);
// Writes dir/name atomically; creates dir if needed.
std::filesystem::path write_csv(const std::filesystem::path& dir, const std::string& name,
                                const CsvTable& table);

// In-memory tables, shared by the commands and by anyone who wants to check
// the files against the optimizer output.
CsvTable thresholds_table(const OptimumThresholds& t);
CsvTable beta_sweep_table(const std::vector<BetaPoint>& points);
CsvTable frontier_table(const std::vector<FrontierPoint>& points);

struct CommandResult {
  std::vector<std::filesystem::path> files;
  // Rows whose value could not be computed (written as nan). A nonzero count
  // maps to the numeric-failure exit code.
  std::size_t numeric_failures = 0;
};

// per_user_se.csv, percentiles_analytic.csv
CommandResult cmd_analytic(const RunConfig& cfg);
// per_user_se_mc.csv, fairness.csv, percentiles_mc.csv
CommandResult cmd_simulate(const RunConfig& cfg);
// thresholds_opt.csv, beta_sweep.csv, frontier_5_50.csv
CommandResult cmd_optimize(const RunConfig& cfg);
// compare_5pct.csv
CommandResult cmd_compare(const RunConfig& cfg);

}  // namespace hetnet
