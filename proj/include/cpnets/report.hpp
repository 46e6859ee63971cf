#pragma once

// Experiment outcomes: metric rows, loss curves, stage results and the files
// they are written to (manifest.txt, metrics.csv, loss.csv).

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cpnets/metrics.hpp"
#include "cpnets/optim.hpp"

namespace cpnets {

struct MetricRow {
  std::string scope;   // case the value belongs to, e.g. "cp-conv/C=0.125"
  std::string metric;
  std::string value;   // "%.17g", "unbounded", "none" or free text
};

struct LossCurve {
  std::string scope;
  TrainLog log;
};

struct StageResult {
  std::string name;
  bool ok = true;
  std::string error;
  double seconds = 0.0;
};

/// Shortest decimal text that reads back to the same double; "inf"/"nan" otherwise.
std::string format_real(double v);

class Report {
public:
  std::string experiment;
  std::uint64_t seed = 0;
  std::string config;  // effective settings as INI text
  std::vector<MetricRow> metrics;
  std::vector<LossCurve> losses;
  std::vector<StageResult> stages;
  std::vector<std::string> files;  // artifacts relative to the output directory
  double seconds = 0.0;

  void add(const std::string& scope, const std::string& metric, double v);
  void add(const std::string& scope, const std::string& metric, const MetricValue& v);
  void add_text(const std::string& scope, const std::string& metric, const std::string& v);
  /// Step index of the first divergence, or "none".
  void add_divergence(const std::string& scope, const std::optional<std::size_t>& step);
  void add_loss(const std::string& scope, const TrainLog& log) { losses.push_back({scope, log}); }

  const MetricRow* find(const std::string& scope, const std::string& metric) const;
  /// Numeric value; nullopt when missing or not a number.
  std::optional<double> number(const std::string& scope, const std::string& metric) const;
  std::string text(const std::string& scope, const std::string& metric) const;
  bool ok() const;

  std::string metrics_csv() const;
  std::string loss_csv() const;
  std::string manifest() const;
  void write(const std::filesystem::path& dir) const;
};

}  // namespace cpnets
