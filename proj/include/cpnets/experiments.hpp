#pragma once

// Experiment registry and runner. Each experiment id owns a settings schema,
// generates its data from seeded streams, trains its model variants,
// evaluates them and writes a Report plus artifacts under the output directory.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpnets/config.hpp"
#include "cpnets/report.hpp"

namespace cpnets {

/// How far a run goes; each phase includes the earlier ones.
enum class Phase { gen_data, train, rollout, eval };

Phase parse_phase(const std::string& s);
std::string phase_name(Phase p);

struct RunOptions {
  std::filesystem::path out;        // empty: nothing is written
  std::optional<std::uint64_t> seed;  // overrides experiment.seed
  unsigned threads = 1;
  bool plots = false;
  Phase upto = Phase::eval;
  bool quiet = true;                // progress lines on stderr when false
};

class RunContext {
public:
  RunContext(const RunOptions& opts, Report& report) : opts_(opts), report_(report) {}

  const RunOptions& options() const { return opts_; }
  Report& report() { return report_; }
  bool want(Phase p) const { return p <= opts_.upto; }
  bool writing() const { return !opts_.out.empty(); }
  bool plots() const { return writing() && opts_.plots; }
  /// Creates and returns out/sub; only valid when writing().
  std::filesystem::path dir(const std::string& sub);
  /// Records a written artifact path relative to out.
  void artifact(const std::filesystem::path& path);
  void log(const std::string& line) const;

  /// Runs `fn` as a named stage. Exceptions become a failed StageResult and
  /// false is returned; ConfigError propagates.
  bool stage(const std::string& name, const std::function<void()>& fn);

  /// Calls fn(i) for i in [0, n) on up to options().threads threads. Callers
  /// store results by index and merge them afterwards, so the outcome does
  /// not depend on the thread count.
  void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) const;

private:
  RunOptions opts_;
  Report& report_;
};

struct ExperimentInfo {
  std::string id;
  std::string summary;
};

std::vector<ExperimentInfo> list_experiments();
/// Schema with defaults for `id`; throws ConfigError for an unknown id.
Settings experiment_settings(const std::string& id);

/// Runs `id` with the given settings. Stage failures are recorded in the
/// report (report.ok() is false); invalid settings throw ConfigError before any
/// stage runs. Writes the report when options.out is set.
Report run_experiment(const std::string& id, const Settings& settings, const RunOptions& options);
/// Loads settings from an INI file naming its [experiment] id.
Report run_config_file(const std::filesystem::path& path, const RunOptions& options,
                       const std::vector<std::pair<std::string, std::string>>& overrides = {});

}  // namespace cpnets
