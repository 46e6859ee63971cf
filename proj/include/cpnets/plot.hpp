#pragma once

// Static PNG plots: field heatmaps and line charts. Images carry no text;
// series colors cycle through a fixed palette in the order given.

#include <filesystem>
#include <string>
#include <vector>

#include "cpnets/pde.hpp"

namespace cpnets {

/// Channel `c` of a [nx x ny x channels] field, x running left to right.
void write_heatmap_png(const std::filesystem::path& path, const Tensor& field, std::size_t c = 0);
/// Space-time diagram of a 1D trajectory: time runs downward.
void write_xt_png(const std::filesystem::path& path, const Trajectory& traj, std::size_t c = 0);

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Non-finite and (for log axes) non-positive points are skipped.
void write_line_png(const std::filesystem::path& path, const std::vector<Series>& series, bool log_y = false,
                    bool log_x = false);

}  // namespace cpnets
