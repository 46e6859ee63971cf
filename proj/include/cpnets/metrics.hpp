#pragma once

// Trajectory error metrics and the 1D energy spectrum.

#include <string_view>
#include <vector>

#include "cpnets/pde.hpp"

namespace cpnets {

enum class MaeMode { avg_steps, final_step };

MaeMode parse_mae_mode(std::string_view s);
std::string_view mae_mode_name(MaeMode m);

/// A metric that is either a finite number or flagged unbounded.
struct MetricValue {
  double value = 0.0;
  bool unbounded = false;

  static MetricValue inf() { return {0.0, true}; }
};

/// Mean absolute error over the predicted steps (frame 0 is the shared initial
/// state and is skipped when there are later frames). A prediction with a
/// non-finite value, a divergence mark or fewer frames than the truth is
/// unbounded.
MetricValue metric_mae(const Trajectory& pred, const Trajectory& truth, MaeMode mode);

/// RMSE after standardizing each channel by the truth's mean and standard
/// deviation over all frames and points, averaged over channels. Compares all
/// frames; the prediction must have the same frame count.
double metric_rmse_normalized(const Trajectory& pred, const Trajectory& truth);
double metric_rmse_normalized(const std::vector<Tensor>& pred, const std::vector<Tensor>& truth);

/// One-sided spectrum of a periodic field sampled at n uniform points over
/// `length`: e[k] for k = 0..n/2, wavenumber k*2pi/length, normalized so that
/// sum_k e[k] * dk equals the mean square of u. Equals the transform of the
/// periodic autocorrelation folded onto k >= 0.
std::vector<double> energy_spectrum_1d(const std::vector<double>& u, double length);
/// Same for a single-channel [n x 1] frame.
std::vector<double> energy_spectrum_1d(const Tensor& u, double length);

}  // namespace cpnets
