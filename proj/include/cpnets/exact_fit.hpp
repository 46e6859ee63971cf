#pragma once

// Networks whose analytic weights reproduce a discrete scheme exactly: the
// 1D diffusion convolution, the advection-diffusion CP network and the 2D
// Burgers CP-CNN, together with their plain-convolution counterparts.

#include <array>
#include <string_view>
#include <vector>

#include "cpnets/layers.hpp"
#include "cpnets/optim.hpp"
#include "cpnets/pde.hpp"

namespace cpnets {

/// Max over frames of the mean absolute error (frames shared up to the shorter run).
double max_frame_l1(const Trajectory& pred, const Trajectory& truth);
/// Max absolute error over all shared frames; infinity if any compared value is non-finite.
double max_abs_error(const Trajectory& pred, const Trajectory& truth);

// --- 1D diffusion ----------------------------------------------------------

enum class DiffusionModel { conv, cp_conv };

/// du = w * u (conv) or du = (w C) * u (cp-conv) with a 3-tap kernel; the two
/// Dirichlet end points never change.
class DiffusionNet {
public:
  DiffusionNet(ParamStore& store, DiffusionModel kind, Rng& rng);

  Var forward(Tape& tape, const Var& u, double c) const;
  Tensor increment(const Tensor& u, double c) const;
  void set_kernel(std::array<double, 3> w);
  std::array<double, 3> kernel() const;
  DiffusionModel kind() const { return kind_; }

private:
  DiffusionModel kind_;
  Parameter* w_ = nullptr;  // [3 x 1 x 1]
};

/// Trains on the first `pairs` transitions of `data` (one sample per transition).
TrainLog fit_diffusion(DiffusionNet& net, ParamStore& store, const Trajectory& data, std::size_t pairs,
                       const FitSpec& spec, const EpochCallback& on_epoch = {});
Trajectory rollout_diffusion(const DiffusionNet& net, const Tensor& u0, double c, std::size_t steps);

// --- 2D advection-diffusion --------------------------------------------------

/// Dense-layer input built from the velocity component a_d of one direction.
enum class AdvDiffInput {
  repeated,    // z_d = [a_d, a_d]
  sign_split,  // z_d = [a_d + |a_d|, a_d - |a_d|]
};

AdvDiffInput parse_advdiff_input(std::string_view name);
std::string_view advdiff_input_name(AdvDiffInput in);

/// h = ReLU(W1 z_d) per direction d; the advection kernel along d is
/// <W2, dt/d_d h> and the diffusion kernel is W3 nu dt/d_d^2, both 3-tap and
/// applied along x and along y.
class AdvDiffNet {
public:
  AdvDiffNet(ParamStore& store, Rng& rng, AdvDiffInput input = AdvDiffInput::repeated);

  Var forward(Tape& tape, const Var& u, const AdvDiff2dSpec& spec) const;
  Tensor increment(const Tensor& u, const AdvDiff2dSpec& spec) const;
  /// The ideal family W2 = [[1,-1,0]/c1, [0,-1,1]/c2], W3 = [1,-2,1] with
  /// W1 = diag(c1, -c2) for the repeated input and diag(c1/2, -c2/2) for the sign split.
  void set_ideal(double c1 = 1.0, double c2 = 1.0);
  AdvDiffInput input() const { return input_; }

  Parameter* W1 = nullptr;  // [2 x 2]
  Parameter* W2 = nullptr;  // [3 x 1 x 1 x 2]
  Parameter* W3 = nullptr;  // [3 x 1 x 1 x 1]

private:
  AdvDiffInput input_;
};

struct AdvDiffSample {
  Tensor u;
  Tensor du;
  AdvDiff2dSpec spec;
};

/// One sample per consecutive frame pair of every trajectory.
std::vector<AdvDiffSample> advdiff_samples(const std::vector<std::pair<Trajectory, AdvDiff2dSpec>>& runs);
TrainLog fit_advdiff(AdvDiffNet& net, ParamStore& store, const std::vector<AdvDiffSample>& samples, const FitSpec& spec,
                     const EpochCallback& on_epoch = {});
Trajectory rollout_advdiff(const AdvDiffNet& net, const Tensor& u0, const AdvDiff2dSpec& spec, std::size_t steps);

// --- 2D viscous Burgers ------------------------------------------------------

enum class BurgersModel { cp_cnn, cnn };

/// CP-CNN: du = p1 (w1 * u) + p2 (w2 * u) + p3 (w3 * u) + p4 (w4 * u) with
/// depthwise kernels w1, w3 along x and w2, w4 along y (6 values each).
/// CNN: du = w * u with one 3x3 kernel mixing both components (36 values).
class BurgersNet {
public:
  BurgersNet(ParamStore& store, BurgersModel kind, Rng& rng);

  Var forward(Tape& tape, const Var& u, const Burgers2dSpec& spec) const;
  Tensor increment(const Tensor& u, const Burgers2dSpec& spec) const;
  /// w1 = w2 = [-1,0,1], w3 = w4 = [1,-2,1] per component.
  void set_ideal();
  std::size_t param_count() const;
  BurgersModel kind() const { return kind_; }

  std::vector<Parameter*> kernels;  // CP-CNN: four [3 x 2]; CNN: one [3 x 3 x 2 x 2]

private:
  BurgersModel kind_;
};

struct BurgersSample {
  Tensor u;
  Tensor du;
  Burgers2dSpec spec;
};

TrainLog fit_burgers(BurgersNet& net, ParamStore& store, const std::vector<BurgersSample>& samples, const FitSpec& spec,
                     const EpochCallback& on_epoch = {});
/// Stops at the first non-finite state or once |u| exceeds `blowup`, recording diverged_at.
Trajectory rollout_burgers(const BurgersNet& net, const Tensor& u0, const Burgers2dSpec& spec, std::size_t steps,
                           double blowup = 10.0);

}  // namespace cpnets
