#pragma once

// Learned closures for the coarse 1D Burgers equation. All four models act
// pointwise on periodic 32-point fields: CNN and CP-CNN see the local
// convection and diffusion terms q, DDP and CP-DDP see a stencil of u.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "cpnets/layers.hpp"
#include "cpnets/optim.hpp"
#include "cpnets/pde.hpp"

namespace cpnets {

enum class ClosureModel { cnn, cp_cnn, ddp, cp_ddp };

ClosureModel parse_closure_model(std::string_view name);
std::string_view closure_model_name(ClosureModel m);

struct ClosureConfig {
  ClosureModel model = ClosureModel::cp_cnn;
  double nu = 0.01;
  double dx = 6.283185307179586 / 32;
  std::size_t cnn_width = 20;
  std::size_t cnn_kernel = 5;  // odd, periodic
  std::size_t ddp_width = 40;
  std::size_t ddp_layers = 8;
  std::size_t stencil_radius = 3;

  void validate() const;
};

/// q = [u u_x, nu u_xx] with periodic central differences, [n x 2].
Tensor closure_features(const Tensor& u, double nu, double dx);
/// Row i holds u[i-r .. i+r] with periodic wrap, [n x (2r+1)].
Tensor closure_stencil(const Tensor& u, std::size_t radius);

/// Max-abs scales of the inputs and of the closure over a training set.
struct ClosureScaling {
  std::array<double, 2> q{1.0, 1.0};
  double u = 1.0;
  double c = 1.0;

  static ClosureScaling fit(const std::vector<Tensor>& u, const std::vector<Tensor>& closure, double nu, double dx);
  Tensor normalize_q(const Tensor& q) const;
  Tensor normalize_u(const Tensor& u) const;
  Tensor normalize_c(const Tensor& c) const;
  Tensor denormalize_c(const Tensor& c) const;
};

class ClosureNet {
public:
  ClosureNet(ParamStore& store, const ClosureConfig& cfg, Rng& rng);

  /// Normalized closure [n x 1] for the coarse state u [n x 1].
  Var forward(Tape& tape, const Tensor& u) const;
  /// Physical closure for u.
  Tensor predict(const Tensor& u) const;
  ClosureFn closure_fn() const;

  const ClosureConfig& config() const { return cfg_; }
  ClosureScaling scaling;

  // Layers, by model: CNN / CP-CNN use first (or cp_first) then conv;
  // DDP / CP-DDP use first (or cp_first) then the remaining dense stack.
  CpDense cp_first;
  Dense first;
  std::vector<Dense> stack;
  Parameter* conv_w = nullptr;  // [k x width x 1]
  Parameter* conv_b = nullptr;  // [1]

private:
  ClosureConfig cfg_;
};


struct ClosureTrainSpec {
  FitSpec fit{300, 1e-3, 1e-3};
  std::size_t frames = 27;
};

/// Fits the scaling on the training frames, then trains on one frame per sample.
TrainLog train_closure(ClosureNet& net, ParamStore& store, const Trajectory& ubar, const std::vector<Tensor>& truth,
                       const ClosureTrainSpec& spec, const EpochCallback& on_epoch = {});

}  // namespace cpnets
