#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cpnets/autodiff.hpp"

namespace cpnets {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Bias-corrected Adam over a fixed set of parameters.
class Adam {
public:
  Adam(std::vector<Parameter*> params, AdamConfig cfg = {});

  /// Applies one update from the parameters' current grad buffers.
  void step();
  void zero_grad();

  void set_lr(double lr) { cfg_.lr = lr; }
  double lr() const { return cfg_.lr; }
  std::size_t steps() const { return t_; }
  const AdamConfig& config() const { return cfg_; }

private:
  std::vector<Parameter*> params_;
  std::vector<Tensor> m_;
  std::vector<Tensor> v_;
  AdamConfig cfg_;
  std::size_t t_ = 0;
};

/// Exponential decay from lr0 at epoch 0 to lr_final at the last epoch.
double exp_decay_lr(double lr0, double lr_final, std::size_t epoch, std::size_t epochs);

struct FitSpec {
  std::size_t epochs = 100;
  double lr0 = 1e-3;
  double lr_final = 1e-3;
  std::uint64_t seed = 0;  // sample order
  bool shuffle = true;
  AdamConfig adam{};
};

struct TrainLog {
  std::vector<double> epoch_loss;  // mean sample loss per epoch
  std::vector<double> epoch_lr;
  std::size_t steps = 0;
};

using SampleLoss = std::function<Var(Tape& tape, std::size_t sample)>;
using EpochCallback = std::function<void(std::size_t epoch, double loss)>;

/// Batch-size-1 Adam: every epoch visits each sample once, in seeded random
/// order when shuffling. `before_epoch` may refresh per-epoch data. Throws on a
/// non-finite loss with epoch and sample context.
TrainLog fit(const std::vector<Parameter*>& params, std::size_t n_samples, const SampleLoss& loss, const FitSpec& spec,
             const EpochCallback& on_epoch = {}, const std::function<void(std::size_t)>& before_epoch = {});

}  // namespace cpnets
