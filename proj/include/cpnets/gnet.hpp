#pragma once

// CP-GNet encoder-processor-decoder on finite-volume graphs, the plain GNet
// baseline built from dense layers, noisy training pairs, training and rollout.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cpnets/fv.hpp"
#include "cpnets/layers.hpp"
#include "cpnets/optim.hpp"
#include "cpnets/pde.hpp"

namespace cpnets {

enum class GnetKind { cp, dense };

GnetKind parse_gnet_kind(const std::string& s);
std::string gnet_kind_name(GnetKind k);

struct GnetConfig {
  GnetKind kind = GnetKind::cp;
  std::size_t n_q = 1;             // physical channels
  std::size_t n_edge_in = 2;       // raw edge vector size
  std::size_t width = 36;          // latent node width
  std::size_t edge_width = 4;      // encoded edge width
  std::size_t blocks = 5;
  std::size_t dense_per_block = 4;  // dense section depth inside each block
  std::vector<std::string> boundary_types;  // one ghost weight set per entry
  Activation act = Activation::swish;      // outer activation of dense / CP-Dense layers
  Activation mp_gen = Activation::relu;
  Activation mp_msg = Activation::relu;
  bool layer_norm = true;
  double ln_eps = 1e-5;

  void validate() const;
};

/// Graph data consumed by the network, in the model's boundary-type order.
struct GnetGraph {
  MpTopology topo;
  Tensor edges;   // [n_edges x n_edge_in]
  Tensor ghosts;  // [n_ghosts x n_edge_in]
  std::vector<std::string> boundary_types;
  std::vector<std::size_t> known_nodes;

  static GnetGraph from(const FvGraph& g);
  std::size_t n_nodes() const { return topo.n_nodes; }
};

class Gnet {
public:
  Gnet(ParamStore& store, const GnetConfig& cfg, Rng& rng);

  /// Normalized states [n_v x n_q] -> normalized increments [n_v x n_q].
  Var forward(Tape& tape, const Var& q, const GnetGraph& graph) const;
  Tensor predict(const Tensor& q, const GnetGraph& graph) const;

  const GnetConfig& config() const { return cfg_; }
  std::size_t param_count() const;

private:
  struct Layer {
    std::unique_ptr<CpDense> cp;
    std::unique_ptr<Dense> dense;
    std::unique_ptr<LayerNorm> ln;
    std::size_t width_u = 0;
  };
  struct Block {
    std::unique_ptr<CpMp> cpmp;
    std::unique_ptr<DenseMp> dmp;
    std::unique_ptr<LayerNorm> mp_ln;
    std::vector<Layer> dense;
  };

  Layer make_layer(ParamStore& store, const std::string& name, std::size_t n_u, std::size_t n_p, std::size_t n_h,
                   Activation act, bool ln, Rng& rng) const;
  Var apply(Tape& tape, const Layer& l, const Var& u, const Var& p) const;
  Var apply_self(Tape& tape, const Layer& l, const Var& x) const { return apply(tape, l, x, x); }

  GnetConfig cfg_;
  ParamStore& store_;
  std::size_t first_param_ = 0;
  std::size_t n_params_ = 0;
  std::vector<Layer> node_enc_;
  std::vector<Layer> edge_enc_;
  std::vector<Block> blocks_;
  std::vector<Layer> dec_enc_;  // re-encoding of q that conditions the output layer
  Layer out_;
};

/// Trainable value count of a model built from `cfg` (builds a throwaway copy).
std::size_t gnet_param_count(const GnetConfig& cfg);
/// Width of a dense-kind model whose parameter count is closest to `target`.
std::size_t matched_dense_width(GnetConfig cfg, std::size_t target, std::size_t max_width = 512);

struct TrainingPair {
  Tensor input;   // normalized state plus noise
  Tensor target;  // normalized increment, compensated for the noise
};

/// For each consecutive pair of physical frames: input = Q^k/C_c + eps and
/// target = (Q^{k+1}/C_c - input)/C_delta, so input + C_delta target = Q^{k+1}/C_c.
/// Nodes in `clean` receive no noise.
std::vector<TrainingPair> make_training_pairs(const std::vector<Tensor>& frames, const ScalingSpec& scaling,
                                              double noise_std, Rng& rng, const std::vector<std::size_t>& clean = {});

struct GnetTrainSpec {
  FitSpec fit{500, 2e-3, 2e-3};
  double noise_std = 0.0013;
  bool mask_known = true;  // known-value nodes are excluded from the loss
};

/// Batch-size-1 Adam on the MSE of normalized increments; throws on a non-finite loss.
TrainLog train_gnet(const Gnet& model, ParamStore& store, const GnetGraph& graph, const std::vector<Tensor>& frames,
                    const ScalingSpec& scaling, const GnetTrainSpec& spec, const EpochCallback& on_epoch = {});

/// Physical values of the known nodes at rollout frame k, [n_known x n_q].
using KnownSchedule = std::function<Tensor(std::size_t k)>;
KnownSchedule schedule_from_frames(const std::vector<Tensor>& frames, std::size_t offset,
                                   const std::vector<std::size_t>& known);

/// Autoregressive prediction from q0 (physical units). Each step overwrites the
/// known nodes, normalizes, predicts and adds the denormalized increment.
Trajectory rollout_gnet(const Gnet& model, const GnetGraph& graph, const Tensor& q0, std::size_t steps,
                        const ScalingSpec& scaling, const KnownSchedule& known = {});

}  // namespace cpnets
