#pragma once

// Conditionally parameterized layers and their plain counterparts.
//
// Every layer holds pointers into a ParamStore and binds them to a Tape on
// each forward call, so one set of weights can be evaluated on any number of
// tapes (training steps, rollout steps, finite-difference probes).

#include <deque>
#include <filesystem>
#include <string>
#include <vector>

#include "cpnets/autodiff.hpp"
#include "cpnets/rng.hpp"

namespace cpnets {

/// Named parameters with stable addresses, kept in insertion order.
class ParamStore {
public:
  ParamStore() = default;
  ParamStore(const ParamStore&) = delete;
  ParamStore& operator=(const ParamStore&) = delete;

  Parameter& add(const std::string& name, Tensor value);
  /// Uniform in [-1/sqrt(fan_in), 1/sqrt(fan_in)].
  Parameter& add_uniform(const std::string& name, Shape shape, std::size_t fan_in, Rng& rng);

  Parameter& get(const std::string& name);
  const Parameter& get(const std::string& name) const;
  bool contains(const std::string& name) const;

  std::vector<Parameter*> all();
  std::vector<const Parameter*> all() const;
  std::size_t count() const;
  std::size_t size() const { return params_.size(); }

  /// Concatenation of all values in insertion order.
  std::vector<double> flat() const;
  void set_flat(const std::vector<double>& v);
  void copy_values_from(const ParamStore& other);
  void zero_grad();

  /// Writes `<stem>.bin` (little-endian float64) and `<stem>.manifest` (name, shape, byte offset).
  void save(const std::filesystem::path& stem) const;
  /// Loads values into an already-built store; names and shapes must match.
  void load(const std::filesystem::path& stem);

private:
  std::deque<Parameter> params_;
};

struct CpDenseSpec {
  std::size_t n_u = 1;
  std::size_t n_p = 1;
  std::size_t n_h = 1;
  Activation inner = Activation::identity;
  Activation outer = Activation::swish;
  bool bias = true;
};

/// h = σ_out(σ_in(<W,p> + B) u + b), evaluated row by row.
class CpDense {
public:
  CpDense() = default;
  CpDense(ParamStore& store, const std::string& name, const CpDenseSpec& spec, Rng& rng);

  /// u [N x n_u], p [N x n_p] -> [N x n_h].
  Var forward(Tape& tape, const Var& u, const Var& p) const;
  const CpDenseSpec& spec() const { return spec_; }
  std::size_t param_count() const;
  static std::size_t param_count(const CpDenseSpec& spec);

  Parameter* W = nullptr;  // [(n_h n_u) x n_p]
  Parameter* B = nullptr;  // [n_h x n_u]
  Parameter* b = nullptr;  // [n_h]

private:
  CpDenseSpec spec_;
};

struct DenseSpec {
  std::size_t n_u = 1;
  std::size_t n_h = 1;
  Activation act = Activation::swish;
  bool bias = true;
};

class Dense {
public:
  Dense() = default;
  Dense(ParamStore& store, const std::string& name, const DenseSpec& spec, Rng& rng);

  Var forward(Tape& tape, const Var& u) const;
  const DenseSpec& spec() const { return spec_; }
  std::size_t param_count() const;
  static std::size_t param_count(const DenseSpec& spec);

  Parameter* W = nullptr;  // [n_h x n_u]
  Parameter* b = nullptr;  // [n_h]

private:
  DenseSpec spec_;
};

class LayerNorm {
public:
  LayerNorm() = default;
  LayerNorm(ParamStore& store, const std::string& name, std::size_t d, double eps = 1e-5);

  Var forward(Tape& tape, const Var& x) const;
  std::size_t param_count() const { return 2 * d_; }

  Parameter* gain = nullptr;
  Parameter* bias = nullptr;

private:
  std::size_t d_ = 0;
  double eps_ = 1e-5;
};

/// One branch of a CP convolution: kernel scaled by a condition (field or global scalar).
struct CpConvBranch {
  Parameter* kernel = nullptr;
  std::size_t condition = 0;  // index into the condition list passed to forward
};

/// out = sum_b p_b ⊙ (k_b * u) with periodic convolution. Rank-2 u uses 1D
/// kernels [k x c_in x c_out]; rank-3 u uses 2D kernels [kx x ky x c_in x c_out].
class CpConv {
public:
  CpConv() = default;
  explicit CpConv(std::vector<CpConvBranch> branches) : branches_(std::move(branches)) {}

  /// Each condition is a scalar [1] or a field with one value per grid point.
  Var forward(Tape& tape, const Var& u, const std::vector<Var>& conditions) const;
  const std::vector<CpConvBranch>& branches() const { return branches_; }
  std::size_t param_count() const;

private:
  std::vector<CpConvBranch> branches_;
};

/// Graph wiring for message passing. Interior message k flows from src[k] into dst[k].
struct MpTopology {
  std::size_t n_nodes = 0;
  std::vector<std::size_t> dst;
  std::vector<std::size_t> src;
  std::vector<double> weight;
  std::vector<std::size_t> ghost_node;
  std::vector<std::size_t> ghost_type;
  std::vector<double> ghost_weight;

  std::size_t n_edges() const { return dst.size(); }
  std::size_t n_ghosts() const { return ghost_node.size(); }
  void validate(std::size_t n_types) const;
};

struct CpMpSpec {
  std::size_t n_u = 1;
  std::size_t n_e = 1;
  std::size_t n_h = 1;
  std::vector<std::string> ghost_types;
  Activation gen = Activation::relu;
  Activation msg = Activation::relu;
};

/// h_i = sum_j w_ij σ_msg(W_ij [u_i; u_j]) with W_ij = σ_gen(<W, e_ij> + B), plus
/// per-type ghost messages acting on u_i alone.
class CpMp {
public:
  CpMp() = default;
  CpMp(ParamStore& store, const std::string& name, const CpMpSpec& spec, Rng& rng);

  /// u [n_v x n_u], e [n_edges x n_e], e_ghost [n_ghosts x n_e] -> [n_v x n_h].
  Var forward(Tape& tape, const Var& u, const Var& e, const Var& e_ghost, const MpTopology& topo) const;
  const CpMpSpec& spec() const { return spec_; }
  std::size_t param_count() const;
  static std::size_t param_count(const CpMpSpec& spec);

  Parameter* W = nullptr;  // [(n_h 2n_u) x n_e]
  Parameter* B = nullptr;  // [n_h x 2n_u]
  std::vector<Parameter*> Wg;  // per ghost type, [(n_h n_u) x n_e]
  std::vector<Parameter*> Bg;  // per ghost type, [n_h x n_u]

private:
  CpMpSpec spec_;
};

/// Plain message passing used by the GNet baseline: m_ij = σ(W [u_i; u_j; e_ij] + b).
class DenseMp {
public:
  DenseMp() = default;
  DenseMp(ParamStore& store, const std::string& name, const CpMpSpec& spec, Rng& rng);

  Var forward(Tape& tape, const Var& u, const Var& e, const Var& e_ghost, const MpTopology& topo) const;
  std::size_t param_count() const;
  static std::size_t param_count(const CpMpSpec& spec);

private:
  CpMpSpec spec_;
  Dense interior_;
  std::vector<Dense> ghost_;
};

}  // namespace cpnets
