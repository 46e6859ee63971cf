#pragma once

// Tape-based reverse-mode differentiation over Tensor values.
//
// A Tape records every operation applied to Vars created from it. Leaves are
// either constants (no gradient) or Parameters (gradient accumulated into
// Parameter::grad by backward()). Nodes are appended in evaluation order, so
// the tape is topologically sorted by construction and backward() is a single
// reverse sweep.

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cpnets/tensor.hpp"

namespace cpnets {

struct Parameter {
  std::string name;
  Tensor value;
  Tensor grad;

  Parameter() = default;
  Parameter(std::string n, Tensor v) : name(std::move(n)), value(std::move(v)), grad(value.shape()) {}
  void zero_grad() { grad = Tensor(value.shape()); }
};

class Tape;

class Var {
public:
  Var() = default;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  const Tensor& value() const;
  const Shape& shape() const { return value().shape(); }
  std::size_t size() const { return value().size(); }
  Tape& tape() const { return *tape_; }
  std::size_t id() const { return id_; }
  bool valid() const { return tape_ != nullptr; }

private:
  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

enum class Activation { identity, relu, swish };

Activation parse_activation(std::string_view name);
std::string_view activation_name(Activation a);

class Tape {
public:
  using BackwardFn = std::function<void(Tape&, std::size_t)>;

  struct Record {
    std::string op;
    std::vector<std::size_t> inputs;
  };

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Tensor value);
  Var scalar(double v) { return constant(Tensor::scalar(v)); }
  /// Leaf bound to `p`; backward() adds d(loss)/d(p) into p.grad.
  /// `p` must outlive the tape's backward pass.
  Var param(Parameter& p);

  /// Appends a node; used by the op implementations.
  Var record(std::string_view op, Tensor value, std::vector<std::size_t> inputs, BackwardFn backward);

  const Tensor& value(std::size_t id) const { return nodes_.at(id).value; }
  const Tensor& out_grad(std::size_t id) const { return nodes_.at(id).grad; }
  /// Gradient buffer of an input, or nullptr when that input needs no gradient.
  Tensor* grad_of(std::size_t id);
  bool requires_grad(std::size_t id) const { return nodes_.at(id).requires_grad; }
  const std::vector<std::size_t>& inputs(std::size_t id) const { return nodes_.at(id).inputs; }

  /// Reverse sweep from a scalar loss recorded on this tape.
  void backward(const Var& loss);

  std::size_t size() const { return nodes_.size(); }
  std::vector<Record> records() const;
  /// Order-sensitive hash of op kinds, wiring and forward values.
  std::uint64_t fingerprint() const;

private:
  struct Node {
    std::string op;
    Tensor value;
    Tensor grad;
    std::vector<std::size_t> inputs;
    BackwardFn backward;
    Parameter* param = nullptr;
    bool requires_grad = false;
  };

  std::deque<Node> nodes_;  // stable references while recording
};

// Elementwise arithmetic. Operands must have identical shapes unless one side
// is a plain double.
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var add(const Var& a, double b);
Var mul(const Var& a, double b);
Var neg(const Var& a);
/// x * s where s holds exactly one value.
Var scale(const Var& x, const Var& s);

inline Var operator+(const Var& a, const Var& b) { return add(a, b); }
inline Var operator-(const Var& a, const Var& b) { return sub(a, b); }
inline Var operator*(const Var& a, const Var& b) { return mul(a, b); }
inline Var operator+(const Var& a, double b) { return add(a, b); }
inline Var operator*(const Var& a, double b) { return mul(a, b); }
inline Var operator*(double a, const Var& b) { return mul(b, a); }
inline Var operator-(const Var& a) { return neg(a); }

/// [m x k] . [k x n]
Var matmul(const Var& a, const Var& b);
/// x W^T for x [N x in], W [out x in].
Var linear(const Var& x, const Var& w);
/// Adds b [d] to every row of x viewed as [N x d].
Var add_row(const Var& x, const Var& b);
/// Multiplies row r of x (viewed as [N x c], N = size(s)) by s[r].
Var scale_rows(const Var& x, const Var& s);
/// Per-row matrix-vector product: out[r] = reshape(m[r], a x b) . u[r].
Var rowwise_matvec(const Var& m, const Var& u);

Var activate(Activation kind, const Var& x);
inline Var relu(const Var& x) { return activate(Activation::relu, x); }
inline Var swish(const Var& x) { return activate(Activation::swish, x); }

/// Normalizes over the last axis, then applies gain and bias [d].
Var layer_norm(const Var& x, const Var& gain, const Var& bias, double eps = 1e-5);

Var reshape(const Var& x, Shape shape);
/// Concatenation along the last axis of two tensors with equal row counts.
Var concat_last(const Var& a, const Var& b);
Var gather_rows(const Var& x, std::vector<std::size_t> rows);
/// out[rows[k]] += x[k]; out has `n_out` rows.
Var scatter_add_rows(const Var& x, std::vector<std::size_t> rows, std::size_t n_out);
/// Places x's flat values at `positions` inside a zero tensor of `shape`.
Var embed(const Var& x, std::vector<std::size_t> positions, Shape shape);

/// u [n x c_in], kernel [k x c_in x c_out], k odd, periodic wrap.
Var conv1d_periodic(const Var& u, const Var& kernel);
/// u [nx x ny x c_in], kernel [kx x ky x c_in x c_out], kx and ky odd, periodic wrap.
Var conv2d_periodic(const Var& u, const Var& kernel);

Var sum(const Var& x);
Var mean(const Var& x);
Var mse(const Var& a, const Var& b);
/// sum(w * (a - b)^2) / sum(w) with constant weights w.
Var weighted_mse(const Var& a, const Var& b, const Tensor& w);

}  // namespace cpnets
