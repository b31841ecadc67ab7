#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tttmae/tensor.hpp"

namespace tttmae {

/// Handle to a value recorded on a Tape.
struct Var {
  std::uint32_t id = 0;
};

/// Reverse-mode autodiff tape.
///
/// Every op appends a node holding its forward value and a closure that
/// propagates the node's gradient to its inputs. `backward` walks the nodes
/// in exact reverse order, so gradients of values with several consumers
/// accumulate before they are propagated further. Parameters are referenced,
/// not copied; after `backward` their gradients are added into
/// `Tensor::grad()`.
///
/// A tape is single-use per backward pass: call `reset()` before recording
/// a new graph. Tapes are not thread-safe; use one tape per thread.
template <typename T>
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  /// Non-differentiable value owned by the tape.
  Var constant(Tensor<T> value);
  /// Owned leaf whose gradient can be read back with `grad()`.
  Var leaf(Tensor<T> value);
  /// References an external parameter. If `p.requires_grad()`, backward
  /// accumulates into `p.grad()` (allocating it when absent).
  Var param(Tensor<T>& p);

  const Tensor<T>& value(Var v) const;
  /// Gradient of the last backward root with respect to `v`; empty if none
  /// reached it.
  std::span<const T> grad(Var v) const;
  bool needs_grad(Var v) const { return nodes_[v.id].needs_grad; }
  std::size_t size() const { return nodes_.size(); }

  void backward(Var loss);
  void reset();

  // Linear algebra.
  Var matmul(Var a, Var b);
  Var transpose(Var a);
  Var add(Var a, Var b);
  /// Adds a length-d vector to every row of an n x d matrix.
  Var add_bias(Var x, Var bias);
  /// Multiplies column j of an n x d matrix by v[j].
  Var mul_cols(Var x, Var v);
  Var scale(Var x, T factor);
  Var sum(Var x);
  /// Arithmetic mean of a list of scalars.
  Var mean_of(std::span<const Var> scalars);

  // Elementwise and row-wise nonlinearities.
  Var silu(Var x);
  Var layer_norm(Var x, Var gamma, Var beta, T eps);
  Var softmax(Var x);
  Var log_softmax(Var x);

  // Row plumbing.
  Var mean_rows(Var x);
  Var gather_rows(Var x, std::span<const std::size_t> rows);
  Var concat_rows(Var a, Var b);
  Var repeat_rows(Var row, std::size_t count);
  Var slice_cols(Var x, std::size_t start, std::size_t width);
  Var concat_cols(std::span<const Var> parts);

  // Losses (scalar outputs).
  Var mse_masked(Var pred, Var target, std::span<const std::size_t> rows);
  Var nll_loss(Var log_probs, std::span<const std::size_t> labels);

 private:
  struct Node {
    Tensor<T> owned;
    const Tensor<T>* view = nullptr;
    Tensor<T>* external = nullptr;
    std::vector<T> grad;
    bool needs_grad = false;
    std::function<void(Tape&, std::uint32_t)> back;
  };

  Var push(Tensor<T> value, bool needs_grad,
           std::function<void(Tape&, std::uint32_t)> back);
  std::vector<T>& grad_buffer(Var v);
  const Tensor<T>& val(std::uint32_t id) const {
    const Node& n = nodes_[id];
    return n.view ? *n.view : n.owned;
  }

  std::vector<Node> nodes_;
  bool backward_done_ = false;
};

extern template class Tape<float>;
extern template class Tape<double>;

}  // namespace tttmae
