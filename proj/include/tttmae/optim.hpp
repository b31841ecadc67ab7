#pragma once

#include <cstddef>
#include <vector>

#include "tttmae/mae.hpp"

namespace tttmae::optim {

/// Adam with decoupled weight decay: theta <- theta * (1 - lr * wd), then the
/// bias-corrected Adam update.
template <typename T>
class Adam {
 public:
  struct Options {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 1e-5;
  };

  Adam(mae::NamedParams<T> params, Options opts);

  /// Applies one update using each parameter's current gradient. Throws
  /// std::logic_error if any parameter has no gradient buffer.
  void step();
  std::size_t steps_taken() const { return t_; }
  const Options& options() const { return opts_; }

 private:
  mae::NamedParams<T> params_;
  Options opts_;
  std::vector<std::vector<T>> m_;
  std::vector<std::vector<T>> v_;
  std::size_t t_ = 0;
};

/// SGD with momentum and coupled weight decay:
/// v <- momentum * v + g + wd * theta;  theta <- theta - lr * v.
template <typename T>
class SgdMomentum {
 public:
  struct Options {
    double lr = 2.5e-3;
    double momentum = 0.9;
    double weight_decay = 0.2;
  };

  SgdMomentum(mae::NamedParams<T> params, Options opts);

  void step();
  const std::vector<std::vector<T>>& velocity() const { return velocity_; }
  std::vector<std::vector<T>>& velocity() { return velocity_; }

 private:
  mae::NamedParams<T> params_;
  Options opts_;
  std::vector<std::vector<T>> velocity_;
};

extern template class Adam<float>;
extern template class Adam<double>;
extern template class SgdMomentum<float>;
extern template class SgdMomentum<double>;

}  // namespace tttmae::optim
