#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "tttmae/mae.hpp"

namespace tttmae::training {

struct TrainConfig {
  std::size_t batch_size = 32;
  std::size_t epochs = 5;
  double lr = 1e-3;
  double weight_decay = 1e-5;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PretrainConfig {
  std::size_t steps = 200;
  std::size_t batch_size = 8;
  double lr = 1e-3;
  double weight_decay = 1e-5;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Shuffled epoch orders drawn from one seeded stream; the last partial
/// batch of each epoch is kept.
class BatchSampler {
 public:
  BatchSampler(std::size_t n, std::size_t batch_size, std::uint64_t seed);
  /// Next batch of indices, reshuffling at epoch boundaries.
  std::vector<std::size_t> next();
  std::size_t epoch() const { return epoch_; }
  bool epoch_ended() const { return pos_ == 0; }
  std::size_t batches_per_epoch() const { return (n_ + batch_ - 1) / batch_; }

 private:
  std::size_t n_;
  std::size_t batch_;
  mae::Rng rng_;
  std::vector<std::size_t> order_;
  std::size_t pos_ = 0;
  std::size_t epoch_ = 0;
};

/// Masked-reconstruction training of encoder and decoder with Adam. Each
/// batch item gets a fresh mask plan. The head is untouched. Returns the
/// per-step batch-mean loss.
std::vector<double> pretrain_mae(std::span<const Tensor<float>> corpus,
                                 mae::ModelParams<float>& params,
                                 const mae::PatchConfig& cfg, const PretrainConfig& train);

struct ProbeResult {
  std::vector<double> step_losses;
  std::vector<double> epoch_losses;  // mean step loss per epoch
};

/// Called with the corpus indices of every training batch, before the step.
using BatchObserver = std::function<void(std::span<const std::size_t>)>;

/// NLL training of the head (and the encoder when `finetune_encoder`) with
/// Adam. With a frozen encoder the pooled features are computed once and
/// the encoder and decoder stay bitwise unchanged.
ProbeResult train_probe(std::span<const Tensor<float>> inputs,
                        std::span<const std::size_t> labels, mae::ModelParams<float>& params,
                        const mae::PatchConfig& cfg, const TrainConfig& train,
                        bool finetune_encoder, const BatchObserver& observer = {});

}  // namespace tttmae::training
