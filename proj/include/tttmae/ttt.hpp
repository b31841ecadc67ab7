#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tttmae/mae.hpp"

namespace tttmae::ttt {

struct TttConfig {
  std::size_t steps = 20;
  std::size_t views_per_batch = 16;
  double lr = 2.5e-3;
  double momentum = 0.9;
  double weight_decay = 0.2;
  double mask_ratio = 0.8;
  std::uint64_t seed = 0;

  void validate() const;
};

struct AdaptationTrace {
  std::vector<double> losses;  // reconstruction loss before each update
  std::size_t steps() const { return losses.size(); }
};

/// Per-sample seed from the run seed, a sample id and a segment index, so
/// results do not depend on evaluation order.
std::uint64_t sample_seed(std::uint64_t run_seed, std::string_view sample_id,
                          std::size_t segment);

/// Adapts the encoder of `params` in place on masked reconstruction of one
/// input: each step averages the loss over `views_per_batch` random mask
/// plans and takes an SGD-momentum step on encoder parameters only. Starts
/// from zero velocity. Decoder and head are never written.
AdaptationTrace ttt_adapt(const Tensor<float>& patches, mae::ModelParams<float>& params,
                          const mae::PatchConfig& cfg, const TttConfig& ttt,
                          std::uint64_t seed);

struct TttPrediction {
  std::array<float, mae::kNumClasses> probs{};
  mae::Label label = mae::Label::kHealthy;
  AdaptationTrace trace;
};

mae::Label argmax_label(const std::array<float, mae::kNumClasses>& probs);

/// Snapshot encoder, adapt, classify with the adapted encoder and original
/// head, then restore the encoder bitwise.
TttPrediction ttt_predict(const Tensor<float>& patches, mae::ModelParams<float>& params,
                          const mae::PatchConfig& cfg, const TttConfig& ttt,
                          std::uint64_t seed);

/// One adaptation pass that records class probabilities after each step
/// count in `checkpoints` (ascending, max <= ttt.steps). Encoder restored on
/// return.
std::vector<std::array<float, mae::kNumClasses>> predict_at_checkpoints(
    const Tensor<float>& patches, mae::ModelParams<float>& params,
    const mae::PatchConfig& cfg, const TttConfig& ttt, std::uint64_t seed,
    std::span<const std::size_t> checkpoints, AdaptationTrace* trace = nullptr);

void validate_checkpoints(std::span<const std::size_t> checkpoints, std::size_t max_steps);

}  // namespace tttmae::ttt
