#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "tttmae/mae.hpp"

namespace tttmae::harness {

/// counts[actual][predicted]
struct Confusion {
  std::array<std::array<std::size_t, mae::kNumClasses>, mae::kNumClasses> counts{};

  void add(mae::Label actual, mae::Label predicted) {
    ++counts[static_cast<std::size_t>(actual)][static_cast<std::size_t>(predicted)];
  }
  std::size_t total() const;
};

/// Scores on a 0-100 scale. macro_f is exactly (f1_healthy + f1_depressed) / 2.
struct F1Scores {
  double f1_healthy = 0.0;
  double f1_depressed = 0.0;
  double macro_f = 0.0;
};

/// Per-class F1 = 2TP / (2TP + FP + FN); a class with no predicted and no
/// actual members scores 0. Throws std::invalid_argument on an empty matrix.
F1Scores macro_f(const Confusion& c);
double macro_from_f1(double f1_healthy, double f1_depressed);

struct Outcome {
  mae::Label truth = mae::Label::kHealthy;
  mae::Label predicted = mae::Label::kHealthy;
};

Confusion confusion_of(std::span<const Outcome> outcomes);

/// Percentile bootstrap of the macro-F over recordings, resampling within
/// each true class so every resample keeps the observed class balance. The
/// interval is widened if needed to contain the point estimate.
std::pair<double, double> bootstrap_ci(std::span<const Outcome> outcomes,
                                       std::size_t resamples = 1000, double level = 0.95,
                                       std::uint64_t seed = 0);

struct SegmentVote {
  mae::Label label = mae::Label::kHealthy;
  double p_depressed = 0.0;
};

/// Most frequent segment label; a tie goes to depressed when the mean
/// depressed probability exceeds 0.5, otherwise healthy.
mae::Label majority_vote(std::span<const SegmentVote> votes);

}  // namespace tttmae::harness
