#pragma once

#include <cstddef>
#include <span>

#include "tttmae/audio.hpp"
#include "tttmae/mae.hpp"

namespace tttmae::features {

/// Turns one fixed-length waveform segment into normalized model patches.
struct InputConfig {
  audio::FrontendConfig frontend;
  double segment_seconds = 7.0;
  float mean = 0.0f;
  float stddev = 1.0f;

  std::size_t segment_samples() const;
  /// Spectrogram frames fed to the model: the full-frame count of one
  /// segment rounded down to a multiple of patch_time.
  std::size_t model_frames(const mae::PatchConfig& patch) const;
  bool operator==(const InputConfig& o) const;
};

/// Log-mel of `segment`, cropped to `model_frames`, standardized.
audio::LogMelSpectrogram model_spectrogram(const audio::Waveform& segment,
                                           const InputConfig& in,
                                           const mae::PatchConfig& patch);

Tensor<float> prepare_input(const audio::Waveform& segment, const InputConfig& in,
                            const mae::PatchConfig& patch);

/// Sets `in.mean` / `in.stddev` from the pooled log-mel values of `segments`.
void fit_normalization(std::span<const audio::Waveform> segments, InputConfig& in);

}  // namespace tttmae::features
