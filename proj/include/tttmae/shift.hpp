#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tttmae/audio.hpp"
#include "tttmae/synth.hpp"

namespace tttmae::harness {

enum class ShiftKind { kClean, kNoise, kGenderCross, kDatasetCross };

/// A test condition. Noise shifts edit the test audio; the cross shifts are
/// realized by filtering the manifest: train on `train_group` (a gender
/// letter or a dataset tag), test on everything else.
struct ShiftSpec {
  ShiftKind kind = ShiftKind::kClean;
  std::optional<NoiseType> noise;
  double snr_db = 5.0;
  std::string train_group;

  /// Canonical text form: clean, noise:awgn@5, gender_cross:F, dataset_cross:cld.
  std::string name() const;
  void validate() const;
  bool operator==(const ShiftSpec&) const = default;
};

/// Parses the forms produced by `name()`; `noise:<type>` defaults to 5 dB.
ShiftSpec parse_shift(const std::string& text);

/// clean and cross shifts return the input unchanged; additive noises are
/// mixed at spec.snr_db; reverb convolves with a synthetic impulse response
/// and rescales to the input power.
audio::Waveform apply_shift(const audio::Waveform& w, const ShiftSpec& spec,
                            std::uint64_t seed);

inline constexpr double kReverbSeconds = 0.3;

}  // namespace tttmae::harness
