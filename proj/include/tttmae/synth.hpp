#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "tttmae/audio.hpp"
#include "tttmae/manifest.hpp"

namespace tttmae::harness {

/// Parameters of the synthetic stand-in corpus. Recordings are harmonic
/// carriers whose amplitude envelope rate depends on the class, whose
/// fundamental depends on gender and whose spectral tilt and envelope shape
/// depend on the dataset tag.
struct SynthConfig {
  std::size_t n_train = 64;  // per dataset tag
  std::size_t n_validation = 0;
  std::size_t n_test = 32;
  double duration_seconds = 7.0;
  std::vector<std::string> dataset_tags = {"cld", "daic"};
  double female_fraction = 0.5;
  double f0_female = 210.0;
  double f0_male = 120.0;
  double am_rate_healthy = 6.0;
  double am_rate_depressed = 1.5;
  double am_depth = 0.8;
  double carrier_max_hz = 7600.0;  // highest harmonic kept
  double breath_level = 0.03;      // aspiration noise relative to the carrier
  double tilt_base = 1.0;
  double tilt_step = 0.6;  // added per dataset tag index
  double level_rms = 0.1;
  std::uint64_t seed = 1;

  double class_separation() const { return std::abs(am_rate_healthy - am_rate_depressed); }
  void validate() const;
};

/// Per-recording draw of the generator, kept so tests can inspect it.
struct RecordingParams {
  double f0 = 0.0;
  double am_rate = 0.0;
  double am_phase = 0.0;
  double tilt = 0.0;
  std::size_t am_family = 0;
  double am_depth = 0.8;
  double carrier_max_hz = 7600.0;
  double breath_level = 0.03;
  std::uint64_t seed = 0;
};

RecordingParams draw_recording(const SynthConfig& cfg, mae::Label label, Gender gender,
                               std::size_t tag_index, std::uint64_t seed);
audio::Waveform synthesize(const RecordingParams& p, double seconds, double level_rms);

/// Builds the manifest and audio in memory (paths are `audio/<id>.wav`).
struct Corpus {
  Manifest manifest;
  std::vector<audio::Waveform> audio;  // parallel to manifest.entries
};
Corpus synthesize_corpus(const SynthConfig& cfg);

/// Writes `audio/<id>.wav` files and `manifest.csv` under `dir` (created if
/// its parent exists). Returns the manifest path.
std::filesystem::path generate_synthetic_corpus(const SynthConfig& cfg,
                                                const std::filesystem::path& dir);

enum class NoiseType { kAwgn, kHum, kBabbleLike, kReverb };

std::string to_string(NoiseType t);
NoiseType parse_noise_type(const std::string& s);

/// awgn: Gaussian; hum: 50 Hz and harmonics; babble_like: six drifting
/// amplitude-modulated voiced-band tones; reverb: an exponentially decaying
/// impulse response of `length` samples (for convolution, not mixing).
audio::Waveform synth_noise(NoiseType type, std::size_t length, std::uint64_t seed);

/// Linear convolution truncated to the input length.
std::vector<float> convolve_same(std::span<const float> x, std::span<const float> h);

}  // namespace tttmae::harness
