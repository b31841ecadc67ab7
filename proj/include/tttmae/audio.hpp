#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tttmae/io.hpp"

namespace tttmae::audio {

inline constexpr int kSampleRate = 16000;

/// Raised when a WAV file violates the accepted format (RIFF PCM16 mono 16 kHz).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Waveform {
  std::vector<float> samples;
  int sample_rate = kSampleRate;

  std::size_t size() const { return samples.size(); }
  double seconds() const { return static_cast<double>(samples.size()) / sample_rate; }
};

/// Mean of squared samples, accumulated in double.
double power(std::span<const float> samples);

Waveform load_wav(const std::filesystem::path& path);
/// Writes RIFF PCM16 mono; samples are clipped to [-1, 1) before quantization.
void save_wav(const Waveform& w, const std::filesystem::path& path);

struct FrontendConfig {
  std::size_t win_length = 400;
  std::size_t hop_length = 160;
  std::size_t n_fft = 512;
  std::size_t n_mels = 32;
  float log_floor = 1e-10f;
};

/// Triangular filters on the HTK mel scale spanning 0 Hz to Nyquist.
class MelFilterbank {
 public:
  MelFilterbank(std::size_t n_mels, std::size_t n_fft, int sample_rate = kSampleRate);

  std::size_t mels() const { return n_mels_; }
  std::size_t bins() const { return n_bins_; }
  float weight(std::size_t mel, std::size_t bin) const { return weights_[mel * n_bins_ + bin]; }
  const std::vector<double>& center_hz() const { return centers_; }

  static double hz_to_mel(double hz);
  static double mel_to_hz(double mel);

 private:
  std::size_t n_mels_;
  std::size_t n_bins_;
  std::vector<float> weights_;
  std::vector<double> centers_;
};

/// frames x mels grid of log mel energies, stored frame-major.
struct LogMelSpectrogram {
  std::size_t frames = 0;
  std::size_t mels = 0;
  std::vector<float> values;

  float& at(std::size_t t, std::size_t m) { return values[t * mels + m]; }
  float at(std::size_t t, std::size_t m) const { return values[t * mels + m]; }
  bool operator==(const LogMelSpectrogram&) const = default;
};

std::size_t frame_count(std::size_t num_samples, const FrontendConfig& cfg);

/// Hann-windowed STFT power through a mel filterbank, then log(x + floor).
LogMelSpectrogram log_mel(const Waveform& w, const FrontendConfig& cfg = {});

/// Keeps the first `frames` frames (cropping) or repeats the floor value
/// (padding) so the frame count matches exactly.
LogMelSpectrogram fit_frames(const LogMelSpectrogram& s, std::size_t frames, float pad_value);

/// Returns clean + alpha * noise with alpha chosen so that
/// 10 log10(P_clean / P_scaled_noise) == snr_db. Noise shorter than the clean
/// signal is tiled end to end; longer noise is truncated.
Waveform mix_at_snr(const Waveform& clean, const Waveform& noise, double snr_db);

/// Noise gain used by mix_at_snr, exposed for tests.
double snr_gain(double clean_power, double noise_power, double snr_db);

/// Splits into consecutive non-overlapping segments of `seg_seconds`. A final
/// remainder of at least half a segment is zero-padded and kept; shorter
/// remainders are dropped.
std::vector<Waveform> segment_waveform(const Waveform& w, double seg_seconds = 7.0);

void write_spectrogram_csv(const LogMelSpectrogram& s, const std::filesystem::path& path);

}  // namespace tttmae::audio
