#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tttmae/features.hpp"
#include "tttmae/manifest.hpp"
#include "tttmae/metrics.hpp"
#include "tttmae/shift.hpp"
#include "tttmae/training.hpp"
#include "tttmae/ttt.hpp"

namespace tttmae::harness {

/// Raised when a protocol cannot run, e.g. a filter leaves a split empty.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { kFrozen, kTtt };
std::string to_string(Mode m);

/// Loads the clean audio of a manifest entry.
using AudioLoader = std::function<audio::Waveform(const ManifestEntry&)>;
AudioLoader file_loader(const Manifest& m);
AudioLoader memory_loader(const Corpus& c);

struct ProtocolConfig {
  features::InputConfig input;
  mae::PatchConfig patch;
  training::TrainConfig train;
  ttt::TttConfig ttt;
  std::size_t bootstrap_resamples = 1000;
  std::uint64_t seed = 0;
};

/// Manifest rows used for probe training / testing under `spec`.
/// clean and noise: every train / test row. gender_cross:G trains on gender
/// G and tests on the other; dataset_cross:T trains on tag T and tests on
/// every other tag.
std::vector<std::size_t> train_rows(const Manifest& m, const ShiftSpec& spec);
std::vector<std::size_t> test_rows(const Manifest& m, const ShiftSpec& spec);

/// Clean segments of every train-split recording, for MAE pretraining.
std::vector<audio::Waveform> pretrain_segments(const Manifest& m, const AudioLoader& load,
                                               const features::InputConfig& in);

struct PretrainResult {
  std::size_t segments = 0;
  std::vector<double> losses;
};

/// Fits `input`'s normalization on the clean train-split segments, then
/// pretrains the MAE in `params` on them.
PretrainResult pretrain_for(const Manifest& m, const AudioLoader& load,
                            features::InputConfig& input, mae::ModelParams<float>& params,
                            const mae::PatchConfig& patch,
                            const training::PretrainConfig& train);

/// Counts of training-batch items by group, filled through the probe's
/// batch observer.
struct TrainAudit {
  std::size_t female = 0;
  std::size_t male = 0;
  std::map<std::string, std::size_t> by_tag;
  std::map<std::string, std::size_t> by_split;
  std::size_t batch_items = 0;
};

training::ProbeResult train_probe_for(const Manifest& m, const AudioLoader& load,
                                      const ShiftSpec& spec, mae::ModelParams<float>& params,
                                      const ProtocolConfig& cfg, bool finetune_encoder,
                                      TrainAudit* audit = nullptr);

struct RecordingResult {
  std::string id;
  mae::Label truth = mae::Label::kHealthy;
  mae::Label predicted = mae::Label::kHealthy;
  std::vector<SegmentVote> segments;
  std::vector<ttt::AdaptationTrace> traces;  // per segment, TTT mode only
};

struct EvalReport {
  ShiftSpec shift;
  Mode mode = Mode::kFrozen;
  F1Scores scores;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t n_recordings = 0;
  std::vector<RecordingResult> recordings;
};

/// Test recordings are segmented, shifted (test audio only), predicted per
/// segment and majority-voted per recording.
EvalReport run_protocol(const Manifest& m, const AudioLoader& load, const ShiftSpec& spec,
                        mae::ModelParams<float>& params, Mode mode, const ProtocolConfig& cfg);

struct SweepPoint {
  std::size_t steps = 0;
  F1Scores scores;
};

/// Macro-F at each TTT step count in `checkpoints`, from a single adaptation
/// pass per segment.
std::vector<SweepPoint> sweep_steps(const Manifest& m, const AudioLoader& load,
                                    const ShiftSpec& spec, mae::ModelParams<float>& params,
                                    const ProtocolConfig& cfg,
                                    std::span<const std::size_t> checkpoints);

/// Seed for the noise added to one test recording.
std::uint64_t shift_seed(std::uint64_t run_seed, const std::string& id);

// CSV formats; every line ends in a newline.
std::string report_csv_header();
std::string report_csv_row(const EvalReport& r);
std::string trace_csv(const EvalReport& r);
std::string sweep_csv(std::span<const SweepPoint> points);

}  // namespace tttmae::harness
