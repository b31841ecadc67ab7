#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tttmae/audio.hpp"
#include "tttmae/mask.hpp"
#include "tttmae/tape.hpp"
#include "tttmae/tensor.hpp"

namespace tttmae::mae {

struct PatchConfig {
  std::size_t patch_time = 4;
  std::size_t patch_mel = 4;
  std::size_t embed_dim = 64;
  std::size_t decoder_dim = 32;
  std::size_t enc_layers = 2;
  std::size_t dec_layers = 1;
  std::size_t heads = 4;
  std::size_t mlp_ratio = 4;
  std::size_t head_hidden = 100;
  std::size_t head_layers = 2;
  double mask_ratio = 0.8;

  std::size_t patch_len() const { return patch_time * patch_mel; }
  /// Patch count for a frames x mels grid; throws ShapeError when indivisible.
  std::size_t patch_count(std::size_t frames, std::size_t mels) const;
  void validate() const;
  bool operator==(const PatchConfig&) const = default;
};

inline constexpr std::size_t kNumClasses = 2;
enum class Label : std::size_t { kHealthy = 0, kDepressed = 1 };

template <typename T>
struct Linear {
  Tensor<T> weight;  // in x out
  Tensor<T> bias;    // out
};

template <typename T>
struct Block {
  Tensor<T> ln1_gamma, ln1_beta;
  Linear<T> q, k, v, o;
  Tensor<T> ln2_gamma, ln2_beta;
  Linear<T> fc1, fc2;
};

template <typename T>
struct EncoderParams {
  Linear<T> patch_proj;
  std::vector<Block<T>> blocks;
  Tensor<T> norm_gamma, norm_beta;
};

template <typename T>
struct DecoderParams {
  Linear<T> embed;
  Tensor<T> mask_token;  // 1 x decoder_dim
  std::vector<Block<T>> blocks;
  Tensor<T> norm_gamma, norm_beta;
  Linear<T> pred;
};

template <typename T>
struct HeadParams {
  // Fixed feature standardization (x + shift) * scale, fit on training
  // features and never updated by an optimizer.
  Tensor<T> feat_shift, feat_scale;
  std::vector<Linear<T>> hidden;
  Linear<T> out;
};

enum class Group { kEncoder, kDecoder, kHead };

template <typename T>
using NamedParams = std::vector<std::pair<std::string, Tensor<T>*>>;

/// Bitwise copy of one parameter group.
template <typename T>
struct Snapshot {
  Group group;
  std::vector<std::vector<T>> values;
};

/// Encoder (e), decoder (g) and classification head (d) parameters.
/// Positional tables are fixed sinusoids computed on demand and are not
/// parameters.
template <typename T>
struct ModelParams {
  EncoderParams<T> encoder;
  DecoderParams<T> decoder;
  HeadParams<T> head;

  /// Trainable tensors of a group.
  NamedParams<T> group(Group g);
  NamedParams<T> all();
  /// Trainable tensors plus fixed buffers; what snapshots, checksums and
  /// checkpoints cover.
  NamedParams<T> state(Group g);
  NamedParams<T> all_state();

  void set_trainable(Group g, bool on);
  void zero_grad(Group g);
  void clear_grads();

  Snapshot<T> snapshot(Group g);
  void restore(const Snapshot<T>& snap);
  /// FNV-1a over the raw bytes of every tensor in the group.
  std::uint64_t checksum(Group g);

  template <typename U>
  ModelParams<U> cast() const;
};

template <typename T>
ModelParams<T> init_params(const PatchConfig& cfg, std::uint64_t seed);

/// Fixed sinusoidal table: even dims sin(pos / 10000^(2i/d)), odd dims cos.
template <typename T>
Tensor<T> sinusoidal_table(std::size_t positions, std::size_t dim);

/// Splits frames x mels into P row-major (time, mel) tiles, each flattened
/// row-major, giving a P x (patch_time * patch_mel) tensor.
template <typename T>
Tensor<T> patchify(const audio::LogMelSpectrogram& s, const PatchConfig& cfg);
audio::LogMelSpectrogram unpatchify(const Tensor<float>& patches, std::size_t frames,
                                    std::size_t mels, const PatchConfig& cfg);

/// Linear patch projection plus the positional table by original index.
template <typename T>
Var embed_patches(Tape<T>& tape, ModelParams<T>& params, const PatchConfig& cfg,
                  Var patches);

/// Runs the encoder on the visible tokens of `plan`, or on every token when
/// `plan` is null.
template <typename T>
Var encode(Tape<T>& tape, ModelParams<T>& params, const PatchConfig& cfg, Var embedded,
           const MaskPlan* plan);

/// Reconstructs all P patches from visible-only latents.
template <typename T>
Var decode(Tape<T>& tape, ModelParams<T>& params, const PatchConfig& cfg, Var latents,
           const MaskPlan& plan);

/// MSE over the masked patches of `patches`.
template <typename T>
Var reconstruction_loss(Tape<T>& tape, ModelParams<T>& params, const PatchConfig& cfg,
                        const Tensor<T>& patches, const MaskPlan& plan);

/// Full-sequence encoding mean-pooled to 1 x embed_dim.
template <typename T>
Var pooled_features(Tape<T>& tape, ModelParams<T>& params, const PatchConfig& cfg,
                    const Tensor<T>& patches);

/// Sets the head's feature standardization from N x embed_dim features:
/// per-dimension centering and one shared scale. With fewer than two rows it
/// is reset to the identity.
template <typename T>
void fit_feature_norm(ModelParams<T>& params, const Tensor<T>& features);

/// Head on B x embed_dim features, returning B x 2 logits.
template <typename T>
Var head_logits(Tape<T>& tape, ModelParams<T>& params, Var features);

/// Class probabilities (healthy, depressed) with no masking.
template <typename T>
std::array<T, kNumClasses> classify(ModelParams<T>& params, const PatchConfig& cfg,
                                    const Tensor<T>& patches);

template <typename T>
std::array<T, kNumClasses> classify(ModelParams<T>& params, const PatchConfig& cfg,
                                    const audio::LogMelSpectrogram& s) {
  return classify(params, cfg, patchify<T>(s, cfg));
}

}  // namespace tttmae::mae
