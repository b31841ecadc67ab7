#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "tttmae/features.hpp"
#include "tttmae/mae.hpp"

namespace tttmae::checkpoint {

/// Malformed file, unknown version, or a layout / config that does not match
/// what the caller expects.
class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The stored patch or frontend config differs from the running one.
class ConfigMismatchError : public CheckpointError {
 public:
  using CheckpointError::CheckpointError;
};

enum class Stage { kPretrain, kProbe };
std::string to_string(Stage s);
Stage parse_stage(const std::string& s);

struct Checkpoint {
  Stage stage = Stage::kPretrain;
  mae::PatchConfig patch;
  features::InputConfig input;
  std::string train_filter = "clean";  // ShiftSpec name the probe was trained under
  bool finetune_encoder = false;
  std::uint64_t seed = 0;
  mae::ModelParams<float> params;
};

inline constexpr std::uint32_t kVersion = 1;

/// Magic, version, JSON metadata, then every named tensor as raw
/// little-endian float32. Written atomically.
std::string serialize(const Checkpoint& ck);
Checkpoint deserialize(const std::string& bytes);

void save(const Checkpoint& ck, const std::filesystem::path& path);
/// Throws IoError when the file is unreadable, CheckpointError when it is
/// malformed.
Checkpoint load(const std::filesystem::path& path);

/// Throws ConfigMismatchError naming the first field where the stored configs
/// differ from the expected ones. Normalization statistics are fit at
/// pretraining and are not compared.
void require_compatible(const Checkpoint& ck, const mae::PatchConfig& patch,
                        const audio::FrontendConfig& frontend, double segment_seconds);

}  // namespace tttmae::checkpoint
