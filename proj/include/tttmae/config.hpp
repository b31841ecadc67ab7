#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "tttmae/protocol.hpp"
#include "tttmae/synth.hpp"
#include "tttmae/training.hpp"

namespace tttmae::config {

/// Syntax errors, unknown sections or keys, and out-of-range values.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Paths {
  std::filesystem::path corpus_dir = "corpus";
  std::filesystem::path checkpoint_dir = "checkpoints";
  std::filesystem::path report_dir = "reports";
};

/// Everything one CLI invocation needs.
struct RunConfig {
  std::uint64_t seed = 0;
  Paths paths;
  harness::SynthConfig synth;
  training::PretrainConfig pretrain;
  harness::ProtocolConfig protocol;
  std::vector<std::size_t> sweep_checkpoints = {0, 5, 10, 20};

  /// Copies `seed` into every stage config that draws random numbers.
  void apply_seed();
  /// Throws ConfigError when a section's values are inconsistent.
  void validate() const;
};

/// Parses `[section]` headers and `key = value` lines; `#` and `;` start
/// comments. Relative paths resolve against `base_dir`.
RunConfig parse(const std::string& text, const std::filesystem::path& base_dir = {},
                const std::string& source = "<config>");
/// Reads and parses a file; IoError if unreadable.
RunConfig load(const std::filesystem::path& path);

/// The config rendered back as text, one key per line.
std::string render(const RunConfig& cfg);

std::vector<std::size_t> parse_size_list(const std::string& text);

}  // namespace tttmae::config
