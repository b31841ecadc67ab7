#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tttmae/mae.hpp"

namespace tttmae::harness {

enum class Gender { kFemale, kMale };
enum class Split { kTrain, kValidation, kTest };

struct ManifestEntry {
  std::string id;
  std::string path;  // relative to the manifest's directory, or absolute
  mae::Label label = mae::Label::kHealthy;
  Gender gender = Gender::kFemale;
  std::string dataset_tag;
  Split split = Split::kTrain;

  bool operator==(const ManifestEntry&) const = default;
};

struct Manifest {
  std::filesystem::path root;  // directory that relative paths resolve against
  std::vector<ManifestEntry> entries;

  std::filesystem::path audio_path(const ManifestEntry& e) const;
};

/// Raised for malformed manifests (bad header, unknown enum value, duplicate id).
class ManifestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_string(mae::Label l);
std::string to_string(Gender g);
std::string to_string(Split s);
mae::Label parse_label(const std::string& s);
Gender parse_gender(const std::string& s);
Split parse_split(const std::string& s);

/// CSV with header `id,path,label,gender,dataset_tag,split`.
std::string format_manifest(const Manifest& m);
Manifest parse_manifest(const std::string& text, const std::filesystem::path& root);
Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const Manifest& m, const std::filesystem::path& path);

}  // namespace tttmae::harness
