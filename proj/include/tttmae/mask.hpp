#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tttmae::mae {

using Rng = std::mt19937_64;

/// Partition of patch indices into masked and visible sets.
///
/// The canonical shuffled order is `visible` followed by `masked`, both
/// sorted; `restore[i]` is the position of patch `i` in that concatenation.
/// Any shuffle with the same visible set yields the same plan.
struct MaskPlan {
  std::vector<std::size_t> masked;
  std::vector<std::size_t> visible;
  std::vector<std::size_t> restore;

  std::size_t patches() const { return restore.size(); }
  bool operator==(const MaskPlan&) const = default;
};

/// round(ratio * patches) with halves rounded up.
std::size_t masked_count(std::size_t patches, double ratio);

/// Builds a plan from a shuffled permutation of 0..P-1: the first
/// P - n_masked entries stay visible.
MaskPlan plan_from_shuffle(std::span<const std::size_t> shuffled, std::size_t n_masked);

MaskPlan make_mask_plan(std::size_t patches, double ratio, Rng& rng);
MaskPlan make_mask_plan(std::size_t patches, double ratio, std::uint64_t seed);

/// Checks the partition and restore invariants; throws std::logic_error.
void validate(const MaskPlan& plan);

}  // namespace tttmae::mae
