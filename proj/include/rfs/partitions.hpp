#pragma once
// Set partitions of the edge set, encoded as restricted-growth strings (RGS):
// a[0] = 0 and a[i] <= 1 + max(a[0..i-1]). One RGS per partition, so
// enumerating RGS walks the colorings of K_n exactly once up to color
// renaming. Counting oracles (Bell / Stirling), lexicographic enumeration
// with prefix splitting for worker scans, and an exact uniform sampler.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rfs/coloring.hpp"

namespace rfs {

// Second-kind Stirling numbers and Bell numbers; m up to 25 (uint64 range).
std::uint64_t stirling2(int m, int j);
std::uint64_t bell_number(int m);
// sum_{j >= min_blocks} S(m, j)
std::uint64_t stirling_sum(int m, int min_blocks);

// Visit every RGS over m items with at least min_blocks blocks, lexicographic
// order. Visitor returns false to abort. Returns the number visited.
std::uint64_t for_each_rgs(int m, int min_blocks,
                           const std::function<bool(const std::vector<int>&)>& visit);

// All valid RGS prefixes of the given length, lexicographic order.
std::vector<std::vector<int>> rgs_prefixes(int m, int prefix_len);

// Visit the RGS extending one prefix (same visiting rules as for_each_rgs).
std::uint64_t for_each_rgs_completion(int m, int min_blocks, const std::vector<int>& prefix,
                                      const std::function<bool(const std::vector<int>&)>& visit);

// Exact uniform sampling over set partitions of [m] with >= min_blocks
// blocks: block count drawn with Stirling weights, then a uniform partition
// with exactly that many blocks via the S(i,j) = S(i-1,j-1) + j*S(i-1,j)
// recurrence. m up to 33 (weights held in unsigned __int128).
class PartitionSampler {
 public:
  PartitionSampler(int m, int min_blocks);
  std::vector<int> sample(std::mt19937_64& rng) const;  // canonical RGS

 private:
  int m_;
  int min_blocks_;
  std::vector<std::vector<unsigned __int128>> s_;  // s_[i][j]
  unsigned __int128 total_;
};

// Colorings of K_n from an RGS over its lexicographically ordered edges;
// block b becomes color b+1, so the result is already normalized.
EdgeColoring coloring_from_rgs(int n, const std::vector<int>& rgs);

// Convenience: visit one EdgeColoring per partition of E(K_n) into at least
// min_colors classes. Returns the number visited.
std::uint64_t iterate_colorings(int n, int min_colors,
                                const std::function<bool(const EdgeColoring&)>& visit);

}  // namespace rfs
