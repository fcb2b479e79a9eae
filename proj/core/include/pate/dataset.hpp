#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pate/matrix.hpp"

namespace pate {

// A labeled dataset with a group attribute per row. Labels and groups are
// dense integer codes; the code -> original string mapping is kept for
// report readability. Immutable by convention once constructed.
struct Dataset {
  Matrix features;                        // n x d
  std::vector<int> labels;                // n, in [0, class_count)
  std::vector<int> groups;                // n, in [0, group_count)
  std::vector<std::string> feature_names; // d
  std::vector<std::string> label_names;   // class_count, by first appearance
  std::vector<std::string> group_names;   // group_count, by first appearance
  int class_count = 0;
  int group_count = 0;

  std::size_t size() const { return features.rows; }
  std::size_t dim() const { return features.cols; }
};

struct SplitSpec {
  double private_fraction = 0.75;
  std::size_t public_train_count = 200;
  std::uint64_t seed = 0;
};

struct SplitResult {
  Dataset private_set;
  Dataset public_train;
  Dataset public_test;
};

struct SynthConfig {
  std::size_t n = 1000;
  std::size_t d = 10;
  int class_count = 2;
  std::vector<double> group_fractions = {0.3, 0.7};   // must sum to 1
  std::vector<double> norm_scale_per_group = {1.0, 3.0};
  double label_noise = 0.0;                           // in [0, 0.5)
  std::uint64_t seed = 0;
};

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::string& group_column, bool include_group_feature = true);

// Per-column (x - mean) / sample std (n-1 convention). Constant columns map
// to all zeros instead of erroring.
Dataset standardize(const Dataset& ds);

SplitResult split(const Dataset& ds, const SplitSpec& spec);

// Disjoint shards whose sizes differ by at most one: seeded shuffle, then
// round-robin deal.
std::vector<Dataset> partition_teachers(const Dataset& private_set, std::size_t k,
                                        std::uint64_t seed);

// Gaussian class-conditional clusters; rows of group g are scaled by
// norm_scale_per_group[g], which gives the groups distinct input-norm
// profiles. Labels are flipped with probability label_noise.
Dataset synthesize(const SynthConfig& cfg);

Dataset group_subset(const Dataset& ds, int group_id);

Dataset take_rows(const Dataset& ds, const std::vector<std::size_t>& indices);

}  // namespace pate
