#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qht/errors.hpp"

namespace qht {

struct LabeledPoint {
    std::vector<double> features;
    int label = 0; // 0 or 1
};

struct SplitSpec {
    double train_fraction = 0.7;
    std::uint64_t seed = 0;
    bool stratified = true;
};

// Per-feature affine map onto [-1, 1], fit on training data only.
struct MinMaxParams {
    std::vector<double> mins;
    std::vector<double> maxs;
};

// Selects exactly two raw classes and maps them onto {0, 1}. Label tokens are
// matched textually, so numeric labels work as their literal spelling.
struct ClassPair {
    std::string class_zero;
    std::string class_one;
};

MinMaxParams minmax_fit(const std::vector<LabeledPoint>& train);

// x' = 2 (x - min) / (max - min) - 1. Outputs outside [-1, 1] (possible for
// data the fit has not seen) are clamped and counted.
std::vector<LabeledPoint> minmax_apply(const MinMaxParams& params,
                                       const std::vector<LabeledPoint>& points,
                                       std::size_t* clamp_count = nullptr);

// CSV loader. Rows whose label matches neither class are dropped; it is a
// data error if either chosen class never appears.
std::vector<LabeledPoint> load_csv(const std::string& path,
                                   const std::vector<std::size_t>& feature_columns,
                                   std::size_t label_column, const ClassPair& classes,
                                   bool has_header = false);

// Two isotropic Gaussian clusters labeled by their center.
std::vector<LabeledPoint> make_blobs(std::size_t n_per_class,
                                     const std::array<std::array<double, 2>, 2>& centers,
                                     double sigma, std::uint64_t seed);

// Class 0 on (cos t, sin t), class 1 on (1 - cos t, 0.5 - sin t), t uniform
// on [0, pi], plus isotropic Gaussian noise.
std::vector<LabeledPoint> make_moons(std::size_t n_per_class, double noise_sigma,
                                     std::uint64_t seed);

std::pair<std::vector<LabeledPoint>, std::vector<LabeledPoint>> train_test_split(
    const std::vector<LabeledPoint>& points, const SplitSpec& spec);

// Subsamples the majority class (seeded) down to the minority count.
std::vector<LabeledPoint> balance_classes(const std::vector<LabeledPoint>& points,
                                          std::uint64_t seed);

// Appends zeros so the feature length becomes 2^ceil(log2 N).
std::vector<LabeledPoint> pad_to_pow2(const std::vector<LabeledPoint>& points);

// Dataset CSV text: header "f0,f1,...,label", one row per point.
std::string to_csv(const std::vector<LabeledPoint>& points);

} // namespace qht
