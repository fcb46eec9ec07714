#ifndef UDLAD_DATA_HPP
#define UDLAD_DATA_HPP

#include <udlad/types.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace udlad {

// Samples are columns of `signals`. Labels, when present, mark outliers.
struct Dataset {
  Mat signals;
  std::optional<std::vector<std::uint8_t>> labels;  // 1 = outlier
  std::string name;

  Index dim() const { return signals.rows(); }
  Index count() const { return signals.cols(); }
};

struct SynthConfig {
  Index m = 64;
  Index n_inlier = 32;
  Index n_outlier = 32;
  Index overlap = 0;       // leading atoms shared between the two generators
  Index s_gen = 2;         // atoms per generated signal
  Index N_train = 900;
  Index N_test_inliers = 100;
  double outlier_fraction = 0.10;  // of the test set
  std::int64_t seed = 0;
};

// Synthetic benchmark data plus the ground truth that produced it.
struct SynthData {
  Dataset train;  // inliers only, no labels
  Dataset test;   // labeled inliers + outliers
  Mat inlier_atoms;
  Mat outlier_atoms;
  std::vector<std::vector<Index>> train_supports;  // generating atoms per signal
  std::vector<std::vector<Index>> test_supports;
};

// Two random unit-atom generator dictionaries sharing their first `overlap`
// atoms; every signal is a combination of s_gen distinct atoms with standard
// normal coefficients. Test outliers number
// round(outlier_fraction / (1 - outlier_fraction) * N_test_inliers).
// Deterministic in the seed.
SynthData gen_synthetic(const SynthConfig& cfg);

// One sample per CSV row. The label column, when named (by header name or
// 0-based index), must hold only 0/1 values.
Dataset load_csv(const std::string& path, bool has_header,
                 const std::optional<std::string>& label_column = std::nullopt);

// Same layout as load_csv reads: a header row (f0,...,f<m-1>[,label]), then
// one sample per row with 17 significant digits.
void write_csv(const Dataset& data, const std::string& path);

struct Split {
  Dataset train;  // inliers only
  Dataset test;   // remaining inliers + every outlier, original order
};

// Uniformly random train_inlier_fraction of the inliers for training; the
// rest of the inliers plus all outliers form the test set. Exact partition,
// deterministic in the seed.
Split split_for_ad(const Dataset& data, double train_inlier_fraction,
                   std::int64_t seed);

// Per-feature zero-mean unit-variance transform computed on `train` and
// applied to both sets. Constant features are left untouched.
void standardize_features(Dataset& train, Dataset& test);

// Column-wise concatenation; the result is labeled if either input is, with
// unlabeled samples treated as inliers.
Dataset concat_datasets(const Dataset& a, const Dataset& b);

}  // namespace udlad

#endif
