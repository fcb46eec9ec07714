#ifndef UDLAD_BENCH_HPP
#define UDLAD_BENCH_HPP

#include <udlad/data.hpp>
#include <udlad/dict_learning.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace udlad {

struct BenchResult {
  std::string dataset_name;
  std::string regularizer;
  double lambda_best = 0.0;
  double ba_mean = 0.0;
  double ba_max = 0.0;
  double ba_std = 0.0;
  double train_seconds = 0.0;  // mean per training run at lambda_best
  Index repeats = 0;
};

// (sensitivity + specificity) / 2 with outliers as the positive class.
// Throws when labels hold only one class.
double balanced_accuracy(const std::vector<std::uint8_t>& labels,
                         const std::vector<char>& flags);

struct GridOptions {
  Index n_atoms = 0;          // learned dictionary size; 0 = 2 * m
  double train_fraction = 0.9;
  bool standardize = false;
  bool record_times = true;   // false pins train_seconds to 0 for reproducible output
};

// For each lambda, `repeats` runs with seeds base_cfg.seed + 0..repeats-1,
// each with a fresh inlier split and a fresh random initial dictionary. A run
// whose training annihilates every row scores chance level (0.5). Reports the
// lambda with the best mean balanced accuracy.
BenchResult grid_search(const Dataset& data, const std::vector<double>& lambdas,
                        Index repeats, const TrainConfig& base_cfg,
                        const GridOptions& opts = {});

// Eight log-spaced points in [1e-3, 1e1] scaled by the mean column norm.
std::vector<double> default_lambda_grid(const Mat& signals);

}  // namespace udlad

#endif
