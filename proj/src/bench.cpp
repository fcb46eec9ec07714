#include <udlad/bench.hpp>

#include <udlad/detector.hpp>

#include <chrono>
#include <cmath>
#include <limits>

namespace udlad {

double balanced_accuracy(const std::vector<std::uint8_t>& labels,
                         const std::vector<char>& flags) {
  if (labels.size() != flags.size())
    throw data_error("balanced_accuracy: labels and flags differ in length");
  Index tp = 0, fn = 0, tn = 0, fp = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i]) {
      flags[i] ? ++tp : ++fn;
    } else {
      flags[i] ? ++fp : ++tn;
    }
  }
  if (tp + fn == 0 || tn + fp == 0)
    throw data_error("balanced_accuracy: labels contain a single class");
  const double tpr = static_cast<double>(tp) / static_cast<double>(tp + fn);
  const double tnr = static_cast<double>(tn) / static_cast<double>(tn + fp);
  return 0.5 * (tpr + tnr);
}

std::vector<double> default_lambda_grid(const Mat& signals) {
  double scale = 0.0;
  for (Index j = 0; j < signals.cols(); ++j) scale += signals.col(j).norm();
  scale /= static_cast<double>(signals.cols());
  if (scale == 0.0) scale = 1.0;

  std::vector<double> grid;
  for (int k = 0; k < 8; ++k)
    grid.push_back(scale * std::pow(10.0, -3.0 + 4.0 * k / 7.0));
  return grid;
}

namespace {

struct RunOutcome {
  double ba = 0.5;
  double train_seconds = 0.0;
};

RunOutcome run_once(const Dataset& data, double lambda, std::int64_t seed,
                    const TrainConfig& base_cfg, const GridOptions& opts,
                    Index n_atoms) {
  Split split = split_for_ad(data, opts.train_fraction, seed);
  if (opts.standardize) standardize_features(split.train, split.test);

  TrainConfig cfg = base_cfg;
  cfg.lambda = lambda;
  cfg.seed = seed;

  // A distinct stream for the initial dictionary, so it is not correlated
  // with the split shuffle.
  const Dictionary D0 = Dictionary::random(
      split.train.dim(), n_atoms, static_cast<std::uint64_t>(seed) + 0x9e3779b9u);

  RunOutcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    TrainResult trained = train(split.train.signals, D0, cfg);
    out.train_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    DetectionReport report = detect(split.test.signals, trained.model);
    out.ba = balanced_accuracy(*split.test.labels, report.flags);
  } catch (const degenerate_error&) {
    out.train_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    out.ba = 0.5;  // chance level; the sweep continues
  }
  return out;
}

}  // namespace

BenchResult grid_search(const Dataset& data, const std::vector<double>& lambdas,
                        Index repeats, const TrainConfig& base_cfg,
                        const GridOptions& opts) {
  if (lambdas.empty()) throw error("grid_search: empty lambda grid");
  if (repeats < 1) throw error("grid_search: repeats must be at least 1");
  const Index n_atoms = opts.n_atoms > 0 ? opts.n_atoms : 2 * data.dim();

  std::vector<std::vector<RunOutcome>> outcomes(lambdas.size());
  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    for (Index r = 0; r < repeats; ++r)
      outcomes[li].push_back(
          run_once(data, lambdas[li], base_cfg.seed + r, base_cfg, opts, n_atoms));
  }

  std::size_t best = 0;
  double best_mean = -std::numeric_limits<double>::infinity();
  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    double mean = 0.0;
    for (const auto& o : outcomes[li]) mean += o.ba;
    mean /= static_cast<double>(repeats);
    if (mean > best_mean) {
      best_mean = mean;
      best = li;
    }
  }

  BenchResult result;
  result.dataset_name = data.name;
  result.regularizer = reg_name(base_cfg.regularizer.kind);
  result.lambda_best = lambdas[best];
  result.repeats = repeats;
  result.ba_mean = best_mean;

  double var = 0.0, time_sum = 0.0;
  result.ba_max = 0.0;
  for (const auto& o : outcomes[best]) {
    result.ba_max = std::max(result.ba_max, o.ba);
    var += (o.ba - best_mean) * (o.ba - best_mean);
    time_sum += o.train_seconds;
  }
  result.ba_std =
      repeats > 1 ? std::sqrt(var / static_cast<double>(repeats - 1)) : 0.0;
  result.train_seconds =
      opts.record_times ? time_sum / static_cast<double>(repeats) : 0.0;
  return result;
}

}  // namespace udlad
