#include <udlad/detector.hpp>

#include <algorithm>

namespace udlad {

std::vector<Index> support_set(const SparseCode& X) {
  std::vector<char> seen(static_cast<std::size_t>(X.rows()), 0);
  for (Index j = 0; j < X.cols(); ++j)
    for (Index i : X.support(j)) seen[static_cast<std::size_t>(i)] = 1;
  std::vector<Index> out;
  for (Index i = 0; i < X.rows(); ++i)
    if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

DetectionReport detect(const Mat& Y_test, const Model& model) {
  const Dictionary& D = model.dictionary;
  if (Y_test.rows() != D.dim())
    throw data_error("detect: test data rows do not match the model dimension");
  if (model.support_set.empty())
    throw data_error("detect: model has an empty support set");

  DetectionReport report;
  const Index N = Y_test.cols();
  report.flags.resize(static_cast<std::size_t>(N), 0);
  report.scores.resize(static_cast<std::size_t>(N), 0);
  report.support_sets.resize(static_cast<std::size_t>(N));

  if (static_cast<Index>(model.support_set.size()) == D.size())
    report.warning = "support set covers every atom; no anomalies would be detected";

  const auto& I = model.support_set;  // sorted
  for (Index j = 0; j < N; ++j) {
    OmpResult enc = omp_encode(Y_test.col(j), D, model.config.sparsity);
    std::vector<Index> J;
    for (std::size_t k = 0; k < enc.support.size(); ++k)
      if (enc.coeffs[static_cast<Index>(k)] != 0.0) J.push_back(enc.support[k]);
    std::sort(J.begin(), J.end());

    Index outside = 0;
    for (Index atom : J)
      if (!std::binary_search(I.begin(), I.end(), atom)) ++outside;

    if (J.empty()) report.empty_support_samples.push_back(j);
    report.scores[static_cast<std::size_t>(j)] = outside;
    report.flags[static_cast<std::size_t>(j)] = outside >= 1 ? 1 : 0;
    report.support_sets[static_cast<std::size_t>(j)] = std::move(J);
  }
  return report;
}

}  // namespace udlad
