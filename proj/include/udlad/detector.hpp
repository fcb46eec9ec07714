#ifndef UDLAD_DETECTOR_HPP
#define UDLAD_DETECTOR_HPP

#include <udlad/dict_learning.hpp>

#include <string>
#include <vector>

namespace udlad {

struct DetectionReport {
  std::vector<char> flags;                      // 1 = anomaly
  std::vector<Index> scores;                    // |J \ I| per sample
  std::vector<std::vector<Index>> support_sets; // sorted J per sample
  std::vector<Index> empty_support_samples;     // classified inlier, but noted
  std::string warning;                          // nonempty when I covers all atoms
};

// Sorted indices of the rows of X with at least one nonzero entry.
std::vector<Index> support_set(const SparseCode& X);

// Encodes each test column with the model's dictionary and sparsity, and flags
// the samples whose support J is not contained in the model's support set I.
// The score counts the atoms outside I, so thresholding at >= 1 reproduces the
// plain containment rule.
DetectionReport detect(const Mat& Y_test, const Model& model);

}  // namespace udlad

#endif
