#include <udlad/sparse_coding.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>

namespace udlad {

Dictionary::Dictionary(Mat atoms) : atoms_(std::move(atoms)) {
  if (atoms_.rows() < 1 || atoms_.cols() < 1)
    throw data_error("dictionary must have at least one row and one atom");
  if (!atoms_.allFinite()) throw data_error("dictionary has non-finite entries");
  for (Index j = 0; j < atoms_.cols(); ++j) {
    if (std::abs(atoms_.col(j).norm() - 1.0) > 1e-9)
      throw data_error("dictionary atom " + std::to_string(j) +
                       " is not unit-norm");
  }
}

Dictionary Dictionary::random(Index m, Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat A(m, n);
  for (Index j = 0; j < n; ++j) {
    double norm = 0.0;
    do {
      for (Index i = 0; i < m; ++i) A(i, j) = gauss(rng);
      norm = A.col(j).norm();
    } while (norm == 0.0);
    A.col(j) /= norm;
  }
  return Dictionary(std::move(A));
}

SparseCode::SparseCode(Index n_rows, Index n_cols)
    : n_(n_rows), N_(n_cols), supports_(n_cols), coeffs_(n_cols) {
  assert(n_rows >= 1 && n_cols >= 1);
}

void SparseCode::set_column(Index col, const std::vector<Index>& support,
                            const std::vector<double>& coeffs) {
  assert(support.size() == coeffs.size());
  auto& s = supports_[col];
  auto& c = coeffs_[col];
  s.clear();
  c.clear();
  for (std::size_t k = 0; k < support.size(); ++k) {
    assert(support[k] >= 0 && support[k] < n_);
    if (coeffs[k] != 0.0) {
      s.push_back(support[k]);
      c.push_back(coeffs[k]);
    }
  }
}

void SparseCode::set_entry(Index col, Index row, double value) {
  auto& s = supports_[col];
  auto& c = coeffs_[col];
  auto it = std::find(s.begin(), s.end(), row);
  if (it == s.end()) {
    assert(value == 0.0 && "set_entry may not grow a column's support");
    return;
  }
  const auto pos = static_cast<std::size_t>(it - s.begin());
  if (value == 0.0) {
    s.erase(it);
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(pos));
  } else {
    c[pos] = value;
  }
}

double SparseCode::entry(Index col, Index row) const {
  const auto& s = supports_[col];
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] == row) return coeffs_[col][k];
  return 0.0;
}

Index SparseCode::nnz() const {
  Index total = 0;
  for (const auto& s : supports_) total += static_cast<Index>(s.size());
  return total;
}

Mat SparseCode::to_dense() const {
  Mat X = Mat::Zero(n_, N_);
  for (Index j = 0; j < N_; ++j)
    for (std::size_t k = 0; k < supports_[j].size(); ++k)
      X(supports_[j][k], j) = coeffs_[j][k];
  return X;
}

double SparseCode::row_norm_sq(Index row) const {
  double total = 0.0;
  for (Index j = 0; j < N_; ++j) {
    const double v = entry(j, row);
    total += v * v;
  }
  return total;
}

OmpResult omp_encode(const Vec& y, const Dictionary& D, Index s,
                     double residual_tol) {
  if (y.size() != D.dim())
    throw data_error("omp_encode: signal length " + std::to_string(y.size()) +
                     " does not match dictionary dimension " +
                     std::to_string(D.dim()));
  if (s < 1) throw error("omp_encode: sparsity must be at least 1");
  if (s > D.dim())
    throw error("omp_encode: sparsity " + std::to_string(s) +
                " exceeds signal dimension " + std::to_string(D.dim()));
  if (residual_tol < 0.0) throw error("omp_encode: negative residual_tol");

  const Index n = D.size();
  OmpResult out;
  Vec r = y;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  const double progress_floor = 1e-13 * std::max(1.0, y.norm());

  while (static_cast<Index>(out.support.size()) < s) {
    if (r.norm() <= residual_tol) break;

    Vec corr = D.atoms().transpose() * r;
    Index pick = -1;
    double best = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double a = std::abs(corr[j]);
      if (a > best) {
        best = a;
        pick = j;
      }
    }
    if (pick < 0 || best <= progress_floor) break;

    out.support.push_back(pick);
    used[static_cast<std::size_t>(pick)] = 1;

    // Full re-solve of the normal equations on the selected set.
    const Index k = static_cast<Index>(out.support.size());
    Mat A(D.dim(), k);
    for (Index t = 0; t < k; ++t) A.col(t) = D.atom(out.support[t]);
    Mat G = A.transpose() * A;
    Eigen::FullPivLU<Mat> lu(G);
    if (lu.rank() < k) {
      // Newly selected atom is linearly dependent on the others; undo and stop.
      out.support.pop_back();
      break;
    }
    out.coeffs = lu.solve(A.transpose() * y);
    r = y - A * out.coeffs;
  }

  if (out.support.empty()) out.coeffs = Vec(0);
  return out;
}

OmpResult omp_encode(const Vec& y, const Dictionary& D, Index s) {
  return omp_encode(y, D, s, 1e-12 * y.norm());
}

SparseCode omp_encode_batch(const Mat& Y, const Dictionary& D, Index s,
                            double residual_tol) {
  if (Y.rows() != D.dim())
    throw data_error("omp_encode_batch: data rows do not match dictionary");
  SparseCode X(D.size(), Y.cols());
  for (Index j = 0; j < Y.cols(); ++j) {
    try {
      OmpResult r = omp_encode(Y.col(j), D, s, residual_tol);
      std::vector<double> vals(r.coeffs.data(), r.coeffs.data() + r.coeffs.size());
      X.set_column(j, r.support, vals);
    } catch (const error& e) {
      throw error("column " + std::to_string(j) + ": " + e.what());
    }
  }
  return X;
}

SparseCode omp_encode_batch(const Mat& Y, const Dictionary& D, Index s) {
  if (Y.rows() != D.dim())
    throw data_error("omp_encode_batch: data rows do not match dictionary");
  SparseCode X(D.size(), Y.cols());
  for (Index j = 0; j < Y.cols(); ++j) {
    try {
      OmpResult r = omp_encode(Y.col(j), D, s);
      std::vector<double> vals(r.coeffs.data(), r.coeffs.data() + r.coeffs.size());
      X.set_column(j, r.support, vals);
    } catch (const error& e) {
      throw error("column " + std::to_string(j) + ": " + e.what());
    }
  }
  return X;
}

Index default_sparsity(Index m) {
  return std::max<Index>(1, static_cast<Index>(std::floor(0.2 * std::sqrt(
                                                              static_cast<double>(m)) +
                                                          0.5)));
}

}  // namespace udlad
