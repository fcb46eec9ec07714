#ifndef UDLAD_SPARSE_CODING_HPP
#define UDLAD_SPARSE_CODING_HPP

#include <udlad/types.hpp>

#include <cstdint>
#include <vector>

namespace udlad {

// A dictionary of unit-norm atoms stored as the columns of an m x n matrix.
class Dictionary {
public:
  // Validates that every column has unit norm within 1e-9.
  explicit Dictionary(Mat atoms);

  // i.i.d. standard normal entries, columns normalized. Deterministic in seed.
  static Dictionary random(Index m, Index n, std::uint64_t seed);

  Index dim() const { return atoms_.rows(); }
  Index size() const { return atoms_.cols(); }
  const Mat& atoms() const { return atoms_; }
  Vec atom(Index j) const { return atoms_.col(j); }

private:
  Mat atoms_;
};

// Column-compressed storage of an n x N representation matrix. Only nonzero
// coefficients are kept: an entry whose value becomes exactly zero is dropped
// from its column's support.
class SparseCode {
public:
  SparseCode(Index n_rows, Index n_cols);

  Index rows() const { return n_; }
  Index cols() const { return N_; }

  const std::vector<Index>& support(Index col) const { return supports_[col]; }
  const std::vector<double>& coeffs(Index col) const { return coeffs_[col]; }

  // Replaces a column; zero coefficients in the input are dropped.
  void set_column(Index col, const std::vector<Index>& support,
                  const std::vector<double>& coeffs);

  // Sets one entry, dropping it when value == 0. The (col, row) pair must
  // already be present unless value is zero.
  void set_entry(Index col, Index row, double value);

  double entry(Index col, Index row) const;  // 0 when absent

  Index nnz() const;
  Mat to_dense() const;

  // Squared l2 norm of row i over its (structurally sparse) entries.
  double row_norm_sq(Index row) const;

private:
  Index n_, N_;
  std::vector<std::vector<Index>> supports_;
  std::vector<std::vector<double>> coeffs_;
};

struct OmpResult {
  std::vector<Index> support;  // in selection order
  Vec coeffs;                  // least-squares fit on the selected atoms
};

// Greedy orthogonal matching pursuit: repeatedly selects the atom with the
// largest |correlation| against the residual (lowest index on ties) and
// re-solves the normal equations on the selected set. Stops at s atoms, when
// the residual norm drops to residual_tol, or when no further selection makes
// progress (zero correlations or a linearly dependent candidate).
OmpResult omp_encode(const Vec& y, const Dictionary& D, Index s,
                     double residual_tol);

// residual_tol = 1e-12 * ||y||.
OmpResult omp_encode(const Vec& y, const Dictionary& D, Index s);

// Column-by-column encoding of Y. Exact zeros in the least-squares fits are
// dropped when assembling the SparseCode.
SparseCode omp_encode_batch(const Mat& Y, const Dictionary& D, Index s,
                            double residual_tol);
SparseCode omp_encode_batch(const Mat& Y, const Dictionary& D, Index s);

// Default per-signal sparsity: max(1, round(0.2 * sqrt(m))), half away from
// zero.
Index default_sparsity(Index m);

}  // namespace udlad

#endif
