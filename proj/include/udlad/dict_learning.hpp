#ifndef UDLAD_DICT_LEARNING_HPP
#define UDLAD_DICT_LEARNING_HPP

#include <udlad/linalg.hpp>
#include <udlad/sparse_coding.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace udlad {

// Penalty applied to each representation row norm z = ||x_i||_2:
//   L21:   z
//   L20:   1 if z != 0 else 0
//   Trunc: min(z, epsilon)
enum class RegKind { L21, L20, Trunc };

struct Regularizer {
  RegKind kind = RegKind::L21;
  double epsilon = 0.0;  // Trunc only; must be > 0 there
};

double penalty_value(const Regularizer& reg, double row_norm);

const char* reg_name(RegKind kind);
RegKind reg_from_name(const std::string& name);

struct TrainConfig {
  double lambda = 0.0;
  Index sweeps = 20;
  Index sparsity = 1;
  Regularizer regularizer;
  std::int64_t seed = 0;
  double svd_tol = 1e-10;
};

// Result of one regularized rank-1 row update. When is_zero the caller keeps
// its previous atom; `atom` is still unit-norm (the dominant left singular
// vector of the residual it was computed from).
struct RowUpdate {
  Vec atom;
  Vec row_values;  // over the restricted column set
  bool is_zero = false;
};

// Row-norm soft threshold: keep (u, (sigma - lambda) v) when sigma >= lambda,
// zero the row otherwise.
RowUpdate row_update_l21(const Mat& R, double lambda, double svd_tol = 1e-10);

// Row-norm hard threshold: keep the plain rank-1 update (u, sigma v) when
// sigma^2 >= 2 lambda (ties keep), zero the row otherwise.
RowUpdate row_update_l20(const Mat& R, double lambda, double svd_tol = 1e-10);

// Truncated penalty min(t, epsilon): the optimal row magnitude is whichever of
// clamp(sigma - lambda, 0, epsilon) and max(epsilon, sigma) scores lower on
// lambda * min(t, epsilon) + t^2/2 - sigma t, ties toward the smaller one.
RowUpdate row_update_trunc(const Mat& R, double lambda, double epsilon,
                           double svd_tol = 1e-10);

// F(D, X) = 1/2 ||D X - Y||_F^2 + lambda * sum_i phi(||x_i||_2) over rows.
double objective(const Dictionary& D, const SparseCode& X, const Mat& Y,
                 double lambda, const Regularizer& reg);

struct Model {
  Dictionary dictionary;
  std::vector<Index> support_set;  // sorted rows of X left nonzero
  TrainConfig config;
  std::vector<double> objective_trace;  // initial value, then one per sweep
};

// Fired after each effective row update (atoms whose column set is empty are
// skipped and do not fire).
struct RowUpdateEvent {
  Index sweep;       // 1-based
  Index atom;        // dictionary column updated
  double objective;  // F(D, X) right after the update
  Index row_nnz;     // entries left in the updated row
};
using RowUpdateObserver = std::function<void(const RowUpdateEvent&)>;

struct TrainResult {
  Model model;
  SparseCode code;
};

// One-shot OMP on Y with D_init, then `sweeps` passes of regularized rank-1
// row updates restricted to the columns that use each atom. Throws
// degenerate_error when every row ends up zero.
TrainResult train(const Mat& Y, const Dictionary& D_init, const TrainConfig& cfg,
                  const RowUpdateObserver& on_row_update = {});

}  // namespace udlad

#endif
