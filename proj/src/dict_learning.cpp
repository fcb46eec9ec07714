#include <udlad/dict_learning.hpp>

#include <algorithm>
#include <cassert>
#include <cmath>

namespace udlad {

double penalty_value(const Regularizer& reg, double row_norm) {
  switch (reg.kind) {
    case RegKind::L21:
      return row_norm;
    case RegKind::L20:
      return row_norm != 0.0 ? 1.0 : 0.0;
    case RegKind::Trunc:
      return std::min(row_norm, reg.epsilon);
  }
  return 0.0;
}

const char* reg_name(RegKind kind) {
  switch (kind) {
    case RegKind::L21:
      return "l21";
    case RegKind::L20:
      return "l20";
    case RegKind::Trunc:
      return "trunc";
  }
  return "?";
}

RegKind reg_from_name(const std::string& name) {
  if (name == "l21") return RegKind::L21;
  if (name == "l20") return RegKind::L20;
  if (name == "trunc") return RegKind::Trunc;
  throw data_error("unknown regularizer '" + name + "'");
}

namespace {

// Row updates must not fail; if power iteration stalls (e.g. a near-tie in the
// top singular values) the best iterate is still a valid descent direction.
Rank1Triplet top_triplet(const Mat& R, double svd_tol) {
  try {
    return rank1_svd(R, svd_tol);
  } catch (const convergence_error& e) {
    return e.best();
  }
}

RowUpdate make_update(const Rank1Triplet& t, double magnitude) {
  RowUpdate out;
  out.atom = t.u;
  if (magnitude > 0.0) {
    out.row_values = magnitude * t.v;
    out.is_zero = false;
  } else {
    out.row_values = Vec::Zero(t.v.size());
    out.is_zero = true;
  }
  return out;
}

}  // namespace

RowUpdate row_update_l21(const Mat& R, double lambda, double svd_tol) {
  assert(lambda >= 0.0);
  const Rank1Triplet t = top_triplet(R, svd_tol);
  return make_update(t, std::max(0.0, t.sigma - lambda));
}

RowUpdate row_update_l20(const Mat& R, double lambda, double svd_tol) {
  assert(lambda >= 0.0);
  const Rank1Triplet t = top_triplet(R, svd_tol);
  const bool keep = t.sigma * t.sigma >= 2.0 * lambda;
  return make_update(t, keep ? t.sigma : 0.0);
}

RowUpdate row_update_trunc(const Mat& R, double lambda, double epsilon,
                           double svd_tol) {
  assert(lambda >= 0.0 && epsilon > 0.0);
  const Rank1Triplet t = top_triplet(R, svd_tol);
  const double sigma = t.sigma;
  // Piecewise minimizers of lambda*min(t,eps) + t^2/2 - sigma*t on [0,eps]
  // and [eps,inf), ties toward the smaller magnitude.
  const double t1 = std::clamp(sigma - lambda, 0.0, epsilon);
  const double t2 = std::max(epsilon, sigma);
  const double g1 = lambda * std::min(t1, epsilon) + 0.5 * t1 * t1 - sigma * t1;
  const double g2 = lambda * epsilon + 0.5 * t2 * t2 - sigma * t2;
  const double magnitude = g1 <= g2 ? t1 : t2;
  return make_update(t, magnitude);
}

double objective(const Dictionary& D, const SparseCode& X, const Mat& Y,
                 double lambda, const Regularizer& reg) {
  if (X.rows() != D.size() || X.cols() != Y.cols() || D.dim() != Y.rows())
    throw data_error("objective: dimension mismatch");

  double fit = 0.0;
  std::vector<double> row_sq(static_cast<std::size_t>(X.rows()), 0.0);
  Vec e(Y.rows());
  for (Index j = 0; j < Y.cols(); ++j) {
    e = Y.col(j);
    const auto& sup = X.support(j);
    const auto& cf = X.coeffs(j);
    for (std::size_t k = 0; k < sup.size(); ++k) {
      e -= cf[k] * D.atom(sup[k]);
      row_sq[static_cast<std::size_t>(sup[k])] += cf[k] * cf[k];
    }
    fit += e.squaredNorm();
  }

  double penalty = 0.0;
  for (double sq : row_sq) penalty += penalty_value(reg, std::sqrt(sq));
  return 0.5 * fit + lambda * penalty;
}

namespace {

RowUpdate apply_regularizer(const Mat& R, const TrainConfig& cfg) {
  switch (cfg.regularizer.kind) {
    case RegKind::L21:
      return row_update_l21(R, cfg.lambda, cfg.svd_tol);
    case RegKind::L20:
      return row_update_l20(R, cfg.lambda, cfg.svd_tol);
    case RegKind::Trunc:
      return row_update_trunc(R, cfg.lambda, cfg.regularizer.epsilon,
                              cfg.svd_tol);
  }
  throw error("train: unknown regularizer");
}

}  // namespace

TrainResult train(const Mat& Y, const Dictionary& D_init, const TrainConfig& cfg,
                  const RowUpdateObserver& on_row_update) {
  if (Y.rows() != D_init.dim()) throw data_error("train: data rows do not match dictionary");
  if (cfg.sweeps < 1) throw error("train: sweeps must be at least 1");
  if (cfg.lambda < 0.0) throw error("train: lambda must be nonnegative");
  if (cfg.regularizer.kind == RegKind::Trunc && cfg.regularizer.epsilon <= 0.0)
    throw error("train: truncated penalty requires epsilon > 0");

  const Index m = Y.rows();
  const Index n = D_init.size();

  SparseCode X = omp_encode_batch(Y, D_init, cfg.sparsity);
  Mat D = D_init.atoms();

  // users[i]: columns whose support currently contains atom i. Supports only
  // shrink during training, so this index is maintained by removal.
  std::vector<std::vector<Index>> users(static_cast<std::size_t>(n));
  for (Index j = 0; j < X.cols(); ++j)
    for (Index i : X.support(j)) users[static_cast<std::size_t>(i)].push_back(j);

  Mat E = Y;
  for (Index j = 0; j < X.cols(); ++j) {
    const auto& sup = X.support(j);
    const auto& cf = X.coeffs(j);
    for (std::size_t k = 0; k < sup.size(); ++k) E.col(j) -= cf[k] * D.col(sup[k]);
  }

  const auto current_objective = [&]() {
    return objective(Dictionary(D), X, Y, cfg.lambda, cfg.regularizer);
  };

  std::vector<double> trace;
  trace.reserve(static_cast<std::size_t>(cfg.sweeps) + 1);
  trace.push_back(current_objective());

  Mat R;
  for (Index sweep = 1; sweep <= cfg.sweeps; ++sweep) {
    for (Index i = 0; i < n; ++i) {
      auto& cols = users[static_cast<std::size_t>(i)];
      if (cols.empty()) continue;

      const Index w = static_cast<Index>(cols.size());
      R.resize(m, w);
      for (Index t = 0; t < w; ++t)
        R.col(t) = E.col(cols[static_cast<std::size_t>(t)]) +
                   X.entry(cols[static_cast<std::size_t>(t)], i) * D.col(i);

      const RowUpdate upd = apply_regularizer(R, cfg);

      if (upd.is_zero) {
        for (Index t = 0; t < w; ++t) {
          const Index j = cols[static_cast<std::size_t>(t)];
          E.col(j) = R.col(t);
          X.set_entry(j, i, 0.0);
        }
        cols.clear();
      } else {
        D.col(i) = upd.atom;
        std::vector<Index> still_using;
        still_using.reserve(cols.size());
        for (Index t = 0; t < w; ++t) {
          const Index j = cols[static_cast<std::size_t>(t)];
          E.col(j) = R.col(t) - upd.row_values[t] * upd.atom;
          X.set_entry(j, i, upd.row_values[t]);
          if (upd.row_values[t] != 0.0) still_using.push_back(j);
        }
        cols = std::move(still_using);
      }

      if (on_row_update) {
        RowUpdateEvent ev;
        ev.sweep = sweep;
        ev.atom = i;
        ev.objective = current_objective();
        ev.row_nnz = static_cast<Index>(cols.size());
        on_row_update(ev);
      }
    }

    trace.push_back(current_objective());

#ifndef NDEBUG
    {
      // Bound the drift of the incrementally maintained error matrix.
      Mat E_exact = Y;
      for (Index j = 0; j < X.cols(); ++j) {
        const auto& sup = X.support(j);
        const auto& cf = X.coeffs(j);
        for (std::size_t k = 0; k < sup.size(); ++k)
          E_exact.col(j) -= cf[k] * D.col(sup[k]);
      }
      const double drift = (E - E_exact).norm();
      assert(drift <= 1e-8 * std::max(1.0, E_exact.norm()));
    }
#endif
  }

  std::vector<Index> support;
  for (Index i = 0; i < n; ++i)
    if (!users[static_cast<std::size_t>(i)].empty()) support.push_back(i);
  if (support.empty())
    throw degenerate_error("all rows annihilated; reduce lambda");

  Model model{Dictionary(D), std::move(support), cfg, std::move(trace)};
  return TrainResult{std::move(model), std::move(X)};
}

}  // namespace udlad
