#include <udlad/linalg.hpp>

#include <cassert>
#include <cmath>

namespace udlad {

namespace {

// First max by index, so ties are deterministic.
Index argmax_col_norm(const Mat& R) {
  Index best = 0;
  double best_sq = -1.0;
  for (Index j = 0; j < R.cols(); ++j) {
    const double sq = R.col(j).squaredNorm();
    if (sq > best_sq) {
      best_sq = sq;
      best = j;
    }
  }
  return best;
}

void fix_sign(Rank1Triplet& t) {
  for (Index i = 0; i < t.u.size(); ++i) {
    if (t.u[i] != 0.0) {
      if (t.u[i] < 0.0) {
        t.u = -t.u;
        t.v = -t.v;
      }
      return;
    }
  }
}

}  // namespace

Rank1Triplet rank1_svd(const Mat& R, double tol, int max_iter) {
  assert(R.rows() >= 1 && R.cols() >= 1);
  assert(R.allFinite());
  assert(tol > 0.0 && max_iter >= 1);

  const Index m = R.rows();
  const Index p = R.cols();

  Rank1Triplet out;
  out.u = Vec::Unit(m, 0);
  out.v = Vec::Unit(p, 0);
  out.sigma = 0.0;
  if (R.lpNorm<Eigen::Infinity>() == 0.0) return out;

  const Index j0 = argmax_col_norm(R);
  Vec u = R.col(j0) / R.col(j0).norm();

  Rank1Triplet best = out;
  double best_resid = std::numeric_limits<double>::infinity();

  for (int it = 0; it < max_iter; ++it) {
    Vec w = R.transpose() * u;
    const double sigma = w.norm();
    if (sigma == 0.0) {
      // u fell exactly into the null space of R^T; cannot happen from the
      // largest-column start, but bail out defensively with what we have.
      break;
    }
    Vec v = w / sigma;
    Vec z = R * v;
    const double resid = (z - sigma * u).norm();
    if (resid <= tol * std::max(1.0, sigma)) {
      out.u = u;
      out.sigma = sigma;
      out.v = v;
      fix_sign(out);
      return out;
    }
    if (resid < best_resid) {
      best_resid = resid;
      best.u = u;
      best.sigma = sigma;
      best.v = v;
    }
    u = z / z.norm();
  }

  fix_sign(best);
  throw convergence_error("rank1_svd: power iteration did not converge within " +
                              std::to_string(max_iter) + " iterations",
                          best);
}

double fro_norm_sq(const Mat& M) { return M.squaredNorm(); }

}  // namespace udlad
