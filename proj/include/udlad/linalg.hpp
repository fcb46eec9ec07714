#ifndef UDLAD_LINALG_HPP
#define UDLAD_LINALG_HPP

#include <udlad/types.hpp>

namespace udlad {

// Dominant singular triplet of a dense matrix: R ~ u * sigma * v^T with
// ||u|| = ||v|| = 1, sigma >= 0. The sign is fixed so that the first nonzero
// entry of u is positive, which makes the triplet unique (and reruns on the
// same input bitwise identical) whenever sigma_1 > sigma_2.
struct Rank1Triplet {
  Vec u;
  double sigma = 0.0;
  Vec v;
};

// Thrown when power iteration does not reach the residual tolerance within
// max_iter sweeps; carries the best iterate seen so callers that can tolerate
// an approximate triplet may keep going.
class convergence_error : public error {
public:
  convergence_error(const std::string& what, Rank1Triplet best)
      : error(what), best_(std::move(best)) {}
  const Rank1Triplet& best() const { return best_; }

private:
  Rank1Triplet best_;
};

// Best rank-1 approximation of R via power iteration on the Gram operator,
// started from the column of R with the largest norm (lowest index on ties).
// Convergence: ||R v - sigma u|| <= tol * max(1, sigma).
// An all-zero R returns (e1, 0, e1).
Rank1Triplet rank1_svd(const Mat& R, double tol = 1e-10, int max_iter = 1000);

// Sum of squared entries.
double fro_norm_sq(const Mat& M);

}  // namespace udlad

#endif
