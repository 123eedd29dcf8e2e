#pragma once

#include <functional>
#include <utility>

#include "rfmlab/types.hpp"

namespace rfmlab::numerics {

// Economy-size SVD A = U * diag(S) * V^T truncated at numerical rank r.
struct SVDTriple {
  Matrix U;  // n x r, column-orthonormal
  Vector S;  // r singular values, descending, strictly positive
  Matrix V;  // m x r, column-orthonormal
  Index r = 0;
};

// Thin SVD with relative rank truncation: singular values
// sigma_j <= rank_tol * sigma_1 are dropped.
SVDTriple svd(const Matrix& A, double rank_tol = 1e-12);

struct ScalarMinimum {
  double x;
  double value;
  int evaluations;
};

// Golden-section search on [lo, hi]. Never evaluates f outside the interval;
// on unimodal f the returned x is within tol of the minimizer. Default
// tol is 1e-8 * (hi - lo).
ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              double lo, double hi, double tol = -1.0);

}  // namespace rfmlab::numerics
