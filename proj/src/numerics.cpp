#include "rfmlab/numerics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

namespace rfmlab::numerics {

SVDTriple svd(const Matrix& A, double rank_tol) {
  if (A.rows() < 1 || A.cols() < 1) {
    throw std::invalid_argument("svd: empty matrix");
  }
  if (!A.allFinite()) {
    throw std::invalid_argument("svd: non-finite entries");
  }
  if (!(rank_tol > 0.0 && rank_tol < 1.0)) {
    throw std::invalid_argument("svd: rank_tol must lie in (0,1)");
  }

  // Jacobi is more accurate on tiny problems, divide-and-conquer scales.
  Matrix U, V;
  Vector S;
  if (std::min(A.rows(), A.cols()) <= 16) {
    Eigen::JacobiSVD<Matrix> dec(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success) {
      throw std::runtime_error("svd: Jacobi iteration did not converge");
    }
    U = dec.matrixU();
    S = dec.singularValues();
    V = dec.matrixV();
  } else {
    Eigen::BDCSVD<Matrix> dec(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success) {
      throw std::runtime_error("svd: divide-and-conquer iteration did not converge");
    }
    U = dec.matrixU();
    S = dec.singularValues();
    V = dec.matrixV();
  }

  const double threshold = rank_tol * (S.size() > 0 ? S(0) : 0.0);
  Index r = 0;
  while (r < S.size() && S(r) > threshold) ++r;

  SVDTriple out;
  out.U = U.leftCols(r);
  out.S = S.head(r);
  out.V = V.leftCols(r);
  out.r = r;
  return out;
}

ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              double lo, double hi, double tol) {
  if (!(lo < hi)) {
    throw std::invalid_argument("minimize_scalar: requires lo < hi");
  }
  if (tol < 0.0) tol = 1e-8 * (hi - lo);

  int evals = 0;
  auto eval = [&](double x) {
    const double v = f(x);
    ++evals;
    if (!std::isfinite(v)) {
      throw std::runtime_error("minimize_scalar: objective returned non-finite value at x=" +
                               std::to_string(x));
    }
    return v;
  };

  constexpr double invphi = 0.6180339887498948482;  // 1/phi
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);

  constexpr int kMaxIters = 200;
  for (int it = 0; it < kMaxIters && (b - a) > tol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = eval(x2);
    }
  }

  return f1 <= f2 ? ScalarMinimum{x1, f1, evals} : ScalarMinimum{x2, f2, evals};
}

}  // namespace rfmlab::numerics
