#include "rfmlab/spectral.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rfmlab/io.hpp"

namespace rfmlab::spectral {

Vector filters(const FilterSpec& spec, const Vector& sigmas) {
  if (spec.hyperparameter < 0.0) {
    throw std::invalid_argument("filters: hyperparameter must be >= 0");
  }
  if (spec.n < 1 || spec.m < 1) {
    throw std::invalid_argument("filters: n and m must be >= 1");
  }
  Vector phi(sigmas.size());
  switch (spec.kind) {
    case FilterKind::none:
      phi.setOnes();
      break;
    case FilterKind::tsvd:
      for (Index j = 0; j < sigmas.size(); ++j) {
        phi(j) = sigmas(j) > spec.hyperparameter ? 1.0 : 0.0;
      }
      break;
    case FilterKind::gradient_flow: {
      const double scale = spec.hyperparameter /
                           (static_cast<double>(spec.m) * static_cast<double>(spec.n));
      for (Index j = 0; j < sigmas.size(); ++j) {
        phi(j) = 1.0 - std::exp(-sigmas(j) * sigmas(j) * scale);
      }
      break;
    }
    case FilterKind::weight_decay: {
      const double penalty = static_cast<double>(spec.n) * spec.hyperparameter *
                             spec.hyperparameter;
      for (Index j = 0; j < sigmas.size(); ++j) {
        const double s2 = sigmas(j) * sigmas(j);
        phi(j) = s2 / (s2 + penalty);
      }
      break;
    }
  }
  return phi;
}

Vector filtered_solution(const numerics::SVDTriple& svd, const Vector& c,
                         const FilterSpec& spec) {
  if (c.size() != svd.U.rows()) {
    throw std::invalid_argument("filtered_solution: c has length " +
                                std::to_string(c.size()) + ", expected " +
                                std::to_string(svd.U.rows()));
  }
  if (svd.r == 0) return Vector::Zero(svd.V.rows());
  const Vector phi = filters(spec, svd.S);
  const Vector coef =
      (svd.U.transpose() * c).cwiseQuotient(svd.S).cwiseProduct(phi);
  return svd.V * coef;
}

Matrix filtered_solution_multi(const numerics::SVDTriple& svd, const Matrix& C,
                               const FilterSpec& spec) {
  if (C.rows() != svd.U.rows()) {
    throw std::invalid_argument("filtered_solution_multi: row mismatch");
  }
  Matrix W(svd.V.rows(), C.cols());
  if (svd.r == 0) {
    W.setZero();
    return W;
  }
  const Vector phi = filters(spec, svd.S);
  const Vector scale = phi.cwiseQuotient(svd.S);
  W.noalias() = svd.V * scale.asDiagonal() * (svd.U.transpose() * C);
  return W;
}

PicardData picard_data(const numerics::SVDTriple& svd, const Vector& c) {
  if (c.size() != svd.U.rows()) {
    throw std::invalid_argument("picard_data: c has length " + std::to_string(c.size()) +
                                ", expected " + std::to_string(svd.U.rows()));
  }
  PicardData out;
  out.sigma = svd.S;
  out.coef = (svd.U.transpose() * c).cwiseAbs();
  out.ratio = out.coef.cwiseQuotient(out.sigma);
  return out;
}

std::string picard_to_csv(const PicardData& data) {
  std::string csv = "j,sigma,coef,ratio\n";
  for (Index j = 0; j < data.rows(); ++j) {
    csv += std::to_string(j + 1);
    csv += ',';
    csv += io::format_double(data.sigma(j));
    csv += ',';
    csv += io::format_double(data.coef(j));
    csv += ',';
    csv += io::format_double(data.ratio(j));
    csv += '\n';
  }
  return csv;
}

}  // namespace rfmlab::spectral
