#pragma once

#include <string>
#include <vector>

#include "rfmlab/numerics.hpp"
#include "rfmlab/types.hpp"

namespace rfmlab::spectral {

enum class FilterKind { none, tsvd, gradient_flow, weight_decay };

// Filter-factor family. n and m are the sample count and feature width of
// the system the filters act on; they enter the gradient-flow time scale
// (m*n) and the weight-decay penalty scale (n).
struct FilterSpec {
  FilterKind kind = FilterKind::none;
  double hyperparameter = 0.0;  // tau, t or alpha depending on kind
  Index n = 1;
  Index m = 1;

  static FilterSpec none(Index n, Index m) { return {FilterKind::none, 0.0, n, m}; }
  static FilterSpec tsvd(double tau, Index n, Index m) { return {FilterKind::tsvd, tau, n, m}; }
  static FilterSpec gradient_flow(double t, Index n, Index m) {
    return {FilterKind::gradient_flow, t, n, m};
  }
  static FilterSpec weight_decay(double alpha, Index n, Index m) {
    return {FilterKind::weight_decay, alpha, n, m};
  }
};

// Per-index filter factors phi_j in [0,1] for descending positive sigmas:
//   tsvd:          phi = 1 if sigma > tau, else 0
//   gradient_flow: phi = 1 - exp(-sigma^2 t / (m n))
//   weight_decay:  phi = sigma^2 / (sigma^2 + n alpha^2)
//   none:          phi = 1
Vector filters(const FilterSpec& spec, const Vector& sigmas);

// w = sum_j phi_j (u_j'c / sigma_j) v_j. With FilterKind::none this is the
// minimum-norm least-squares solution.
Vector filtered_solution(const numerics::SVDTriple& svd, const Vector& c,
                         const FilterSpec& spec);

// Column-by-column filtered solutions for a multi-output right-hand side.
Matrix filtered_solution_multi(const numerics::SVDTriple& svd, const Matrix& C,
                               const FilterSpec& spec);

// Rows (sigma_j, |u_j'c|, |u_j'c|/sigma_j) for j = 1..r.
struct PicardData {
  Vector sigma;
  Vector coef;
  Vector ratio;

  Index rows() const { return sigma.size(); }
};

PicardData picard_data(const numerics::SVDTriple& svd, const Vector& c);

// CSV with header "j,sigma,coef,ratio".
std::string picard_to_csv(const PicardData& data);

}  // namespace rfmlab::spectral
