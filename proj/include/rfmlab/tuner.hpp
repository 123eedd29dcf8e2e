#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rfmlab/numerics.hpp"
#include "rfmlab/spectral.hpp"
#include "rfmlab/types.hpp"

namespace rfmlab::tuner {

struct TuneResult {
  double best_hyperparameter = 0.0;
  double best_loss = 0.0;
  std::vector<std::pair<double, double>> grid_losses;  // (hyperparameter, loss)
  std::string method = "grid_then_refine";
};

// Geometrically spaced values from lo to hi inclusive.
Vector log_grid(double lo, double hi, Index points = 100);

// Evaluate the objective on a log-spaced grid, then refine from the best
// grid point with golden-section search on the log axis, restricted to the
// neighboring grid interval. Never returns a loss above the best grid loss.
TuneResult tune(const std::function<double(double)>& objective, double lo,
                double hi, Index grid_points = 100);

// Oracle-style baseline tuning on a fixed SVD of the feature matrix. The
// objective builds the filtered solution for every column of C_train and
// hands it to eval_fn; the SVD is computed once by the caller and reused.
TuneResult tune_weight_decay(const numerics::SVDTriple& svd, const Matrix& C_train,
                             const std::function<double(const Matrix&)>& eval_fn,
                             double lo = 1e-8, double hi = 1e2);

TuneResult tune_stopping_time(const numerics::SVDTriple& svd, const Matrix& C_train,
                              const std::function<double(const Matrix&)>& eval_fn,
                              double lo = 1e-2, double hi = 1e10);

std::string tune_to_csv(const TuneResult& result);
std::string tune_to_json(const TuneResult& result, bool oracle);

}  // namespace rfmlab::tuner
