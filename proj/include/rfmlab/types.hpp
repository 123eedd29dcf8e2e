#pragma once

#include <Eigen/Dense>

namespace rfmlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace rfmlab
