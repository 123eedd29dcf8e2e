#pragma once

#include <cstdint>
#include <string>

#include "rfmlab/rng.hpp"
#include "rfmlab/types.hpp"

namespace rfmlab::rfm {

enum class Activation { relu };

// Fixed random feature map: Z = [act(Y*K + 1*b^T), 1].
// The m-1 stacked direction vectors (K column, b entry) are drawn uniformly
// from the unit sphere in R^{n_f+1}; (seed, n_f, m) fully determines them.
struct RFMParams {
  Matrix K;        // n_f x (m-1)
  Vector b;        // m-1
  Activation activation = Activation::relu;
  Index m = 0;     // feature width including the bias column
  std::uint64_t seed = 0;

  Index n_f() const { return K.rows(); }
};

// Uniform draw from the unit sphere in R^dim (normalized Gaussian).
Vector sample_unit_sphere(Index dim, Rng& rng);

RFMParams build_rfm(Index n_f, Index m, std::uint64_t seed);

// Z = [relu(Y*K + 1*b^T), 1]; Y is n x n_f, result is n x m.
Matrix featurize(const RFMParams& params, const Matrix& Y);

// Replay document: seed, dims and activation only (K and b are rebuilt).
std::string params_to_json(const RFMParams& params);
RFMParams params_from_json(const std::string& text);

}  // namespace rfmlab::rfm
