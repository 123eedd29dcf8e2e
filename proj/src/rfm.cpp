#include "rfmlab/rfm.hpp"

#include <stdexcept>

#include <json.hpp>

namespace rfmlab::rfm {

Vector sample_unit_sphere(Index dim, Rng& rng) {
  if (dim < 1) {
    throw std::invalid_argument("sample_unit_sphere: dim must be >= 1");
  }
  Vector v(dim);
  double norm = 0.0;
  do {
    for (Index i = 0; i < dim; ++i) v(i) = rng.normal();
    norm = v.norm();
  } while (norm == 0.0);  // all-zero draw has probability ~0; redraw
  return v / norm;
}

RFMParams build_rfm(Index n_f, Index m, std::uint64_t seed) {
  if (n_f < 1) {
    throw std::invalid_argument("build_rfm: n_f must be >= 1");
  }
  if (m < 2) {
    throw std::invalid_argument("build_rfm: m must be >= 2 (no room for the bias column)");
  }
  RFMParams params;
  params.K.resize(n_f, m - 1);
  params.b.resize(m - 1);
  params.m = m;
  params.seed = seed;

  Rng rng(seed);
  for (Index j = 0; j < m - 1; ++j) {
    // the stacked direction (K column; b entry) lives on the unit sphere
    const Vector dir = sample_unit_sphere(n_f + 1, rng);
    params.K.col(j) = dir.head(n_f);
    params.b(j) = dir(n_f);
  }
  return params;
}

Matrix featurize(const RFMParams& params, const Matrix& Y) {
  if (Y.cols() != params.n_f()) {
    throw std::invalid_argument("featurize: Y has " + std::to_string(Y.cols()) +
                                " columns, expected " + std::to_string(params.n_f()));
  }
  const Index n = Y.rows();
  Matrix Z(n, params.m);
  Z.leftCols(params.m - 1) =
      ((Y * params.K).rowwise() + params.b.transpose()).cwiseMax(0.0);
  Z.col(params.m - 1).setOnes();
  return Z;
}

std::string params_to_json(const RFMParams& params) {
  nlohmann::json doc{
      {"seed", params.seed},
      {"n_f", params.n_f()},
      {"m", params.m},
      {"activation", "relu"},
  };
  return doc.dump();
}

RFMParams params_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (doc.at("activation").get<std::string>() != "relu") {
    throw std::invalid_argument("params_from_json: unknown activation");
  }
  return build_rfm(doc.at("n_f").get<Index>(), doc.at("m").get<Index>(),
                   doc.at("seed").get<std::uint64_t>());
}

}  // namespace rfmlab::rfm
