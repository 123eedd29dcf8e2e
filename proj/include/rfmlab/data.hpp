#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfmlab/types.hpp"

namespace rfmlab::data {

// Raised by the dataset parsers; the message names the offending byte offset.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Dataset {
  Matrix Y;                 // n x n_f, entries in [0,1]
  std::vector<int> labels;  // class ids in [0, n_c)
  Matrix C;                 // n x n_c one-hot rows
  std::string name;
  int n_c = 0;

  Index n() const { return Y.rows(); }
  Index n_f() const { return Y.cols(); }
};

// IDX-format loader (big-endian): image magic 0x00000803 with dims
// (count, 28, 28), label magic 0x00000801. Pixels are divided by 255.
Dataset load_mnist(const std::string& images_path, const std::string& labels_path);

// CIFAR-10 binary batches: 3073-byte records, 1 label byte + 3072
// channel-major pixel bytes. Batches are concatenated in argument order.
Dataset load_cifar10(const std::vector<std::string>& batch_paths);

struct SynthData {
  Dataset train;
  Dataset test;
  Matrix teacher;  // n_f x n_c linear teacher acting on the stored features
};

// Seeded synthetic classification problem: normal features mapped affinely
// into [0,1], labels from a planted linear teacher with a fraction `noise`
// of them resampled uniformly. n_test = 0 means n_test = n.
SynthData synth_dataset(Index n, Index n_f, int n_c, double noise,
                        std::uint64_t seed, Index n_test = 0);

// Uniform subsample of n rows without replacement, deterministic given seed.
Dataset subsample(const Dataset& d, Index n, std::uint64_t seed);

Matrix one_hot(const std::vector<int>& labels, int n_c);

}  // namespace rfmlab::data
