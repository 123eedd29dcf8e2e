#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rfmlab/data.hpp"
#include "rfmlab/hybrid.hpp"
#include "rfmlab/rfm.hpp"
#include "rfmlab/spectral.hpp"
#include "rfmlab/types.hpp"

namespace rfmlab::experiments {

struct Metrics {
  double train_loss = 0.0;          // ||Z W - C||_F^2 / (2n)
  double test_loss = 0.0;           // ||Z_test W - C_test||_F^2 / (2 n_test)
  double generalization_gap = 0.0;  // test_loss - train_loss
  double train_accuracy = 0.0;
  double test_accuracy = 0.0;
  double solution_norm = 0.0;       // ||W||_F
};

Metrics evaluate(const rfm::RFMParams& params, const Matrix& W,
                 const data::Dataset& train, const data::Dataset& test);

// Metrics from prebuilt feature matrices (shared by the sweep drivers).
Metrics metrics_from_features(const Matrix& Z_train, const Matrix& Z_test,
                              const Matrix& W, const data::Dataset& train,
                              const data::Dataset& test);

enum class Regularizer { none, tsvd, gradient_flow, weight_decay, hybrid };

std::string regularizer_name(Regularizer reg);

struct SweepConfig {
  std::vector<Index> m_list;
  int trials = 5;
  Regularizer regularizer = Regularizer::none;
  double hyperparameter = 0.0;  // tau / t / alpha for the spectral kinds
  std::uint64_t seed = 0;
  hybrid::HybridOptions hybrid_opts{};
  bool record_hybrid_test_loss = false;  // per-iteration test-loss probes
  int jobs = 1;
  std::string dataset_name;  // provenance only
};

struct TrialRecord {
  Index m = 0;
  int trial = 0;
  Metrics metrics;
};

struct Aggregate {
  Index m = 0;
  Metrics mean;
  Metrics stddev;
};

struct SweepResult {
  std::vector<TrialRecord> records;  // ordered by (m, trial)
  std::vector<Aggregate> aggregates;
  std::vector<hybrid::HybridTrace> hybrid_traces;  // filled for Regularizer::hybrid
  std::string config_summary;  // canonical flat key=value text
  std::uint64_t config_hash = 0;
};

// Train/evaluate across m_list x trials with a fresh seed-derived feature
// map per (m, trial). Deterministic given the config, independent of jobs.
SweepResult double_descent_sweep(const data::Dataset& train,
                                 const data::Dataset& test,
                                 const SweepConfig& cfg);

struct PicardConfig {
  std::vector<Index> m_list;
  int trials = 5;
  std::uint64_t seed = 0;
  int class_index = 0;  // column of C used as the right-hand side
  std::string dataset_name;
};

struct PicardRun {
  Index m = 0;
  int trial = 0;  // -1 for the averaged-over-trials rows
  spectral::PicardData data;
};

// Picard diagnostics per (m, trial) plus a per-m average; writes one CSV per
// run into out_dir when it is nonempty and returns everything.
std::vector<PicardRun> picard_run(const data::Dataset& train,
                                  const PicardConfig& cfg,
                                  const std::string& out_dir = "");

struct CompareConfig {
  std::vector<Index> m_list;
  int trials = 5;
  std::uint64_t seed = 0;
  hybrid::HybridOptions hybrid_opts{};
  int jobs = 1;
  std::string dataset_name;
};

struct CompareResult {
  SweepResult gradient_flow;  // oracle-tuned t per (m, trial)
  SweepResult weight_decay;   // oracle-tuned alpha per (m, trial)
  SweepResult hybrid;
  std::vector<double> tuned_t;      // per record of gradient_flow
  std::vector<double> tuned_alpha;  // per record of weight_decay
  std::string config_summary;
  std::uint64_t config_hash = 0;
};

// Baseline comparison: per (m, trial), oracle-tune t and alpha against
// eval_loss (the test loss) on a shared SVD, and run the hybrid solver with
// budget min(m, n, 1024). Tuning against test data is an oracle protocol;
// callers must opt in explicitly.
CompareResult compare_regularizers(const data::Dataset& train,
                                   const data::Dataset& test,
                                   const CompareConfig& cfg);

std::string sweep_to_csv(const SweepResult& result);
std::string sweep_summary_json(const SweepResult& result, bool oracle = false);

}  // namespace rfmlab::experiments
