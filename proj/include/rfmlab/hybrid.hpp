#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rfmlab/types.hpp"

namespace rfmlab::hybrid {

// Golub-Kahan bidiagonalization state after k iterations, started from c:
//   Z^T Q_k = P_k B_k^T + gamma_{k+1} p_{k+1} e_{k+1}^T
//   Z  P_k = Q_k B_k
// Q is n x (k+1) and B is (k+1) x k lower bidiagonal while the recurrence is
// running. Once the factorization is exact (k+1 orthonormal vectors no longer
// fit in R^n), B becomes square k x k, Q is n x k and Z P = Q B holds exactly.
struct BidiagState {
  Index k = 0;
  Matrix Q;
  Matrix P;
  Matrix B;
  double beta = 0.0;        // ||c||_2
  double next_gamma = 0.0;  // gamma_{k+1}; 0 once the subspace is closed
  Vector next_p;            // p_{k+1}; empty once the subspace is closed
  bool breakdown = false;   // exact-subspace termination signal

  bool square() const { return B.rows() == B.cols(); }
};

struct AlphaSearch {
  double lo = 1e-12;
  double hi = 0.0;  // 0 = automatic upper bound s_1 / sqrt(n)
  int points = 31;
};

enum class StopReason { budget, gcv_flat, breakdown };

struct TraceRecord {
  Index k = 0;
  double alpha = 0.0;
  double gcv = 0.0;
  double train_loss = 0.0;
  double test_loss = 0.0;  // NaN unless a test-loss probe is installed
};

struct HybridTrace {
  std::vector<TraceRecord> records;
  StopReason stop_reason = StopReason::budget;
  std::string warning;  // nonempty e.g. for a zero right-hand-side column
};

struct HybridOptions {
  Index max_iters = 0;        // 0 = min(n, m, 1024)
  double gcv_stop_tol = 0.0;  // 0 disables the GCV flatness stop
  AlphaSearch alpha_search{};
  bool reorthogonalize = true;
  // Optional probe evaluated on the materialized iterate w_k each iteration;
  // its value lands in TraceRecord::test_loss.
  std::function<double(const Vector&)> test_loss;
};

struct HybridResult {
  Vector w;
  HybridTrace trace;
};

struct MultiResult {
  Matrix W;
  std::vector<HybridTrace> traces;
};

struct AlphaChoice {
  double alpha = 0.0;
  double gcv = 0.0;
};

BidiagState bidiag_init(const Matrix& Z, const Vector& c, bool reorthogonalize = true);

// One Golub-Kahan step. Requires k < min(n, m) and no prior breakdown.
BidiagState bidiag_step(const Matrix& Z, const BidiagState& state,
                        bool reorthogonalize = true);

// Solution of the projected problem
//   min_f 1/(2n) ||B f - beta e_1||^2 + alpha^2/2 ||f||^2
// via f = beta * B_dagger e_1 with
//   B_dagger = (1/n) (B^T B / n + alpha^2 I)^{-1} B^T,
// evaluated through the SVD of B. alpha = 0 gives the minimum-norm solution.
Vector projected_tikhonov(const Matrix& B, double beta, double alpha, Index n);

// GCV function of the projected problem,
//   G(alpha) = k ||(I - B B_dagger) beta e_1||^2 / trace(I - B B_dagger)^2,
// evaluated through the SVD of B.
double gcv_value(const Matrix& B, double beta, double alpha, Index n);

// Log-spaced grid scan over [lo, hi] followed by golden-section refinement
// in the bracketing interval; returns the GCV minimizer. lo == hi pins alpha.
AlphaChoice select_alpha(const Matrix& B, double beta, Index n,
                         const AlphaSearch& search = {});

// LSQR-style hybrid solver: per iteration, extend the bidiagonalization,
// pick alpha_k by GCV on the projected problem, and keep the regularized
// projected solution. Stops on budget, subspace breakdown, or GCV flatness.
HybridResult hybrid_solve(const Matrix& Z, const Vector& c,
                          const HybridOptions& opts = {});

// Independent per-column solves; columns may run concurrently (jobs > 1).
// A zero column of C yields a zero column of W and a warning in its trace.
MultiResult hybrid_solve_multi(const Matrix& Z, const Matrix& C,
                               const HybridOptions& opts = {}, int jobs = 1);

// CSV with header "k,alpha,gcv,train_loss,test_loss"; JSON mirrors it.
std::string trace_to_csv(const HybridTrace& trace);
std::string trace_to_json(const HybridTrace& trace);

}  // namespace rfmlab::hybrid
