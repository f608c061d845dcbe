// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "vraft/trace.hpp"
#include "vraft/trial_record.hpp"
#include "vraft/types.hpp"

namespace vraft {

struct ReliabilityResult {
  int n = 0;
  double p_node = 0;
  double p_sys = 0;
};

struct RobustnessParams {
  double kappa = 1.0;  // interference sensitivity, > 0
};

struct EmpiricalEstimate {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double estimate = 0;
  double ci_halfwidth = 0;  // 3-sigma binomial normal approximation
};

// Majority-voting system reliability:
//   sum_{k=floor(n/2)+1}^{n} C(n,k) p^k (1-p)^{n-k}
//   + 1/2 [n even] C(n, n/2) p^{n/2} (1-p)^{n/2}.
// Exact binomial coefficients, extended-precision accumulation; absolute
// error <= 1e-12 for n <= 64. Throws std::invalid_argument for n < 1.
double system_reliability(int n, double p);

// Independent verification path: exhaustive enumeration of all 2^n vote
// patterns, half credit for exact even splits. n <= 20.
double system_reliability_oracle(int n, double p);

// exp(-kappa * (1 - p_current / p_baseline)). Faithful to the definition:
// exceeds 1 when current outperforms baseline, no clamping. Throws for a
// zero baseline.
double robustness(double p_current, double p_baseline, const RobustnessParams& params);

// Share of completed-consensus trials whose decision matched ground truth.
// Local-check denials never reached consensus and are skipped; throws if
// nothing remains.
EmpiricalEstimate empirical_reliability(const std::vector<TrialRecord>& records);

// Leader's view of the cluster at time `at`, reconstructed from the raw
// event trace: 1 + heartbeat-fresh neighbors of the most recently
// established leader. Throws if no leader was established by `at`.
int effective_cluster_size(const Trace& trace, SimTime at);

}  // namespace vraft
