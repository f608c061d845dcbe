// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "vraft/types.hpp"

namespace vraft {

enum class TrialOutcome : std::uint8_t {
  committed,          // leader tallied a ballot for this trial
  local_check_failed, // requester denied itself, no proposal sent
  timeout,            // duration limit hit with no decision: fail-safe denial
  no_leader,          // no leader ever established: fail-safe denial
};

// One row per negotiation. Field set matches the emitted CSV columns plus
// the internal outcome flag.
struct TrialRecord {
  std::uint64_t trial_id = 0;
  int n_nodes = 0;
  double snr_db = 0;   // scenario label
  double p_node = 0;   // scenario label
  bool granted = false;
  bool ground_truth_safe = false;
  bool correct = false;
  double decision_latency_ms = 0;
  NodeId leader_id = kNoNode;
  std::uint64_t final_term = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t messages_dropped = 0;
  int effective_cluster = 0;
  bool local_check_failed = false;
  TrialOutcome outcome = TrialOutcome::committed;
};

}  // namespace vraft
