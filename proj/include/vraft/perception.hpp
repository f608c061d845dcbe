// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>

#include "vraft/rng.hpp"
#include "vraft/types.hpp"

namespace vraft {

// Whether the lane change is objectively collision-free for one trial.
// Fixed for the duration of a negotiation epoch.
struct GroundTruth {
  bool safe = false;
};

struct PerceptionConfig {
  double p_default = 0.8;
  std::map<NodeId, double> overrides;

  double p_for(NodeId id) const {
    auto it = overrides.find(id);
    return it == overrides.end() ? p_default : it->second;
  }
};

// Bernoulli observation of the ground truth: returns truth.safe with
// probability p, the negation otherwise. Consumes exactly one draw.
bool observe(GroundTruth truth, double p, Rng& rng);

// The requester's pre-flight check; only a pass leads to a proposal.
bool local_safety_check(NodeId sv, GroundTruth truth, const PerceptionConfig& cfg,
                        Rng& rng);

}  // namespace vraft
