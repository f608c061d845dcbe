// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "vraft/types.hpp"

namespace vraft {

struct Heartbeat;  // message.hpp

// Link-quality bookkeeping for one neighbor, fed by received heartbeats.
struct LinkMetrics {
  NodeId peer = kNoNode;
  std::deque<double> rssi_window;  // last K received RSSI samples, dBm
  double snr_db = 0.0;             // latest observed SNR of the link
  double cbr = 0.0;                // locally sensed channel busy ratio
  SimTime last_heard_ms = 0.0;

  double mean_rssi() const;
};

// Dynamic neighbor set of one node. No self-entry, eviction after
// staleness_limit consecutive heartbeat intervals with nothing heard.
struct NeighborTable {
  NodeId owner = kNoNode;
  std::map<NodeId, LinkMetrics> entries;
  int rssi_window_len = 10;  // K
  int staleness_limit = 3;

  double sum_snr() const;
  double mean_snr() const;  // 0 when empty
  bool fresh(const LinkMetrics& m, SimTime now, double heartbeat_interval_ms) const {
    return now - m.last_heard_ms <= staleness_limit * heartbeat_interval_ms;
  }
  int fresh_count(SimTime now, double heartbeat_interval_ms) const;
};

struct ElectionParams {
  double t_base_ms = 100.0;
  double alpha = 1.0;  // sensitivity to channel-quality variation
  double t_max_ms = 1000.0;
};

struct VotingParams {
  double epsilon = 1e-3;  // tie-break bias; must stay <= 1e-3 for batches <= 1000
};

struct PriorityParams {
  double lambda = 1.0;  // weight of the link-quality term
  double d_min_m = 1.0; // distance clamp
};

struct LaneChangeRequest {
  NodeId sv_id = kNoNode;
  double delta_v_mps = 0.0;  // |relative speed|
  double distance_m = 0.0;   // gap distance
  double snr_db = 0.0;       // requester link quality, must be > 0
  SimTime timestamp_ms = 0.0;
};

// Upsert of a neighbor entry from a received heartbeat. observed_* are the
// receiver-side measurements of this link; cbr is the receiver's current
// locally sensed busy ratio.
void update_neighbor(NeighborTable& table, const Heartbeat& hb,
                     double observed_rssi_dbm, double observed_snr_db,
                     double cbr, SimTime now);

// Removes entries not heard for staleness_limit heartbeat intervals.
// Returns the evicted ids (ascending).
std::vector<NodeId> evict_stale_neighbors(NeighborTable& table, SimTime now,
                                          double heartbeat_interval_ms);

// Adaptive election timeout: (1 + alpha / sum_snr) * t_base, clamped to
// [t_base, t_max]. Empty table or non-positive SNR sum degenerates to t_max.
double election_timeout(const ElectionParams& params, const NeighborTable& table);

struct CandidateInfo {
  NodeId id = kNoNode;
  double reported_snr_db = 0.0;  // candidate's own link-quality report
};

// Ranks candidates by link quality as seen from this table: the locally
// observed link SNR when we have one, the candidate's reported value
// otherwise (the owner scoring itself). Ties break on lower id.
std::vector<CandidateInfo> candidate_score(const NeighborTable& table,
                                           std::vector<CandidateInfo> candidates);

// Safety-critical request score: |dv| / max(d, d_min) + lambda / snr.
// Throws std::invalid_argument for non-positive SNR.
double request_priority(const LaneChangeRequest& req, const PriorityParams& params);

// Per-voter weights 1 + eps * (snr - min) / range over one voting batch.
// Degenerate range (all equal) yields all-ones.
std::vector<double> vote_weights(const std::vector<double>& batch_snrs_db,
                                 const VotingParams& params);

}  // namespace vraft
