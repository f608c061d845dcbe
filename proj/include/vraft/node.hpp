// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "vraft/message.hpp"
#include "vraft/signal_metrics.hpp"
#include "vraft/trace.hpp"
#include "vraft/types.hpp"

namespace vraft {

enum class Role : std::uint8_t { follower, candidate, leader };

const char* role_name(Role r);

// Everything the state machine needs from the enclosing run. The perception
// callback returns a node's local judgment for the current ballot, or
// nullopt when the node has no sample and must abstain.
struct NodeContext {
  int n_nodes = 0;
  ElectionParams election;
  VotingParams voting;
  PriorityParams priority;
  double heartbeat_interval_ms = 20.0;
  double vote_timeout_ms = 40.0;
  double announce_timeout_ms = 40.0;
  int staleness_limit = 3;
  int rssi_window = 10;
  bool sv_votes = false;  // whether the requester votes on its own proposal
  std::vector<double> positions_m;
  std::vector<double> velocities_mps;
  std::function<std::optional<bool>(NodeId voter)> perceive;
  std::function<void(const TraceEvent&)> sink;  // optional observer
};

// One open ballot at the leader. expected_votes counts every eligible voter
// including the leader itself when it votes.
struct Ballot {
  LogIndex entry_index = 0;
  SimTime deadline_ms = 0;
  int expected_votes = 0;
  std::map<NodeId, VoteResponse> votes;
};

struct NodeDiagnostics {
  std::uint64_t unknown_sender_dropped = 0;
  std::uint64_t misrouted = 0;
  std::uint64_t nacks_received = 0;
};

struct NodeState {
  NodeId id = kNoNode;
  Role role = Role::candidate;
  Term current_term = 0;
  std::vector<LogEntry> log;
  NeighborTable neighbors;
  SimTime election_deadline_ms = 0;
  std::optional<NodeId> voted_in_term;
  std::optional<NodeId> known_leader;

  // Announcement state while contending for leadership.
  std::optional<SimTime> announce_deadline_ms;
  std::set<NodeId> acks;

  // Leader-side request queue and open ballot.
  std::vector<LaneChangeRequest> pending_requests;
  std::optional<Ballot> ballot;

  SimTime next_heartbeat_ms = 0;
  std::uint64_t heard_this_interval = 0;  // receptions feeding the CBR estimate
  double cbr = 0.0;
  NodeDiagnostics diag;

  LogIndex last_log_index() const { return log.empty() ? 0 : log.back().index; }
  const LogEntry* find_entry(LogIndex index) const;
  LogEntry* find_entry(LogIndex index);
};

// Receiver-side measurements attached to a delivered message.
struct MsgMeta {
  SimTime now_ms = 0;
  double observed_snr_db = 0.0;
  double observed_rssi_dbm = 0.0;
};

struct VerifyResult {
  bool ack = false;
  NackReason reason = NackReason::integrity_failure;
};

enum class EstablishOutcome : std::uint8_t { confirmed, reverted };

struct TallyDecision {
  bool granted = false;
  double weighted_yes = 0.0;
  double weighted_no = 0.0;
  bool abstain = false;  // empty batch: fail-safe denial, reason "no_quorum"
};

NodeState make_node(NodeId id, const NodeContext& ctx, SimTime now);

// Timer path: heartbeat emission, neighbor maintenance, election deadline,
// announcement timeout and ballot timeout. Deterministic in (state, now).
std::vector<Message> node_tick(NodeState& state, SimTime now, const NodeContext& ctx);

// Message path. Returns outbound broadcasts. A message whose term exceeds
// current_term forces term adoption and reversion to follower first.
std::vector<Message> handle_message(NodeState& state, const Message& msg,
                                    const MsgMeta& meta, const NodeContext& ctx);

// Earliest instant at which node_tick could need to act.
SimTime next_wake(const NodeState& state);

// Verification phase for a received leader request.
VerifyResult verify_leader_request(const NodeState& state, const LeaderRequest& req);

// Establishment phase: strict self-inclusive majority of cluster_size.
bool establishment_quorum(std::size_t ack_count, int cluster_size);

// Weighted tally over one batch of votes. Integer majorities always win;
// the SNR weights only break exact ties.
TallyDecision tally_votes(const std::vector<VoteResponse>& votes,
                          const VotingParams& params);

// Orders pending requests by descending priority, ties to the lower sv id.
std::vector<LaneChangeRequest> schedule_proposals(std::vector<LaneChangeRequest> pending,
                                                  const PriorityParams& params);

// Client-side helper: the requester's proposal message.
Message make_proposal(NodeId sv, const LaneChangeRequest& request);

}  // namespace vraft
