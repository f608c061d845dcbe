// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "vraft/node.hpp"
#include "vraft/scenario.hpp"
#include "vraft/trace.hpp"
#include "vraft/trial_record.hpp"

namespace vraft {

// Aggregation of a connectivity run (effective-cluster sampling).
struct ConnectivityStats {
  int samples = 0;
  int skipped = 0;  // instants with no established leader yet
  double mean_effective = 0;
  int median_effective = 0;
  double stddev_effective = 0;
};

struct RunResult {
  std::vector<TrialRecord> records;
  ConnectivityStats connectivity;
  std::uint64_t trace_hash = 0;
  SimTime end_time_ms = 0;
  std::uint64_t deliveries_attempted = 0;
  std::uint64_t deliveries_dropped = 0;
};

// One deterministic simulation run: a fixed cluster on one logical timeline,
// driven by a time-ordered event queue with insertion-order tie-breaks.
// Everything (trial records, trace hash, outputs) is a pure function of
// (config, seed).
class SimRun {
 public:
  SimRun(ScenarioConfig cfg, std::uint64_t seed);

  // Enables trace event storage (always hashed regardless).
  void capture_trace(bool on) { trace_.set_capture(on); }

  RunResult run();

  const Trace& trace() const { return trace_; }
  const std::vector<NodeState>& nodes() const { return nodes_; }

 private:
  struct Event {
    SimTime t = 0;
    std::uint64_t seq = 0;
    enum class Kind : std::uint8_t {
      wake,            // node timer service
      deliver,         // message arrival
      trial_begin,
      trial_deadline,
      sample,          // connectivity sampling instant
    } kind = Kind::wake;
    NodeId node = kNoNode;
    std::uint64_t trial = 0;
    std::optional<Message> msg;
    MsgMeta meta;
  };
  struct EventOrder {
    bool operator()(const Event& a, const Event& b) const {
      if (a.t != b.t) return a.t > b.t;
      return a.seq > b.seq;
    }
  };

  void schedule(Event ev, SimTime t);
  void schedule_wake(NodeId node, SimTime t);
  void broadcast_outbox(NodeId sender, const std::vector<Message>& msgs, SimTime now);
  void on_sink_event(const TraceEvent& ev);
  void begin_trial(std::uint64_t k, SimTime now);
  void finish_trial(std::uint64_t k, SimTime now, bool granted, TrialOutcome outcome,
                    double latency_ms);
  void sample_effective(SimTime now);
  int live_effective_cluster(SimTime now) const;
  Rng perception_stream(std::uint64_t trial, NodeId node, std::uint64_t purpose) const;

  ScenarioConfig cfg_;
  std::uint64_t seed_ = 0;
  NodeContext ctx_;
  std::vector<NodeState> nodes_;
  std::priority_queue<Event, std::vector<Event>, EventOrder> queue_;
  std::uint64_t seq_ = 0;
  Trace trace_;

  // Transmission batching: all events at one instant are drained before
  // their outgoing messages hit the channel, so simultaneous transmitters
  // see each other as collision load.
  std::vector<std::pair<NodeId, Message>> pending_tx_;

  // Trial bookkeeping.
  std::optional<NodeId> established_leader_;
  std::uint64_t trials_done_ = 0;
  bool trials_started_ = false;
  struct ActiveTrial {
    std::uint64_t id = 0;
    SimTime start_ms = 0;
    SimTime proposal_ms = 0;
    bool proposal_sent = false;
    GroundTruth truth;
    bool decided = false;
    std::optional<std::pair<NodeId, LogIndex>> ballot_key;
    std::uint64_t sent = 0;
    std::uint64_t dropped = 0;
  };
  std::optional<ActiveTrial> active_;
  std::vector<TrialRecord> records_;

  std::vector<int> effective_samples_;
  int samples_skipped_ = 0;
  int samples_taken_ = 0;

  std::uint64_t deliveries_attempted_ = 0;
  std::uint64_t deliveries_dropped_ = 0;
  bool done_ = false;
};

// Single-negotiation convenience wrapper: one trial under (cfg, trial_seed).
TrialRecord run_trial(const ScenarioConfig& cfg, std::uint64_t trial_seed);

}  // namespace vraft
