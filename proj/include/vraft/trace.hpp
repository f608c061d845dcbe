// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vraft/rng.hpp"
#include "vraft/types.hpp"

namespace vraft {

enum class TraceKind : std::uint8_t {
  msg_sent,
  msg_delivered,
  msg_dropped,
  term_changed,
  role_changed,
  leader_established,
  leader_reverted,
  ballot_opened,
  vote_recorded,
  commit_finalized,
  neighbor_evicted,
  trial_started,
  trial_finished,
  effective_sampled,
};

const char* trace_kind_name(TraceKind k);

// One flat event record. Field meaning depends on kind:
//   msg_*             a=sender, b=receiver (kNoNode for broadcast send), x=msg type, y=drop cause
//   term_changed      a=node, x=new term
//   role_changed      a=node, x=new role
//   leader_established a=leader, x=term
//   ballot_opened     a=leader, x=entry index, v=request timestamp
//   vote_recorded     a=leader, b=voter, x=entry index, y=approve
//   commit_finalized  a=node, x=entry index, y=decision (1 grant)
//   neighbor_evicted  a=owner, b=evicted peer
//   trial_*           x=trial id, y=code (start: truth; finish: outcome)
//   effective_sampled a=leader, x=effective size
struct TraceEvent {
  SimTime t = 0;
  TraceKind kind{};
  NodeId a = kNoNode;
  NodeId b = kNoNode;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  double v = 0;
};

std::string format_trace_event(const TraceEvent& ev);

// Rolling hash plus optional storage. The hash is updated for every event
// whether or not events are being kept, so replay fingerprints are cheap.
class Trace {
 public:
  void set_capture(bool on) { capture_ = on; }
  bool capturing() const { return capture_; }

  void record(const TraceEvent& ev) {
    hasher_.add_double(ev.t);
    hasher_.add_u64(static_cast<std::uint64_t>(ev.kind));
    hasher_.add_u64(ev.a);
    hasher_.add_u64(ev.b);
    hasher_.add_u64(ev.x);
    hasher_.add_u64(ev.y);
    hasher_.add_double(ev.v);
    if (capture_) events_.push_back(ev);
  }

  std::uint64_t hash() const { return hasher_.value(); }
  const std::vector<TraceEvent>& events() const { return events_; }

  // Metadata needed to interpret staleness from raw heartbeat receptions.
  double heartbeat_interval_ms = 20.0;
  double staleness_window_ms = 60.0;
  int n_nodes = 0;

 private:
  bool capture_ = false;
  Fnv1a64 hasher_;
  std::vector<TraceEvent> events_;
};

}  // namespace vraft
