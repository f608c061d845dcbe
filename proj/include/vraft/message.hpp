// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <variant>

#include "vraft/signal_metrics.hpp"
#include "vraft/types.hpp"

namespace vraft {

// Models the digital signature on a leader request. A token corrupted in
// transit verifies as invalid; the flag keeps the corruption source visible
// for NACK bookkeeping.
struct IntegrityToken {
  bool valid = true;
  bool corrupted_in_transit = false;
};

struct Heartbeat {
  NodeId sender = kNoNode;
  double position_m = 0.0;
  double velocity_mps = 0.0;
  double avg_rssi_dbm = 0.0;  // sender's mean received RSSI over its windows
  double snr_db = 0.0;        // sender's mean received SNR (its quality report)
  SimTime timestamp_ms = 0.0;
};

struct LeaderRequest {
  NodeId sender = kNoNode;
  Term term = 0;
  LogIndex last_log_index = 0;
  IntegrityToken token;
};

struct LeaderAck {
  NodeId sender = kNoNode;
  Term term = 0;
};

enum class NackReason : std::uint8_t {
  integrity_failure,
  stale_term,
  stale_log,
  already_voted,
};

const char* nack_reason_name(NackReason r);

struct LeaderNack {
  NodeId sender = kNoNode;
  Term term = 0;
  NackReason reason = NackReason::integrity_failure;
};

struct LeaderConfirm {
  NodeId sender = kNoNode;
  Term term = 0;
};

struct Proposal {
  NodeId sv_id = kNoNode;
  LaneChangeRequest request;
};

enum class EntryStatus : std::uint8_t { proposed, committed, rejected };

struct LogEntry {
  Term term = 0;
  LogIndex index = 0;
  LaneChangeRequest payload;
  EntryStatus status = EntryStatus::proposed;
};

struct AppendEntries {
  NodeId leader = kNoNode;
  Term term = 0;
  LogEntry entry;
};

struct VoteResponse {
  NodeId voter = kNoNode;
  LogIndex entry_index = 0;
  bool approve = false;
  double snr_db = 0.0;
};

struct CommitNotify {
  NodeId sender = kNoNode;
  LogIndex entry_index = 0;
  bool decision = false;
};

struct ClientResponse {
  NodeId sv_id = kNoNode;
  bool granted = false;
};

using Message = std::variant<Heartbeat, LeaderRequest, LeaderAck, LeaderNack,
                             LeaderConfirm, Proposal, AppendEntries, VoteResponse,
                             CommitNotify, ClientResponse>;

NodeId message_sender(const Message& msg);
const char* message_type_name(const Message& msg);
std::uint64_t message_type_id(const Message& msg);

}  // namespace vraft
