// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vraft/types.hpp"

namespace vraft {

// SNR -> packet error rate. Logistic by default; a table of (snr, per)
// anchors with linear interpolation otherwise. Monotone non-increasing.
struct PerCurve {
  enum class Model : std::uint8_t { logistic, table };
  Model model = Model::logistic;
  double midpoint_db = 9.0;
  double steepness = 0.0;  // default set by default_per_curve()
  std::vector<std::pair<double, double>> points;  // sorted by snr

  double operator()(double snr_db) const;
};

// Default curve fitted through the two calibration anchors:
// per(4 dB) = 0.70 and per(14 dB) = 0.30.
PerCurve default_per_curve();

double per_from_snr(const PerCurve& curve, double snr_db);

enum class DropCause : std::uint8_t { none, channel, collision };

struct Delivery {
  NodeId receiver = kNoNode;
  SimTime arrival_ms = 0;
  bool dropped = false;
  DropCause cause = DropCause::none;
  bool token_corrupted = false;
};

struct SnrScheduleEntry {
  SimTime t_ms = 0;
  // nullopt applies to every link.
  std::optional<std::pair<NodeId, NodeId>> link;
  double snr_db = 0;
};

struct ChannelConfig {
  int n_nodes = 0;
  double default_snr_db = 14.0;
  // Directional overrides; scenario loading fills both directions unless a
  // link is declared one-way.
  std::map<std::pair<NodeId, NodeId>, double> link_snr;
  PerCurve per_curve;
  double latency_base_ms = 2.0;
  double latency_jitter_ms = 3.0;   // uniform [0, jitter)
  double collision_factor = 0.05;   // extra loss per simultaneous extra transmitter
  double token_corruption_prob = 0.0;
  double rssi_offset_dbm = -95.0;   // logged RSSI = snr + offset
  std::vector<SnrScheduleEntry> schedule;  // sorted by t, piecewise constant
  std::uint64_t seed = 0;

  double snr_at(NodeId from, NodeId to, SimTime t) const;
};

// Applies a piecewise-constant SNR schedule. Entries must be sorted by time;
// two entries for the same (time, link) with different values are rejected.
// Throws ConfigError (see scenario.hpp) on conflicts.
void set_link_snr(ChannelConfig& cfg, std::vector<SnrScheduleEntry> schedule);

// Broadcast transmission: one Delivery per other node, receivers in
// ascending id. Drop probability is min(1, per + collision_factor *
// (concurrent_tx - 1)). All randomness is keyed on (seed, sender, t, salt,
// receiver, draw#), so a transmission's fate is independent of unrelated
// traffic; the per-receiver draw order is drop, jitter, corruption.
std::vector<Delivery> transmit(const ChannelConfig& cfg, NodeId sender, SimTime t,
                               int concurrent_tx, std::uint64_t salt = 0);

}  // namespace vraft
