// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "vraft/channel.hpp"
#include "vraft/node.hpp"
#include "vraft/perception.hpp"

namespace vraft {

// Invalid configuration input (bad file, unknown key, violated invariant).
// Mapped to exit code 2 by the CLI.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GroundTruthMode : std::uint8_t { fixed_safe, fixed_unsafe, randomized };

enum class RunMode : std::uint8_t {
  negotiation,   // lane-change trials
  connectivity,  // steady-state effective-cluster sampling
};

struct RequestTemplate {
  double delta_v_mps = 5.0;
  double distance_m = 20.0;
};

struct ConnectivityConfig {
  double settle_ms = 4000.0;       // warm-up before the first sample
  double sample_period_ms = 100.0;
  int samples = 1000;
};

struct ScenarioConfig {
  int n_nodes = 0;
  NodeId sv_id = kNoNode;  // defaults to n_nodes - 1
  bool sv_votes = false;
  GroundTruthMode ground_truth = GroundTruthMode::randomized;
  PerceptionConfig perception;
  ChannelConfig channel;
  ElectionParams election;
  VotingParams voting;
  PriorityParams priority;
  double heartbeat_interval_ms = 20.0;
  double vote_timeout_ms = 40.0;
  double announce_timeout_ms = 40.0;
  int staleness_limit = 3;
  int rssi_window = 10;
  std::uint64_t trials = 1;
  std::uint64_t seed = 1;
  double duration_limit_ms = 200.0;
  RequestTemplate request;
  RunMode mode = RunMode::negotiation;
  ConnectivityConfig connectivity;
  std::vector<double> positions_m;    // defaults to id * 10
  std::vector<double> velocities_mps; // defaults to 0

  void validate() const;  // throws ConfigError
};

// Strict JSON loading: unknown keys are rejected so sweep-spec typos fail
// loudly. See README for the schema.
ScenarioConfig load_scenario_file(const std::string& path);
ScenarioConfig scenario_from_json_text(const std::string& text);

}  // namespace vraft
