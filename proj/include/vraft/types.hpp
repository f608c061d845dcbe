// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace vraft {

// Node identifiers are small dense integers, unique within one scenario.
// The total order on the integer is used for deterministic tie-breaks.
using NodeId = std::uint32_t;

using Term = std::uint64_t;
using LogIndex = std::uint64_t;

// Simulation time in milliseconds.
using SimTime = double;

inline constexpr NodeId kNoNode = 0xffffffffu;

}  // namespace vraft
