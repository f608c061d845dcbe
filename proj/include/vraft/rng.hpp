// Copyright 2026 The vraft Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace vraft {

// splitmix64 step (Steele, Lea, Flood). Used both as the sequential
// generator and, through mix64 below, as the sub-seed derivation function.
inline constexpr std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Stateless 64-bit mixing of (a, b). Sub-seeds for sweep points, trials and
// per-node streams are all derived by chaining this function, so every
// random stream in a run is a pure function of the master seed.
inline constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
  s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
  s = (s ^ (s >> 27)) * 0x94d049bb133111ebull;
  return s ^ (s >> 31);
}

inline constexpr double u64_to_unit_double(std::uint64_t x) noexcept {
  // 53 high bits -> [0, 1). Portable: no std::uniform_real_distribution.
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Small deterministic generator with explicit sequential state.
class Rng {
 public:
  Rng() = default;
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64_next(state_); }
  double next_unit() { return u64_to_unit_double(next_u64()); }
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }
  // Uniform integer in [0, n). Modulo bias is < 2^-32 for the n used here.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_ = 0x853c49e6748fea9bull;
};

// Keyed uniform draw: a pure function of the key words. Used by the channel
// so that the random fate of a transmission depends only on (seed, sender,
// send time, receiver, salt), never on how many draws happened before it.
inline double keyed_unit(std::uint64_t seed, std::uint64_t k1, std::uint64_t k2,
                         std::uint64_t k3, std::uint64_t k4) noexcept {
  std::uint64_t h = mix64(seed, k1);
  h = mix64(h, k2);
  h = mix64(h, k3);
  h = mix64(h, k4);
  return u64_to_unit_double(h);
}

inline std::uint64_t time_bits(double t) noexcept {
  return std::bit_cast<std::uint64_t>(t);
}

// FNV-1a, used for trace hashing and output fingerprints.
class Fnv1a64 {
 public:
  void add_byte(unsigned char b) {
    hash_ ^= b;
    hash_ *= 0x00000100000001b3ull;
  }
  void add_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) add_byte(static_cast<unsigned char>(v >> (8 * i)));
  }
  void add_double(double v) { add_u64(std::bit_cast<std::uint64_t>(v)); }
  void add_bytes(std::string_view s) {
    for (unsigned char c : s) add_byte(c);
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

}  // namespace vraft
