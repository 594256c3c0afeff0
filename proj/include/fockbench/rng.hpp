#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "fockbench/common.hpp"

namespace fockbench {

// Counter-based deterministic generator (reproducible across implementations).
//
// Contract: the r-th raw draw of the stream with key K is
//     out(r) = mix(K + (r+1) * 0x9E3779B97F4A7C15)
// where mix is the SplitMix64 finalizer
//     x ^= x >> 30; x *= 0xBF58476D1CE4E5B9;
//     x ^= x >> 27; x *= 0x94D049BB133111EB;
//     x ^= x >> 31;
// A draw depends only on (key, draw index), never on history, so any draw can
// be recomputed independently and sub-streams never collide with the parent.
// Sub-stream keys are derived by FNV-1a hashing a text label into the key.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : m_key(seed ^ (0x6A09E667F3BCC909ULL * (stream + 1))), m_counter(0) {}

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
  }

  std::uint64_t next_u64() {
    ++m_counter;
    return mix(m_key + m_counter * 0x9E3779B97F4A7C15ULL);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (consumes exactly two draws).
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  // Standard complex normal: E|w|^2 = 1.
  cxd cnormal() {
    return cxd(normal(), normal()) * 0.7071067811865475244;
  }

  // Independent sub-stream identified by a label; deterministic in (key, label).
  CounterRng derive(const std::string& label) const {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a offset basis
    for (unsigned char c : label) {
      h ^= c;
      h *= 0x100000001B3ULL;
    }
    CounterRng child;
    child.m_key = mix(m_key ^ h);
    return child;
  }

  std::uint64_t key() const { return m_key; }

 private:
  CounterRng() : m_key(0), m_counter(0) {}

  std::uint64_t m_key;
  std::uint64_t m_counter;
};

}  // namespace fockbench
