#pragma once

// Seeded, platform-independent randomness for the probe suites.
//
// The engine is std::mt19937_64 (its output sequence is fixed by the
// standard). Bounded draws use our own rejection sampling, since the standard
// distributions are implementation-defined. Substreams are seeded with
// splitmix64 over (seed, FNV-1a(tag), index), so each trial's draws depend
// only on those three values.

#include <cstdint>
#include <random>
#include <string_view>

#include "braidlab/braid_word.hpp"
#include "braidlab/free_group.hpp"

namespace braidlab {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a(std::string_view text);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::string_view tag, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long long uniform(long long lo, long long hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform length in [0, max_length], uniform letters σ_i^{±1}, then freely
/// reduced (so the result may be shorter).
BraidWord random_braid(Rng& rng, std::size_t max_length, int strands = 3);

/// Like random_braid, with equally many positive and negative letters before
/// reduction, so the total exponent sum is 0.
BraidWord random_zero_sum_braid(Rng& rng, std::size_t max_length);

FreeWord random_free_word(Rng& rng, std::size_t max_length, int rank = 2);

}  // namespace braidlab
