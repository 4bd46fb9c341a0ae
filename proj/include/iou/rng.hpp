#pragma once

#include <cstdint>
#include <span>

#include "iou/types.hpp"

namespace iou {

// Counter-based keyed random streams.
//
// Every randomness source in the library is addressed by a key
// (master_seed, stream_kind, stream_index); the stream it names is a pure
// function of that key. Parallel evaluation order therefore cannot change
// any result: workers derive the stream for the item they own and never
// share generator state.
//
// Mixing scheme: the key words are absorbed through the SplitMix64
// finalizer (xor-shift-multiply chain), giving a 64-bit stream base; output
// block t is mix64(base + t * golden), i.e. SplitMix64 running from a
// key-derived state. Distinct (kind, index) pairs land in distinct base
// states up to 64-bit collisions.

enum class StreamKind : std::uint64_t {
  design = 1,        // Bernoulli design: N-hat draw + tuple rejection sampling
  kernel_noise = 2,  // per-tuple W streams, index = tuple_hash(iota)
  bootstrap_B = 3,   // xi' multipliers, index = (rep << 64) | position-in-design
  bootstrap_A = 4,   // xi  multipliers, index = (rep << 64) | position-in-S1
  partition = 5,     // hajek_dc: S1 draw / per-i1 permutations / block-eval noise
  simulation = 6,    // synthetic data generation in the diagnostics harness
};

struct u128 {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend bool operator==(const u128&, const u128&) = default;
};

struct RngKey {
  std::uint64_t master_seed = 0;
  StreamKind kind = StreamKind::design;
  u128 index;
};

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(const RngKey& key);

  std::uint64_t next_u64();
  // Uniform on (0,1]; never returns 0 so log() is always safe.
  double next_unit();
  // Standard normal via Box-Muller; consumes two 64-bit blocks.
  double next_normal();
  // Unbiased uniform integer in [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t base_;
  std::uint64_t counter_ = 0;
};

inline RngStream derive_stream(const RngKey& key) { return RngStream(key); }

// 128-bit hash of a canonical tuple; keys the per-tuple W stream so a tuple
// receives the same kernel randomness on every visit. Two independent
// multiply-mix lanes over the index sequence; order of construction of the
// tuple is irrelevant because input is canonical.
u128 tuple_hash(std::span<const std::uint32_t> canonical_indices);

// Key helpers used across modules.
RngKey tuple_noise_key(std::uint64_t master_seed, std::span<const std::uint32_t> tuple);
RngKey multiplier_key(std::uint64_t master_seed, StreamKind kind, std::int64_t rep, std::int64_t position);

// partition-kind index namespaces for hajek_dc (top byte of index.hi):
//   0x01 = S1 subset draw, 0x02 = per-i1 permutation, 0x03 = block-eval noise.
RngKey partition_s1_key(std::uint64_t master_seed);
RngKey partition_perm_key(std::uint64_t master_seed, std::int64_t i1);
RngKey partition_eval_key(std::uint64_t master_seed, std::span<const std::uint32_t> index_set);

}  // namespace iou
