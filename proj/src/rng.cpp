#include "iou/rng.hpp"

#include <algorithm>
#include <cmath>

namespace iou {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

RngStream::RngStream(const RngKey& key) {
  std::uint64_t s = mix64(key.master_seed ^ kGolden);
  s = mix64(s ^ static_cast<std::uint64_t>(key.kind));
  s = mix64(s ^ key.index.hi);
  s = mix64(s ^ key.index.lo);
  base_ = s;
}

std::uint64_t RngStream::next_u64() { return mix64(base_ + (++counter_) * kGolden); }

double RngStream::next_unit() {
  // 53 random bits, shifted into (0,1]: ((x >> 11) + 1) * 2^-53.
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double RngStream::next_normal() {
  const double u1 = next_unit();
  const double u2 = next_unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  // Lemire's multiply-shift rejection; exactly uniform on [0, bound).
  const std::uint64_t threshold = (0ULL - bound) % bound;
  for (;;) {
    const unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    if (static_cast<std::uint64_t>(m) >= threshold)
      return static_cast<std::uint64_t>(m >> 64);
  }
}

u128 tuple_hash(std::span<const std::uint32_t> canonical_indices) {
  std::uint64_t a = 0x8E2F0D4C1A6B3957ULL;
  std::uint64_t b = 0x243F6A8885A308D3ULL;
  for (std::uint32_t v : canonical_indices) {
    a = mix64(a ^ (v + kGolden));
    b = mix64(b + (static_cast<std::uint64_t>(v) << 1 | 1));
  }
  a = mix64(a ^ (static_cast<std::uint64_t>(canonical_indices.size()) << 32));
  b = mix64(b ^ canonical_indices.size());
  return {a, b};
}

RngKey tuple_noise_key(std::uint64_t master_seed, std::span<const std::uint32_t> tuple) {
  return {master_seed, StreamKind::kernel_noise, tuple_hash(tuple)};
}

RngKey multiplier_key(std::uint64_t master_seed, StreamKind kind, std::int64_t rep,
                      std::int64_t position) {
  return {master_seed, kind,
          {static_cast<std::uint64_t>(rep), static_cast<std::uint64_t>(position)}};
}

namespace {
constexpr std::uint64_t kCtxMask = 0x00FFFFFFFFFFFFFFULL;
constexpr std::uint64_t ctx_tag(std::uint64_t ctx) { return ctx << 56; }
}  // namespace

RngKey partition_s1_key(std::uint64_t master_seed) {
  return {master_seed, StreamKind::partition, {ctx_tag(0x01), 0}};
}

RngKey partition_perm_key(std::uint64_t master_seed, std::int64_t i1) {
  return {master_seed, StreamKind::partition, {ctx_tag(0x02), static_cast<std::uint64_t>(i1)}};
}

RngKey partition_eval_key(std::uint64_t master_seed, std::span<const std::uint32_t> index_set) {
  u128 h = tuple_hash(index_set);
  return {master_seed, StreamKind::partition, {ctx_tag(0x03) | (h.hi & kCtxMask), h.lo}};
}

void canonicalize_indices(std::span<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 1; i < v.size(); ++i)
    require(v[i] != v[i - 1], errc::input, "tuple index: duplicate entries");
}

TupleIndex TupleIndex::canonical(std::vector<std::uint32_t> v) {
  require(!v.empty(), errc::input, "tuple index: empty");
  canonicalize_indices(v);
  return TupleIndex{std::move(v)};
}

}  // namespace iou
