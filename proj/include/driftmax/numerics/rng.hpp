#pragma once

#include <array>
#include <cstdint>

namespace driftmax::numerics {

__extension__ typedef unsigned __int128 uint128;

using PhiloxCounter = std::array<std::uint64_t, 4>;
using PhiloxKey = std::array<std::uint64_t, 2>;

/// Philox4x64 with 10 rounds (Salmon, Moraes, Dror, Shaw 2011). Bit-compatible
/// with Random123 and numpy.random.Philox.
constexpr PhiloxCounter philox4x64_10(PhiloxCounter ctr, PhiloxKey key) noexcept {
  constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
  constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
  constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
  constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const uint128 p0 = static_cast<uint128>(kM0) * ctr[0];
    const uint128 p1 = static_cast<uint128>(kM1) * ctr[2];
    const auto hi0 = static_cast<std::uint64_t>(p0 >> 64);
    const auto lo0 = static_cast<std::uint64_t>(p0);
    const auto hi1 = static_cast<std::uint64_t>(p1 >> 64);
    const auto lo1 = static_cast<std::uint64_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

/// Counter-based random stream. Word number `c` of the stream keyed by
/// (seed, stream_index) is lane c mod 4 of Philox4x64-10 applied to block
/// counter c / 4, so every output is a pure function of (seed, stream_index,
/// counter). The object only caches the most recent block.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index, uint128 counter = 0) noexcept
      : seed_(seed), stream_index_(stream_index), counter_(counter) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }
  uint128 counter() const noexcept { return counter_; }

  void seek(uint128 counter) noexcept { counter_ = counter; }

  std::uint64_t next_u64() noexcept {
    const uint128 block = counter_ >> 2;
    if (!cache_valid_ || block != cached_block_) refill(block);
    return cache_[static_cast<unsigned>(counter_++ & 3U)];
  }

  /// Uniform on the open interval (0, 1) with 53 random bits.
  double next_uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  void refill(uint128 block) noexcept {
    cache_ = philox4x64_10({static_cast<std::uint64_t>(block), static_cast<std::uint64_t>(block >> 64), 0, 0},
                           {seed_, stream_index_});
    cached_block_ = block;
    cache_valid_ = true;
  }

  std::uint64_t seed_;
  std::uint64_t stream_index_;
  uint128 counter_;
  uint128 cached_block_ = 0;
  PhiloxCounter cache_{};
  bool cache_valid_ = false;
};

}  // namespace driftmax::numerics
