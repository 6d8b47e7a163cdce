#pragma once

#include <array>
#include <cstdint>

namespace oddsratio {

/// Counter-based uniform random stream built on Philox2x64-10
/// (Salmon, Moraes, Dror, Shaw 2011; Random123 constants).
///
/// The stream is a pure function of (seed, stream_id): the key is the seed
/// and the 128-bit counter is (block_index, stream_id), so distinct
/// stream_ids address disjoint counter spaces and each stream has a period
/// of 2^65 uniforms. Every draw consumes exactly one 64-bit word, which
/// keeps per-replication consumption auditable.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id)
      : seed_(seed), stream_id_(stream_id) {}

  /// Next uniform in [0, 1), with 53-bit resolution: (word >> 11) * 2^-53.
  double next_uniform();

  /// Next raw 64-bit word.
  std::uint64_t next_u64();

  /// Number of 64-bit draws consumed so far.
  std::uint64_t uniforms_used() const { return used_; }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// One Philox2x64-10 block: counter (c0, c1), key -> two output words.
  /// Exposed for reference-vector tests.
  static std::array<std::uint64_t, 2> philox_block(std::uint64_t c0,
                                                   std::uint64_t c1,
                                                   std::uint64_t key);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::uint64_t used_ = 0;
  std::array<std::uint64_t, 2> buf_{};
  unsigned buf_pos_ = 2;  // 2 = empty
};

}  // namespace oddsratio
