#include "oddsratio/random.hpp"

namespace oddsratio {

namespace {
constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ull;  // PHILOX_M2x64_0
constexpr std::uint64_t kWeyl = 0x9E3779B97F4A7C15ull;        // PHILOX_W64_0
}  // namespace

std::array<std::uint64_t, 2> RandomStream::philox_block(std::uint64_t c0,
                                                        std::uint64_t c1,
                                                        std::uint64_t key) {
  for (int round = 0; round < 10; ++round) {
    const unsigned __int128 product =
        static_cast<unsigned __int128>(kMultiplier) * c0;
    const auto hi = static_cast<std::uint64_t>(product >> 64);
    const auto lo = static_cast<std::uint64_t>(product);
    c0 = hi ^ key ^ c1;
    c1 = lo;
    key += kWeyl;
  }
  return {c0, c1};
}

std::uint64_t RandomStream::next_u64() {
  if (buf_pos_ >= 2) {
    buf_ = philox_block(block_, stream_id_, seed_);
    ++block_;
    buf_pos_ = 0;
  }
  ++used_;
  return buf_[buf_pos_++];
}

double RandomStream::next_uniform() {
  // 53 high bits -> [0, 1)
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace oddsratio
