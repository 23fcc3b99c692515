#pragma once

#include <array>
#include <cstdint>

namespace randrace::mc {

// Philox4x32-10 counter-based block cipher (Salmon et al., SC'11), checked
// against the published known-answer vectors in the test suite.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }
};

// Random stream addressed by (seed, stream): every output is a pure function
// of (seed, stream, position), so disjoint trial-index ranges can be handed
// to any number of workers with no coordination and no ordering effects.
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint64_t next_u64() {
    if (half_ == 0) {
      buf_ = Philox4x32::block({static_cast<std::uint32_t>(block_),
                                static_cast<std::uint32_t>(block_ >> 32),
                                static_cast<std::uint32_t>(stream_),
                                static_cast<std::uint32_t>(stream_ >> 32)},
                               key_);
      ++block_;
      half_ = 1;
      return buf_[0] | (std::uint64_t{buf_[1]} << 32);
    }
    half_ = 0;
    return buf_[2] | (std::uint64_t{buf_[3]} << 32);
  }

  // Uniform double strictly inside (0,1): ((x >> 12) + 0.5) * 2^-52, safe to
  // pass through log() and inverse CDFs.
  double next_double_unit() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
  }

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int half_ = 0;
};

}  // namespace randrace::mc
