#include "latticefarm/rng.hpp"

#include <cmath>

namespace latticefarm {

namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;
constexpr std::uint32_t kMulA = 0xD2511F53u;
constexpr std::uint32_t kMulB = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo,
                      std::uint32_t& hi) {
  std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(p);
  hi = static_cast<std::uint32_t>(p >> 32);
}

inline void round_once(std::array<std::uint32_t, 4>& c,
                       const std::array<std::uint32_t, 2>& k) {
  std::uint32_t lo0, hi0, lo1, hi1;
  mul_hi_lo(kMulA, c[0], lo0, hi0);
  mul_hi_lo(kMulB, c[2], lo1, hi1);
  c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key) {
  for (int r = 0; r < 10; ++r) {
    round_once(counter, key);
    key[0] += kWeylA;
    key[1] += kWeylB;
  }
  return counter;
}

RngStream::RngStream(const StreamKey& key) {
  key_ = {static_cast<std::uint32_t>(key.seed),
          static_cast<std::uint32_t>(key.seed >> 32)};
  // Address words: site, sweep, and (dir | draw | purpose) packed. The
  // fourth counter word is the in-stream block counter.
  address_ = {key.site, key.sweep,
              static_cast<std::uint32_t>(key.dir) |
                  (key.draw << 2) |
                  (static_cast<std::uint32_t>(key.purpose) << 28)};
}

void RngStream::refill() {
  buffer_ = philox4x32_10({block_++, address_[0], address_[1], address_[2]}, key_);
  avail_ = 4;
}

std::uint32_t RngStream::next_u32() {
  if (avail_ == 0) refill();
  return buffer_[--avail_];
}

std::uint64_t RngStream::next_u64() {
  std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_pos() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (has_cached_gaussian_) {
    has_cached_gaussian_ = false;
    return cached_gaussian_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform_pos()));
  double phi = 2.0 * M_PI * uniform();
  cached_gaussian_ = r * std::sin(phi);
  has_cached_gaussian_ = true;
  return r * std::cos(phi);
}

}  // namespace latticefarm
