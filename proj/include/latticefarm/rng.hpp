#pragma once

#include <array>
#include <cstdint>

namespace latticefarm {

// Philox-4x32-10 counter-based generator (Salmon et al., SC 2011).
// Draws are addressed, not sequenced: the stream identity is
// (seed; global site, direction, sweep, draw index), so a given draw is
// the same no matter which rank produces it or in which order links are
// visited. This is what makes runs bit-identical across rank grids.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// Discriminates independent uses of the same (site, dir, sweep) address.
enum class StreamPurpose : std::uint32_t {
  Update = 0,    // heatbath subgroup draws during sweeps
  HotStart = 1,  // initial random links
  Bench = 2,     // benchmark data generation
};

struct StreamKey {
  std::uint64_t seed = 0;
  std::uint32_t site = 0;   // global lexicographic site index
  std::uint32_t sweep = 0;
  std::uint8_t dir = 0;     // mu in 0..3
  std::uint32_t draw = 0;   // draw index within (site, dir, sweep)
  StreamPurpose purpose = StreamPurpose::Update;
};

// One independent uniform stream. Variable-length consumers (rejection
// sampling) advance an internal block counter, so streams never overlap.
class RngStream {
 public:
  explicit RngStream(const StreamKey& key);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform();
  // Uniform on (0, 1]; safe under log().
  double uniform_pos();
  // Standard normal via Box-Muller.
  double gaussian();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 3> address_;
  std::uint32_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int avail_ = 0;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

}  // namespace latticefarm
