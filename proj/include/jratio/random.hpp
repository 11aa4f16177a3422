#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "jratio/domain.hpp"

namespace jratio {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Counter-based generator: output k of stream s under seed is a pure function
// of (seed, s, k), so any work partition reproduces the same draws.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next_u64() noexcept;
  double uniform() noexcept;  // [0, 1)
  double uniform(double lo, double hi) noexcept;
  std::size_t below(std::size_t n) noexcept;

  // Independent child stream keyed by this stream's key.
  CounterRng split(std::uint64_t child) const noexcept { return CounterRng(key_, child); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline constexpr double kSampleMargin = 1e-3;
// Half-planes are sampled in a local frame: tangential coordinate uniform on
// [-extent, extent], depth log-uniform on [margin, extent].
inline constexpr double kHalfPlaneExtent = 10.0;
inline constexpr double kPairSeparationFloor = 1e-9;

// Point with boundary_distance >= margin.
Cx sample_interior(const PlanarDomain& d, CounterRng& rng, double margin = kSampleMargin);

// Mostly independent pairs; about one in ten is a close pair whose
// separation is log-uniform in [1e-4, 1e-1] times the depth of the first point.
std::pair<Cx, Cx> sample_pair(const PlanarDomain& d, CounterRng& rng,
                              double margin = kSampleMargin,
                              double separation_floor = kPairSeparationFloor);

}  // namespace jratio
