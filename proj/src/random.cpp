#include "jratio/random.hpp"

#include <cmath>
#include <numbers>

#include "jratio/error.hpp"

namespace jratio {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(splitmix64(seed ^ splitmix64(stream ^ 0x6a09e667f3bcc909ULL))) {}

std::uint64_t CounterRng::next_u64() noexcept {
  return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

double CounterRng::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) noexcept {
  return lo + (hi - lo) * uniform();
}

std::size_t CounterRng::below(std::size_t n) noexcept {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

Cx sample_interior(const PlanarDomain& d, CounterRng& rng, double margin) {
  if (is_bounded(d)) {
    const Disk disk = as_disk(d);
    const double inner = disk.radius - margin;
    if (!(inner > 0.0)) {
      throw Error(ErrorCode::DomainError, "sampling margin exceeds the disk radius");
    }
    for (;;) {
      const Cx z = disk.center + Cx{rng.uniform(-inner, inner), rng.uniform(-inner, inner)};
      if (signed_boundary_distance(d, z) >= margin) return z;
    }
  }
  const HalfPlane hp = as_half_plane(d);
  const Cx tangent = hp.normal * Cx{0.0, -1.0};
  const double log_lo = std::log(margin);
  const double log_hi = std::log(kHalfPlaneExtent);
  for (;;) {
    const double u = rng.uniform(-kHalfPlaneExtent, kHalfPlaneExtent);
    const double depth = std::exp(rng.uniform(log_lo, log_hi));
    const Cx z = std::holds_alternative<UpperHalfPlane>(d)
                     ? Cx{u, depth}
                     : hp.normal * (hp.offset + depth) + tangent * u;
    if (signed_boundary_distance(d, z) >= margin) return z;
  }
}

std::pair<Cx, Cx> sample_pair(const PlanarDomain& d, CounterRng& rng, double margin,
                              double separation_floor) {
  for (;;) {
    const Cx z = sample_interior(d, rng, margin);
    Cx w;
    if (rng.uniform() < 0.1) {
      const double rho = signed_boundary_distance(d, z) * std::pow(10.0, rng.uniform(-4.0, -1.0));
      w = z + std::polar(rho, rng.uniform(0.0, 2.0 * std::numbers::pi));
      if (!(signed_boundary_distance(d, w) >= margin)) continue;
    } else {
      w = sample_interior(d, rng, margin);
    }
    if (std::abs(z - w) >= separation_floor) return {z, w};
  }
}

}  // namespace jratio
