#include "jratio/domain.hpp"

#include <algorithm>
#include <cmath>

#include "jratio/error.hpp"

namespace jratio {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_inside(const PlanarDomain& d, Cx z, const char* what) {
  if (!contains(d, z)) {
    throw Error(ErrorCode::PointOutsideDomain,
                std::string(what) + " is not an interior point of the domain");
  }
}

// 1 - |z|^2 without forming |z| first.
double one_minus_norm(Cx z) noexcept {
  return std::fma(-z.real(), z.real(), std::fma(-z.imag(), z.imag(), 1.0));
}

}  // namespace

PlanarDomain make_disk(Cx center, double radius) {
  if (!is_finite(center) || !std::isfinite(radius) || !(radius > 0.0)) {
    throw Error(ErrorCode::DomainError, "disk needs a finite center and radius > 0");
  }
  return Disk{center, radius};
}

PlanarDomain make_half_plane(Cx normal, double offset) {
  if (!is_finite(normal) || !std::isfinite(offset)) {
    throw Error(ErrorCode::DomainError, "half-plane parameters must be finite");
  }
  if (std::abs(std::abs(normal) - 1.0) > 1e-12) {
    throw Error(ErrorCode::DomainError, "half-plane normal must have unit length");
  }
  return HalfPlane{normal, offset};
}

bool is_bounded(const PlanarDomain& d) noexcept {
  return std::holds_alternative<UnitDisk>(d) || std::holds_alternative<Disk>(d);
}

Disk as_disk(const PlanarDomain& d) {
  if (std::holds_alternative<UnitDisk>(d)) return Disk{Cx{0.0, 0.0}, 1.0};
  if (const auto* disk = std::get_if<Disk>(&d)) return *disk;
  throw Error(ErrorCode::DomainError, "domain is not a disk");
}

HalfPlane as_half_plane(const PlanarDomain& d) {
  if (std::holds_alternative<UpperHalfPlane>(d)) return HalfPlane{Cx{0.0, 1.0}, 0.0};
  if (const auto* hp = std::get_if<HalfPlane>(&d)) return *hp;
  throw Error(ErrorCode::DomainError, "domain is not a half-plane");
}

double signed_boundary_distance(const PlanarDomain& d, Cx z) noexcept {
  return std::visit(
      overloaded{
          [&](const UnitDisk&) { return 1.0 - std::abs(z); },
          [&](const UpperHalfPlane&) { return z.imag(); },
          [&](const Disk& disk) { return disk.radius - std::abs(z - disk.center); },
          [&](const HalfPlane& hp) {
            return hp.normal.real() * z.real() + hp.normal.imag() * z.imag() - hp.offset;
          },
      },
      d);
}

bool contains(const PlanarDomain& d, Cx z) noexcept {
  return is_finite(z) && signed_boundary_distance(d, z) > 0.0;
}

double boundary_distance(const PlanarDomain& d, Cx z) {
  require_inside(d, z, "point");
  return signed_boundary_distance(d, z);
}

double j_distance(const PlanarDomain& d, Cx z, Cx w) {
  return j_distance(d, z, w, std::abs(z - w));
}

double j_distance(const PlanarDomain& d, Cx z, Cx w, double separation) {
  const double dz = boundary_distance(d, z);
  const double dw = boundary_distance(d, w);
  if (z == w) return 0.0;
  return std::log1p(separation / std::min(dz, dw));
}

double pseudo_hyperbolic_disk(Cx z, Cx w) { return pseudo_hyperbolic_disk(z, w, std::abs(z - w)); }

double pseudo_hyperbolic_disk(Cx z, Cx w, double separation) {
  require_inside(UnitDisk{}, z, "z");
  require_inside(UnitDisk{}, w, "w");
  if (z == w) return 0.0;
  // |1 - conj(w) z|^2 = |z - w|^2 + (1 - |z|^2)(1 - |w|^2) keeps the
  // denominator free of cancellation near the circle.
  const double depth = one_minus_norm(z) * one_minus_norm(w);
  return separation / std::sqrt(separation * separation + depth);
}

double pseudo_hyperbolic_halfplane(Cx z, Cx w) {
  return pseudo_hyperbolic_halfplane(z, w, std::abs(z - w));
}

double pseudo_hyperbolic_halfplane(Cx z, Cx w, double separation) {
  require_inside(UpperHalfPlane{}, z, "z");
  require_inside(UpperHalfPlane{}, w, "w");
  if (z == w) return 0.0;
  // |z - conj(w)|^2 = |z - w|^2 + 4 Im z Im w.
  return separation / std::sqrt(separation * separation + 4.0 * z.imag() * w.imag());
}

bool approx_equal(const PlanarDomain& lhs, const PlanarDomain& rhs, double tol) {
  if (is_bounded(lhs) != is_bounded(rhs)) return false;
  if (is_bounded(lhs)) {
    const Disk a = as_disk(lhs);
    const Disk b = as_disk(rhs);
    return std::abs(a.center - b.center) <= tol && std::abs(a.radius - b.radius) <= tol;
  }
  const HalfPlane a = as_half_plane(lhs);
  const HalfPlane b = as_half_plane(rhs);
  return std::abs(a.normal - b.normal) <= tol && std::abs(a.offset - b.offset) <= tol;
}

}  // namespace jratio
