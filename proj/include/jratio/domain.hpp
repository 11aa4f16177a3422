#pragma once

#include <cmath>
#include <complex>
#include <variant>

namespace jratio {

using Cx = std::complex<double>;

inline bool is_finite(Cx z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Canonical tags keep exact fast paths; they are extensionally equal to
// Disk{0, 1} and HalfPlane{i, 0} respectively.
struct UnitDisk {};
struct UpperHalfPlane {};

struct Disk {
  Cx center;
  double radius;
};

// { z : <z, normal> > offset } with the real inner product of the plane.
struct HalfPlane {
  Cx normal;
  double offset;
};

using PlanarDomain = std::variant<UnitDisk, UpperHalfPlane, Disk, HalfPlane>;

// Validating constructors; throw Error{DomainError} on bad parameters.
PlanarDomain make_disk(Cx center, double radius);
PlanarDomain make_half_plane(Cx normal, double offset);

bool is_bounded(const PlanarDomain& d) noexcept;

// Disk parameters of a bounded domain (UnitDisk -> {0, 1}).
Disk as_disk(const PlanarDomain& d);
// Half-plane parameters of an unbounded domain (UpperHalfPlane -> {i, 0}).
HalfPlane as_half_plane(const PlanarDomain& d);

bool contains(const PlanarDomain& d, Cx z) noexcept;

// Signed closed-form distance to the boundary: positive inside, negative
// outside. Never throws.
double signed_boundary_distance(const PlanarDomain& d, Cx z) noexcept;

// Euclidean distance from an interior point to the boundary.
double boundary_distance(const PlanarDomain& d, Cx z);

// Distance ratio metric log(1 + |z - w| / min(d(z), d(w))).
double j_distance(const PlanarDomain& d, Cx z, Cx w);
// Variants taking |z - w| from the caller, e.g. a cancellation-free image
// difference.
double j_distance(const PlanarDomain& d, Cx z, Cx w, double separation);

// |(z - w) / (1 - conj(w) z)| for z, w in the unit disk.
double pseudo_hyperbolic_disk(Cx z, Cx w);
double pseudo_hyperbolic_disk(Cx z, Cx w, double separation);

// |(z - w) / (z - conj(w))| for z, w in the upper half-plane.
double pseudo_hyperbolic_halfplane(Cx z, Cx w);
double pseudo_hyperbolic_halfplane(Cx z, Cx w, double separation);

// Parameter-wise comparison up to tol; canonical tags compare equal to their
// generic forms.
bool approx_equal(const PlanarDomain& lhs, const PlanarDomain& rhs, double tol);

}  // namespace jratio
