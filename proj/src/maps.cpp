#include "jratio/maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "jratio/error.hpp"
#include "jratio/random.hpp"
#include "jratio/text.hpp"

namespace jratio {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kImageTolerance = 1e-12;

Cx checked_quotient(Cx num, Cx den, const char* where) {
  if (std::abs(den) < kPoleThreshold) {
    throw Error(ErrorCode::PoleEncountered, std::string("pole of ") + where);
  }
  return num / den;
}

void validate(const Mobius& m) {
  if (!is_finite(m.a) || !is_finite(m.b) || !is_finite(m.c) || !is_finite(m.d)) {
    throw Error(ErrorCode::DomainError, "mobius coefficients must be finite");
  }
  if (!(std::abs(m.determinant()) > kMobiusDegeneracy)) {
    throw Error(ErrorCode::DomainError, "degenerate mobius map (|ad - bc| <= 1e-12)");
  }
}

void validate(const Blaschke& b) {
  if (!std::isfinite(b.rotation)) {
    throw Error(ErrorCode::DomainError, "blaschke rotation must be finite");
  }
  if (b.zeros.empty()) throw Error(ErrorCode::DomainError, "blaschke product needs at least one zero");
  for (const Cx& zero : b.zeros) {
    if (!is_finite(zero) || !(std::abs(zero) <= kBlaschkeZeroBound)) {
      throw Error(ErrorCode::DomainError,
                  "blaschke zero " + format_cx(zero) + " is not inside the unit disk");
    }
  }
}

void validate(const Extremal& e) {
  if (!std::isfinite(e.a) || !std::isfinite(e.b)) {
    throw Error(ErrorCode::DomainError, "extremal parameters must be finite");
  }
}

double dot(Cx u, Cx v) noexcept { return u.real() * v.real() + u.imag() * v.imag(); }

PlanarDomain snap_canonical(const PlanarDomain& d) {
  if (const auto* disk = std::get_if<Disk>(&d)) {
    if (std::abs(disk->center) <= kImageTolerance &&
        std::abs(disk->radius - 1.0) <= kImageTolerance) {
      return UnitDisk{};
    }
  } else if (const auto* hp = std::get_if<HalfPlane>(&d)) {
    if (std::abs(hp->normal - Cx{0.0, 1.0}) <= kImageTolerance &&
        std::abs(hp->offset) <= kImageTolerance) {
      return UpperHalfPlane{};
    }
  }
  return d;
}

PlanarDomain fit_disk(const std::array<Cx, 3>& q, Cx witness) {
  const Cx u = q[1] - q[0];
  const Cx v = q[2] - q[0];
  const double cross = 2.0 * (u.real() * v.imag() - u.imag() * v.real());
  const double scale = std::max(std::norm(u), std::norm(v));
  if (!(std::abs(cross) > 1e-14 * scale)) {
    throw Error(ErrorCode::UnsupportedImage, "image boundary points are collinear");
  }
  const double nu = std::norm(u);
  const double nv = std::norm(v);
  const Cx center = q[0] + Cx{(v.imag() * nu - u.imag() * nv) / cross,
                              (u.real() * nv - v.real() * nu) / cross};
  const double radius =
      (std::abs(q[0] - center) + std::abs(q[1] - center) + std::abs(q[2] - center)) / 3.0;
  if (!(std::abs(witness - center) < radius)) {
    throw Error(ErrorCode::UnsupportedImage, "image is the exterior of a disk");
  }
  return snap_canonical(make_disk(center, radius));
}

PlanarDomain fit_half_plane(const std::array<Cx, 3>& q, Cx witness) {
  // Direction from the most distant pair of boundary images.
  std::size_t i0 = 0, i1 = 1;
  double best = std::abs(q[1] - q[0]);
  for (const auto& [i, j] : {std::pair<std::size_t, std::size_t>{0, 2}, {1, 2}}) {
    if (const double len = std::abs(q[j] - q[i]); len > best) {
      best = len;
      i0 = i;
      i1 = j;
    }
  }
  if (!(best > 0.0)) {
    throw Error(ErrorCode::UnsupportedImage, "image boundary points coincide");
  }
  Cx normal = (q[i1] - q[i0]) * Cx{0.0, 1.0} / best;
  normal /= std::abs(normal);
  double offset = (dot(q[0], normal) + dot(q[1], normal) + dot(q[2], normal)) / 3.0;
  const double side = dot(witness, normal) - offset;
  if (side == 0.0 || !std::isfinite(side)) {
    throw Error(ErrorCode::UnsupportedImage, "interior witness lands on the image boundary");
  }
  if (side < 0.0) {
    normal = -normal;
    offset = -offset;
  }
  return snap_canonical(make_half_plane(normal, offset));
}

Cx eval_mobius(const Mobius& m, Cx z) {
  return checked_quotient(m.a * z + m.b, m.c * z + m.d, "mobius map");
}

}  // namespace

Mobius Mobius::make(Cx a, Cx b, Cx c, Cx d) {
  Mobius m{a, b, c, d};
  validate(m);
  return m;
}

Mobius Mobius::disk_automorphism(double theta, Cx p) {
  const Cx rot = std::polar(1.0, theta);
  return Mobius::make(rot, -rot * p, -std::conj(p), 1.0);
}

MapExpr::MapExpr(Mobius m) : node_(m) { validate(m); }
MapExpr::MapExpr(Blaschke b) : node_(std::move(b)) { validate(std::get<Blaschke>(node_)); }
MapExpr::MapExpr(Extremal e) : node_(e) { validate(e); }

Mobius mobius_compose(const Mobius& outer, const Mobius& inner) noexcept {
  Mobius r{outer.a * inner.a + outer.b * inner.c, outer.a * inner.b + outer.b * inner.d,
           outer.c * inner.a + outer.d * inner.c, outer.c * inner.b + outer.d * inner.d};
  // Products of barely nondegenerate maps can drop below the threshold;
  // rescaling the matrix leaves the action unchanged.
  if (std::abs(r.determinant()) <= kMobiusDegeneracy) {
    const double s = 1.0 / std::sqrt(std::abs(outer.determinant()) * std::abs(inner.determinant()));
    r = {r.a * s, r.b * s, r.c * s, r.d * s};
  }
  return r;
}

Mobius mobius_inverse(const Mobius& m) noexcept { return {m.d, -m.b, -m.c, m.a}; }

MapExpr compose(const MapExpr& outer, const MapExpr& inner) {
  if (const Mobius* mo = outer.as_mobius()) {
    if (const Mobius* mi = inner.as_mobius()) return MapExpr(mobius_compose(*mo, *mi));
  }
  return MapExpr(Compose{std::make_shared<const MapExpr>(outer),
                         std::make_shared<const MapExpr>(inner)});
}

Cx apply(const MapExpr& m, Cx z) {
  if (!is_finite(z)) throw Error(ErrorCode::DomainError, "map argument must be finite");
  return std::visit(
      overloaded{
          [&](const Mobius& mob) { return eval_mobius(mob, z); },
          [&](const Blaschke& b) {
            Cx value = std::polar(1.0, b.rotation);
            for (const Cx& p : b.zeros) {
              value *= checked_quotient(z - p, 1.0 - std::conj(p) * z, "blaschke factor");
            }
            return value;
          },
          [&](const Extremal& e) { return e.a - checked_quotient(1.0, e.b + z, "extremal map"); },
          [&](const Compose& c) { return apply(*c.outer, apply(*c.inner, z)); },
      },
      m.node());
}

namespace {

PairImage pair_step(const MapExpr& m, Cx z, Cx w, Cx diff) {
  return std::visit(
      overloaded{
          [&](const Mobius& mob) {
            const Cx dz = mob.c * z + mob.d;
            const Cx dw = mob.c * w + mob.d;
            const Cx fz = checked_quotient(mob.a * z + mob.b, dz, "mobius map");
            const Cx fw = checked_quotient(mob.a * w + mob.b, dw, "mobius map");
            return PairImage{fz, fw, mob.determinant() * diff / (dz * dw)};
          },
          [&](const Blaschke& b) {
            // prod A - prod B = sum_k A_1..A_{k-1} (A_k - B_k) B_{k+1}..B_n.
            const std::size_t n = b.zeros.size();
            std::vector<Cx> fa(n), fb(n), gap(n);
            for (std::size_t k = 0; k < n; ++k) {
              const Cx p = b.zeros[k];
              const Cx da = 1.0 - std::conj(p) * z;
              const Cx db = 1.0 - std::conj(p) * w;
              fa[k] = checked_quotient(z - p, da, "blaschke factor");
              fb[k] = checked_quotient(w - p, db, "blaschke factor");
              gap[k] = (1.0 - std::norm(p)) * diff / (da * db);
            }
            std::vector<Cx> suffix(n + 1, Cx{1.0, 0.0});
            for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * fb[k];
            Cx prefix{1.0, 0.0};
            Cx sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
              sum += prefix * gap[k] * suffix[k + 1];
              prefix *= fa[k];
            }
            const Cx rot = std::polar(1.0, b.rotation);
            return PairImage{rot * prefix, rot * suffix[0], rot * sum};
          },
          [&](const Extremal& e) {
            const Cx dz = e.b + z;
            const Cx dw = e.b + w;
            const Cx fz = e.a - checked_quotient(1.0, dz, "extremal map");
            const Cx fw = e.a - checked_quotient(1.0, dw, "extremal map");
            return PairImage{fz, fw, diff / (dz * dw)};
          },
          [&](const Compose& c) {
            const PairImage inner = pair_step(*c.inner, z, w, diff);
            return pair_step(*c.outer, inner.fz, inner.fw, inner.difference);
          },
      },
      m.node());
}

}  // namespace

PairImage apply_pair(const MapExpr& m, Cx z, Cx w) {
  if (!is_finite(z) || !is_finite(w)) throw Error(ErrorCode::DomainError, "map argument must be finite");
  return pair_step(m, z, w, z - w);
}

Cx derivative(const MapExpr& m, Cx z) {
  if (!is_finite(z)) throw Error(ErrorCode::DomainError, "map argument must be finite");
  return std::visit(
      overloaded{
          [&](const Mobius& mob) {
            const Cx den = mob.c * z + mob.d;
            return checked_quotient(mob.determinant(), den * den, "mobius map");
          },
          [&](const Blaschke& b) {
            const std::size_t n = b.zeros.size();
            std::vector<Cx> factor(n), slope(n);
            for (std::size_t k = 0; k < n; ++k) {
              const Cx p = b.zeros[k];
              const Cx den = 1.0 - std::conj(p) * z;
              factor[k] = checked_quotient(z - p, den, "blaschke factor");
              slope[k] = checked_quotient(1.0 - std::norm(p), den * den, "blaschke factor");
            }
            // Product rule with prefix/suffix products, exact at the zeros.
            std::vector<Cx> suffix(n + 1, Cx{1.0, 0.0});
            for (std::size_t k = n; k-- > 0;) suffix[k] = suffix[k + 1] * factor[k];
            Cx prefix{1.0, 0.0};
            Cx sum{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
              sum += prefix * slope[k] * suffix[k + 1];
              prefix *= factor[k];
            }
            return std::polar(1.0, b.rotation) * sum;
          },
          [&](const Extremal& e) {
            const Cx den = e.b + z;
            return checked_quotient(1.0, den * den, "extremal map");
          },
          [&](const Compose& c) {
            return derivative(*c.outer, apply(*c.inner, z)) * derivative(*c.inner, z);
          },
      },
      m.node());
}

PlanarDomain mobius_image_domain(const Mobius& m, const PlanarDomain& d) {
  validate(m);
  const bool affine = m.c == Cx{0.0, 0.0};
  const Cx pole = affine ? Cx{} : -m.d / m.c;
  const auto image = [&](Cx z) { return eval_mobius(m, z); };

  if (is_bounded(d)) {
    const Disk disk = as_disk(d);
    const auto on_circle = [&](double angle) { return disk.center + std::polar(disk.radius, angle); };
    constexpr double third = 2.0 * std::numbers::pi / 3.0;
    if (affine) {
      return fit_disk({image(on_circle(0.0)), image(on_circle(third)), image(on_circle(-third))},
                      image(disk.center));
    }
    const Cx rel = pole - disk.center;
    const double inside = disk.radius - std::abs(rel);
    const double tol = kImageTolerance * disk.radius;
    if (inside > tol) {
      throw Error(ErrorCode::UnsupportedImage, "pole lies inside the source disk");
    }
    const double phi = std::arg(rel);
    if (inside >= -tol) {
      constexpr double quarter = std::numbers::pi / 2.0;
      return fit_half_plane({image(on_circle(phi + quarter)), image(on_circle(phi + 2.0 * quarter)),
                             image(on_circle(phi - quarter))},
                            image(disk.center));
    }
    // Reflection of the pole in the circle maps to the image center.
    const Cx mirror = disk.center + disk.radius * disk.radius / std::conj(rel);
    return fit_disk({image(on_circle(phi)), image(on_circle(phi + third)), image(on_circle(phi - third))},
                    image(mirror));
  }

  const HalfPlane hp = as_half_plane(d);
  const Cx tangent = hp.normal * Cx{0.0, -1.0};
  const auto foot = [&](Cx q) { return q - (dot(q, hp.normal) - hp.offset) * hp.normal; };
  if (affine) {
    const Cx base = hp.offset * hp.normal;
    return fit_half_plane({image(base - tangent), image(base), image(base + tangent)},
                          image(base + hp.normal));
  }
  const double inside = dot(pole, hp.normal) - hp.offset;
  const double tol = kImageTolerance * std::max({1.0, std::abs(pole), std::abs(hp.offset)});
  if (inside > tol) {
    throw Error(ErrorCode::UnsupportedImage, "pole lies inside the source half-plane");
  }
  const Cx base = foot(pole);
  if (inside >= -tol) {
    // The point at infinity of the boundary line maps to a / c.
    return fit_half_plane({image(base - tangent), m.a / m.c, image(base + tangent)},
                          image(base + hp.normal));
  }
  const double h = -inside;
  return fit_disk({image(base - h * tangent), image(base), image(base + h * tangent)},
                  image(base + h * hp.normal));
}

bool is_self_map_sampled(const MapExpr& m, const PlanarDomain& d, std::size_t n,
                         std::uint64_t seed, std::string* diagnostic) {
  for (std::size_t k = 0; k < n; ++k) {
    CounterRng rng(seed, k);
    const Cx z = sample_interior(d, rng);
    try {
      const Cx fz = apply(m, z);
      if (!contains(d, fz)) {
        if (diagnostic) *diagnostic = "maps " + format_cx(z) + " to " + format_cx(fz) + " outside the domain";
        return false;
      }
    } catch (const Error& e) {
      if (diagnostic) *diagnostic = std::string(e.what()) + " at " + format_cx(z);
      return false;
    }
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

double image_modulus_bound(double a_mod, double r) {
  if (!(a_mod >= 0.0 && a_mod < 1.0) || !(r >= 0.0 && r < 1.0)) {
    throw Error(ErrorCode::DomainError, "image_modulus_bound needs |a| and r in [0, 1)");
  }
  return (r + a_mod) / (1.0 + a_mod * r);
}

}  // namespace jratio
