#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "jratio/domain.hpp"

namespace jratio {

inline constexpr double kPoleThreshold = 1e-300;
inline constexpr double kMobiusDegeneracy = 1e-12;
inline constexpr double kBlaschkeZeroBound = 1.0 - 1e-12;

// z -> (a z + b) / (c z + d). Coefficients are never normalized; compare
// Möbius maps by their action, not by their coefficients.
struct Mobius {
  Cx a, b, c, d;

  static Mobius make(Cx a, Cx b, Cx c, Cx d);  // checks |ad - bc| > 1e-12
  static Mobius identity() { return {1.0, 0.0, 0.0, 1.0}; }
  // Cayley map z -> (z - i) / (z + i), upper half-plane onto the unit disk.
  static Mobius cayley() { return {1.0, Cx{0.0, -1.0}, 1.0, Cx{0.0, 1.0}}; }
  // e^{i theta} (z - p) / (1 - conj(p) z), an automorphism of the unit disk.
  static Mobius disk_automorphism(double theta, Cx p);

  Cx determinant() const noexcept { return a * d - b * c; }
};

// e^{i rotation} * prod_k (z - zeros[k]) / (1 - conj(zeros[k]) z).
struct Blaschke {
  double rotation = 0.0;
  std::vector<Cx> zeros;
};

// z -> a - 1 / (b + z) with real a, b.
struct Extremal {
  double a = 0.0;
  double b = 0.0;
};

class MapExpr;

struct Compose {
  std::shared_ptr<const MapExpr> outer;
  std::shared_ptr<const MapExpr> inner;
};

class MapExpr {
 public:
  using Node = std::variant<Mobius, Blaschke, Extremal, Compose>;

  // Every construction path validates its invariants (Error{DomainError}).
  MapExpr(Mobius m);
  MapExpr(Blaschke b);
  MapExpr(Extremal e);

  static MapExpr identity() { return MapExpr(Mobius::identity()); }

  const Node& node() const noexcept { return node_; }

  const Mobius* as_mobius() const noexcept { return std::get_if<Mobius>(&node_); }

 private:
  explicit MapExpr(Compose c) : node_(std::move(c)) {}
  friend MapExpr compose(const MapExpr& outer, const MapExpr& inner);

  Node node_;
};

// outer ∘ inner. Möbius ∘ Möbius collapses to a single coefficient matrix;
// every other pairing stays a structural Compose node.
MapExpr compose(const MapExpr& outer, const MapExpr& inner);

Mobius mobius_compose(const Mobius& outer, const Mobius& inner) noexcept;
Mobius mobius_inverse(const Mobius& m) noexcept;

Cx apply(const MapExpr& m, Cx z);
Cx derivative(const MapExpr& m, Cx z);

struct PairImage {
  Cx fz, fw;
  Cx difference;  // f(z) - f(w)
};
// Images of a pair with the difference propagated through each node in
// closed form, so it keeps full relative accuracy for close pairs.
PairImage apply_pair(const MapExpr& m, Cx z, Cx w);

// Exact image of a disk or half-plane under m, fitted from three boundary
// points and oriented by one interior witness. Throws UnsupportedImage when
// the pole lies inside d (the image would be a disk exterior).
PlanarDomain mobius_image_domain(const Mobius& m, const PlanarDomain& d);

// Certification aid: apply(m, z) in d for n seeded interior samples z.
bool is_self_map_sampled(const MapExpr& m, const PlanarDomain& d, std::size_t n,
                         std::uint64_t seed, std::string* diagnostic = nullptr);

// (r + |a|) / (1 + |a| r), the Schwarz-Pick bound on |f(z)| given |f(0)|.
double image_modulus_bound(double a_mod, double r);

}  // namespace jratio
