#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jratio/domain.hpp"
#include "jratio/maps.hpp"
#include "jratio/random.hpp"

namespace jratio {

// ---------------------------------------------------------------------------
// Single-point checks. Each returns a residual or a slack; the sign
// convention is documented per function.
// ---------------------------------------------------------------------------

// |x - conj(y)|^2 - |x - y|^2 - 4 Im x Im y; vanishes on all of C.
double check_identity_halfplane(Cx x, Cx y) noexcept;
// |1 - conj(x) y|^2 - |x - y|^2 - (1 - |x|^2)(1 - |y|^2); vanishes on all of C.
double check_identity_disk(Cx x, Cx y) noexcept;

// Schwarz-Pick slacks: rho(z, w) - rho(f(z), f(w)), nonnegative when the
// inequality holds.
double check_schwarz_pick_halfplane(const MapExpr& m, Cx z, Cx w);
double check_schwarz_pick_disk(const MapExpr& m, Cx z, Cx w);

struct InequalitySides {
  double lhs = 0.0;
  double rhs = 0.0;

  double slack() const noexcept { return rhs - lhs; }
  // Slack divided by max(|lhs|, |rhs|); zero when both sides vanish.
  double relative_slack() const noexcept;
};

// |f(z)-f(w)|/S <= |z-w|/s * sqrt(1 + |f(z)-f(w)|/S) with s, S the smaller
// imaginary parts before and after the map. Half-plane self-maps.
InequalitySides step_1_2_sides(const MapExpr& m, Cx z, Cx w);
double check_step_1_2(const MapExpr& m, Cx z, Cx w);

// Disk counterpart, labelled so that |f(z)| >= |f(w)|, r = max(|z|, |w|):
// |Df|/(1-|f(z)|) <= |z-w|/(1-r) * (1+|f(z)|)/(1+r) * sqrt(1 + |Df|/(1-|f(z)|)).
InequalitySides step_2_2_sides(const MapExpr& m, Cx z, Cx w);
double check_step_2_2(const MapExpr& m, Cx z, Cx w);

// image_modulus_bound(|f(0)|, |z|) - |f(z)|.
double check_bound_2_3(const MapExpr& m, Cx z);

// c(a, r) = (1 + |a|) / (2 (1 + |a| r)).
double disk_contraction_constant(double a_mod, double r);
// Positive root T = 2(1 - c)/(2c - 1) of g; +inf at c = 1/2.
double g_threshold(double c);
// The same root written in terms of |a| and r: (2|a|r + 1 - |a|) / (|a| (1 - r)).
double g_threshold_from(double a_mod, double r);
// g(X) = cX + sqrt(1 + c^2 X^2) - (1 + X), evaluated in a cancellation-free
// form whose sign is exact on (0, T).
double check_g_negativity(double c, double x);

// The quantities of the disk proof for one pair, labelled as in
// step_2_2_sides: X = |z-w|/(1-r), its a priori bound 2r/(1-r), and T(c).
struct DiskProofQuantities {
  double r = 0.0;
  double x = 0.0;
  double x_bound = 0.0;
  double a_mod = 0.0;
  double c = 0.0;
  double threshold = 0.0;
};
DiskProofQuantities disk_proof_quantities(const MapExpr& m, Cx z, Cx w);

// j_dst(f(z), f(w)) / j_src(z, w). Throws CoincidentPoints when z == w.
double check_lipschitz_pair(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m,
                            Cx z, Cx w);

// ---------------------------------------------------------------------------
// Map corpora for the randomized suites. All draws are pure functions of the
// generator state.
// ---------------------------------------------------------------------------

// Real coefficients, ad - bc > 0.
MapExpr random_halfplane_mobius(CounterRng& rng);
MapExpr random_extremal(CounterRng& rng);
// Möbius, extremal, or a 2-deep composition of the two. Every member is an
// automorphism of the upper half-plane.
MapExpr random_halfplane_self_map(CounterRng& rng);
// Between 1 and max_zeros zeros of modulus <= 0.95 and a uniform rotation.
MapExpr random_blaschke(CounterRng& rng, std::size_t max_zeros = 4);
// Blaschke products, disk automorphisms, and 2-deep compositions of both.
MapExpr random_disk_self_map(CounterRng& rng);
// Rotations, one-zero Blaschke factors, Möbius disk automorphisms and
// compositions of two of these.
MapExpr random_disk_automorphism(CounterRng& rng);

struct MapCase {
  PlanarDomain src;
  PlanarDomain dst;
  MapExpr map;
};

// Disk, half-plane, unit disk or upper half-plane source with a Möbius map
// whose pole avoids the source (sometimes on its boundary), paired with the
// computed image domain.
MapCase random_mobius_case(CounterRng& rng);

enum class Corpus { HalfPlaneSelfMaps, DiskBlaschke, MobiusImages, Mixed };

MapCase make_map_case(Corpus corpus, std::uint64_t seed, std::uint64_t index);

// ---------------------------------------------------------------------------
// Reports and suites.
// ---------------------------------------------------------------------------

enum class MarginConvention { Absolute, Relative };

using WitnessValue = std::variant<double, Cx, std::string>;
using Witness = std::vector<std::pair<std::string, WitnessValue>>;

struct CheckReport {
  std::string suite;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  // Minimum slack observed; passed iff worst_margin >= -tolerance.
  double worst_margin = 0.0;
  Witness worst_witness;
  double tolerance = 0.0;
  MarginConvention convention = MarginConvention::Absolute;
};

// {"suite", "samples", "seed", "passed", "worst_margin", "worst_witness"}.
std::string to_json(const CheckReport& report);

enum class MapFamily { General, Automorphisms };

struct SuiteOptions {
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  unsigned threads = 0;  // 0: hardware concurrency
  MapFamily family = MapFamily::General;
};

// identity-halfplane, identity-disk, schwarz-pick-halfplane, schwarz-pick-disk,
// step-1-2, step-2-2, bound-2-3, g-negativity, lipschitz-pair.
const std::vector<std::string>& suite_names();

// Throws Error{DomainError} for unknown names or zero samples. With
// MapFamily::Automorphisms the Schwarz-Pick suites draw only automorphisms
// and score -|slack| (the equality case).
CheckReport run_suite(std::string_view name, const SuiteOptions& options);

// check_lipschitz_pair over maps x pairs_per_map draws against the ceiling 2.
CheckReport lipschitz_ceiling(Corpus corpus, std::size_t maps, std::size_t pairs_per_map,
                              std::uint64_t seed, unsigned threads = 0);
CheckReport lipschitz_ceiling(const MapCase& map_case, std::size_t pairs, std::uint64_t seed,
                              unsigned threads = 0);

}  // namespace jratio
