#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jratio/domain.hpp"
#include "jratio/maps.hpp"

namespace jratio {

struct SearchConfig {
  double boundary_margin = 1e-6;   // delta: admissible points have d(z) >= delta
  double separation_floor = 1e-7;  // epsilon: admissible pairs have |z - w| >= epsilon
  std::size_t grid_per_axis = 24;
  std::size_t refine_rounds = 60;
  std::size_t refine_seeds = 16;
  double shrink_factor = 0.5;
  std::uint64_t seed = 0;  // drives the self-map certification samples

  void validate() const;  // Error{DomainError}
};

// Region the grid covers, in the source's local frame.
struct SearchBox {
  bool bounded = true;
  double tangential_lo = 0.0, tangential_hi = 0.0;  // half-planes
  double depth_lo = 0.0, depth_hi = 0.0;            // half-planes
  Cx center;                                        // disks
  double radius = 0.0;                              // disks: radius - delta
};

struct SearchReport {
  double best_ratio = 0.0;
  Cx witness_z;
  Cx witness_w;
  std::size_t evaluations = 0;
  SearchConfig config;
  double lower_bound_claim = 0.0;
  double theoretical_ceiling = 2.0;
  std::optional<std::pair<double, double>> cstar_interval;
  PlanarDomain src;
  PlanarDomain dst;
  std::string map;
  SearchBox box;
};

std::string to_json(const SearchReport& report);

// check_lipschitz_pair restricted to admissible pairs. Inadmissible pairs and
// any failure (pole, rounding out of dst) score -inf instead of throwing.
double ratio_objective(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m, Cx z,
                       Cx w, double boundary_margin = 1e-6, double separation_floor = 1e-7) noexcept;

// |f'(z)| d(z, ∂src) / d(f(z), ∂dst), the coincident-pair limit of the ratio.
double local_distortion(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m, Cx z);
inline double local_distortion(const PlanarDomain& src, const MapExpr& m, Cx z) {
  return local_distortion(src, src, m, z);
}

// Grid seeding over both points of the pair, then coordinatewise pattern
// search from the best grid pairs and the points of largest local
// distortion. The result is a lower bound on the Lipschitz constant with a
// witness pair; the output does not depend on `threads`.
//
// Without dst the map must pass a sampled self-map check on src; a Möbius
// map that fails it is measured against its image domain instead.
// Throws SelfMapViolation otherwise.
SearchReport estimate_lipschitz(const PlanarDomain& src, const MapExpr& m, const SearchConfig& cfg,
                                unsigned threads = 0);
SearchReport estimate_lipschitz(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m,
                                const SearchConfig& cfg, unsigned threads = 0);

// log(1 + t sqrt(1 + t^2)) / log(1 + t) for t > 0, stable for large t.
double extremal_ratio(double t);

struct SweepRow {
  double t = 0.0;
  double closed_form = 0.0;
  double measured = 0.0;
  double abs_rel_gap = 0.0;
};

// Measured ratio of the extremal map a - 1/(b + z) on the pair
// z = i - b + t, w = i - b against the closed form.
std::vector<SweepRow> extremal_sweep(std::span<const double> ts, double a, double b);

// Header "t,closed_form,measured,abs_rel_gap", shortest round-trip numbers.
std::string sweep_csv(std::span<const SweepRow> rows);

// (1 + |a|, 2).
std::pair<double, double> cstar_bounds(double a_mod);

}  // namespace jratio
