#include "jratio/search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "jratio/error.hpp"
#include "jratio/parallel.hpp"
#include "jratio/random.hpp"
#include "jratio/text.hpp"
#include "jratio/verify.hpp"

namespace jratio {

namespace {

constexpr double kInfeasible = -std::numeric_limits<double>::infinity();
constexpr std::size_t kCertificationSamples = 256;
constexpr double kMinTangentialMargin = 1e-3;

// Local coordinates of the source. Disks use Cartesian offsets from the
// center; half-planes use (tangential position, log depth).
class Frame {
 public:
  Frame(const PlanarDomain& src, double delta) : bounded_(is_bounded(src)), delta_(delta) {
    if (bounded_) {
      const Disk d = as_disk(src);
      center_ = d.center;
      if (!(delta < d.radius)) {
        throw Error(ErrorCode::DomainError, "boundary margin must be smaller than the radius");
      }
      limit_ = d.radius - delta;
      inner_ = d.radius - delta * (1.0 + 1e-9);
      lo_ = {-limit_, -limit_};
      hi_ = {limit_, limit_};
    } else {
      const HalfPlane h = as_half_plane(src);
      normal_ = h.normal;
      tangent_ = h.normal * Cx{0.0, -1.0};
      base_ = h.offset * h.normal;
      const double extent = 1.0 / std::max(delta, kMinTangentialMargin);
      lo_ = {-extent, std::log(delta)};
      hi_ = {extent, std::log(1.0 / delta)};
      if (!(lo_[1] < hi_[1])) {
        throw Error(ErrorCode::DomainError, "boundary margin must be below 1 for half-planes");
      }
    }
  }

  bool bounded() const noexcept { return bounded_; }
  double lo(int axis) const noexcept { return lo_[axis]; }
  double hi(int axis) const noexcept { return hi_[axis]; }

  Cx point(double p, double q) const noexcept {
    if (bounded_) return {center_.real() + p, center_.imag() + q};
    const double depth = std::max(std::exp(q), delta_ * (1.0 + 1e-9));
    return {base_.real() + p * tangent_.real() + depth * normal_.real(),
            base_.imag() + p * tangent_.imag() + depth * normal_.imag()};
  }

  std::array<double, 2> coords(Cx z) const noexcept {
    if (bounded_) return {z.real() - center_.real(), z.imag() - center_.imag()};
    const Cx v = z - base_;
    const double u = v.real() * tangent_.real() + v.imag() * tangent_.imag();
    const double h = v.real() * normal_.real() + v.imag() * normal_.imag();
    return {u, std::log(std::max(h, delta_))};
  }

  void project(double& p, double& q) const noexcept {
    if (bounded_) {
      const double r = std::hypot(p, q);
      if (r > inner_) {
        p *= inner_ / r;
        q *= inner_ / r;
      }
      return;
    }
    p = std::clamp(p, lo_[0], hi_[0]);
    q = std::clamp(q, lo_[1], hi_[1]);
  }

  SearchBox box() const {
    SearchBox b;
    b.bounded = bounded_;
    if (bounded_) {
      b.center = center_;
      b.radius = limit_;
    } else {
      b.tangential_lo = lo_[0];
      b.tangential_hi = hi_[0];
      b.depth_lo = delta_;
      b.depth_hi = std::exp(hi_[1]);
    }
    return b;
  }

 private:
  bool bounded_;
  double delta_;
  Cx center_, normal_, tangent_, base_;
  double limit_ = 0.0, inner_ = 0.0;
  std::array<double, 2> lo_{}, hi_{};
};

bool lex_less(Cx a, Cx b) noexcept {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

struct Candidate {
  double ratio = kInfeasible;
  Cx z, w;
};

// Larger ratio first, then lexicographic (z, w).
bool better(const Candidate& a, const Candidate& b) noexcept {
  if (a.ratio != b.ratio) return a.ratio > b.ratio;
  if (a.z != b.z) return lex_less(a.z, b.z);
  return lex_less(a.w, b.w);
}

void keep_top(std::vector<Candidate>& top, const Candidate& c, std::size_t k) {
  if (k == 0 || c.ratio == kInfeasible) return;
  if (top.size() == k && !better(c, top.back())) return;
  top.insert(std::upper_bound(top.begin(), top.end(), c, better), c);
  if (top.size() > k) top.pop_back();
}

Candidate canonical(Candidate c) {
  if (lex_less(c.w, c.z)) std::swap(c.z, c.w);
  return c;
}

bool maps_into(const MapExpr& m, const PlanarDomain& src, const PlanarDomain& dst,
               std::uint64_t seed, std::string& diagnostic) {
  for (std::size_t k = 0; k < kCertificationSamples; ++k) {
    CounterRng rng(seed, k);
    const Cx z = sample_interior(src, rng);
    try {
      const Cx fz = apply(m, z);
      if (!contains(dst, fz)) {
        diagnostic = "maps " + format_cx(z) + " to " + format_cx(fz) + " outside the target";
        return false;
      }
    } catch (const Error& e) {
      diagnostic = std::string(e.what()) + " at " + format_cx(z);
      return false;
    }
  }
  return true;
}

struct Refined {
  Candidate best;
  std::size_t evaluations = 0;
};

Refined pattern_search(const Frame& frame, const std::array<double, 2>& step0,
                       const Candidate& seed, const SearchConfig& cfg,
                       const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m) {
  Refined out;
  out.best = seed;
  const auto qz = frame.coords(seed.z);
  const auto qw = frame.coords(seed.w);
  // Midpoint and half-difference of the two points.
  std::array<double, 4> x = {(qz[0] + qw[0]) / 2, (qz[1] + qw[1]) / 2, (qz[0] - qw[0]) / 2,
                             (qz[1] - qw[1]) / 2};
  std::array<double, 4> step = {step0[0], step0[1], step0[0], step0[1]};

  auto evaluate = [&](const std::array<double, 4>& y, Candidate& c) {
    double p0 = y[0] + y[2], p1 = y[1] + y[3];
    double r0 = y[0] - y[2], r1 = y[1] - y[3];
    frame.project(p0, p1);
    frame.project(r0, r1);
    c.z = frame.point(p0, p1);
    c.w = frame.point(r0, r1);
    c.ratio = ratio_objective(src, dst, m, c.z, c.w, cfg.boundary_margin, cfg.separation_floor);
    ++out.evaluations;
    return std::array<double, 4>{(p0 + r0) / 2, (p1 + r1) / 2, (p0 - r0) / 2, (p1 - r1) / 2};
  };

  for (std::size_t round = 0; round < cfg.refine_rounds; ++round) {
    for (int axis = 0; axis < 4; ++axis) {
      bool moved = false;
      for (const double sign : {1.0, -1.0}) {
        std::array<double, 4> y = x;
        y[axis] += sign * step[axis];
        Candidate c;
        const auto projected = evaluate(y, c);
        if (c.ratio > out.best.ratio) {
          out.best = c;
          x = projected;
          moved = true;
          break;
        }
      }
      if (!moved) step[axis] *= cfg.shrink_factor;
    }
  }
  return out;
}

nlohmann::ordered_json config_json(const SearchConfig& cfg) {
  nlohmann::ordered_json j;
  j["boundary_margin"] = cfg.boundary_margin;
  j["separation_floor"] = cfg.separation_floor;
  j["grid_per_axis"] = cfg.grid_per_axis;
  j["refine_rounds"] = cfg.refine_rounds;
  j["refine_seeds"] = cfg.refine_seeds;
  j["shrink_factor"] = cfg.shrink_factor;
  j["seed"] = cfg.seed;
  return j;
}

nlohmann::ordered_json box_json(const SearchBox& box) {
  nlohmann::ordered_json j;
  if (box.bounded) {
    j["kind"] = "disk";
    j["center"] = format_cx(box.center);
    j["radius"] = box.radius;
  } else {
    j["kind"] = "halfplane";
    j["tangential"] = {box.tangential_lo, box.tangential_hi};
    j["depth"] = {box.depth_lo, box.depth_hi};
  }
  return j;
}

}  // namespace

void SearchConfig::validate() const {
  if (!(boundary_margin > 0.0) || !std::isfinite(boundary_margin)) {
    throw Error(ErrorCode::DomainError, "boundary_margin must be positive");
  }
  if (!(separation_floor > 0.0) || !std::isfinite(separation_floor)) {
    throw Error(ErrorCode::DomainError, "separation_floor must be positive");
  }
  if (grid_per_axis < 2) throw Error(ErrorCode::DomainError, "grid_per_axis must be at least 2");
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0)) {
    throw Error(ErrorCode::DomainError, "shrink_factor must lie in (0, 1)");
  }
}

double ratio_objective(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m, Cx z,
                       Cx w, double boundary_margin, double separation_floor) noexcept {
  try {
    if (!is_finite(z) || !is_finite(w)) return kInfeasible;
    if (!(std::abs(z - w) >= separation_floor)) return kInfeasible;
    if (!(signed_boundary_distance(src, z) >= boundary_margin) ||
        !(signed_boundary_distance(src, w) >= boundary_margin)) {
      return kInfeasible;
    }
    const double ratio = check_lipschitz_pair(src, dst, m, z, w);
    return std::isfinite(ratio) ? ratio : kInfeasible;
  } catch (...) {
    return kInfeasible;
  }
}

double local_distortion(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m, Cx z) {
  const double dz = boundary_distance(src, z);
  const Cx fz = apply(m, z);
  return std::abs(derivative(m, z)) * dz / boundary_distance(dst, fz);
}

SearchReport estimate_lipschitz(const PlanarDomain& src, const MapExpr& m, const SearchConfig& cfg,
                                unsigned threads) {
  std::string diagnostic;
  if (is_self_map_sampled(m, src, kCertificationSamples, cfg.seed, &diagnostic)) {
    return estimate_lipschitz(src, src, m, cfg, threads);
  }
  if (const Mobius* mob = m.as_mobius()) {
    PlanarDomain image;
    try {
      image = mobius_image_domain(*mob, src);
    } catch (const Error& e) {
      throw Error(ErrorCode::SelfMapViolation,
                  "map is not a self-map and has no supported image: " + std::string(e.what()));
    }
    return estimate_lipschitz(src, image, m, cfg, threads);
  }
  throw Error(ErrorCode::SelfMapViolation, "map is not a self-map of the source: " + diagnostic);
}

SearchReport estimate_lipschitz(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m,
                                const SearchConfig& cfg, unsigned threads) {
  cfg.validate();
  std::string diagnostic;
  if (!maps_into(m, src, dst, cfg.seed, diagnostic)) {
    throw Error(ErrorCode::SelfMapViolation, "map does not send the source into the target: " + diagnostic);
  }
  const Frame frame(src, cfg.boundary_margin);
  const std::size_t g = cfg.grid_per_axis;
  const double delta = cfg.boundary_margin;

  // Grid points, admissible only, in lexicographic order.
  std::vector<Cx> points;
  points.reserve(g * g);
  auto axis_value = [&](int axis, std::size_t k) {
    const double t = static_cast<double>(k) / static_cast<double>(g - 1);
    return k + 1 == g ? frame.hi(axis) : frame.lo(axis) + t * (frame.hi(axis) - frame.lo(axis));
  };
  for (std::size_t p = 0; p < g; ++p) {
    for (std::size_t q = 0; q < g; ++q) {
      const Cx z = frame.point(axis_value(0, p), axis_value(1, q));
      if (signed_boundary_distance(src, z) >= delta) points.push_back(z);
    }
  }
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::DomainError, "search grid has no admissible points");

  std::size_t evaluations = 0;
  const std::size_t k = cfg.refine_seeds;

  // Stage 1: all grid pairs, one row per work unit.
  std::vector<std::vector<Candidate>> rows(n);
  std::vector<Candidate> row_best(n);
  parallel_for(n, threads, [&](std::size_t i) {
    std::vector<Candidate> top;
    Candidate best;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Candidate c{ratio_objective(src, dst, m, points[i], points[j], delta, cfg.separation_floor),
                        points[i], points[j]};
      keep_top(top, c, k);
      if (c.ratio != kInfeasible && (best.ratio == kInfeasible || better(c, best))) best = c;
    }
    rows[i] = std::move(top);
    row_best[i] = best;
  });
  evaluations += n * (n - 1) / 2;
  std::vector<Candidate> seeds;
  Candidate grid_best;
  for (std::size_t i = 0; i < n; ++i) {
    for (const Candidate& c : rows[i]) keep_top(seeds, c, k);
    if (row_best[i].ratio != kInfeasible &&
        (grid_best.ratio == kInfeasible || better(row_best[i], grid_best))) {
      grid_best = row_best[i];
    }
  }

  // Stage 2: coincident-pair seeds at the points of largest local distortion.
  std::vector<double> distortion(n, kInfeasible);
  parallel_for(n, threads, [&](std::size_t i) {
    try {
      const double v = local_distortion(src, dst, m, points[i]);
      if (std::isfinite(v)) distortion[i] = v;
    } catch (const Error&) {
    }
  });
  evaluations += n;
  std::vector<Candidate> by_distortion;
  for (std::size_t i = 0; i < n; ++i) keep_top(by_distortion, {distortion[i], points[i], points[i]}, k);
  const Cx direction = frame.bounded() ? Cx{1.0, 0.0} : as_half_plane(src).normal * Cx{0.0, -1.0};
  for (const Candidate& c : by_distortion) {
    const double h = std::max(100.0 * cfg.separation_floor, 1e-4 * boundary_distance(src, c.z));
    Candidate best;
    for (const double sign : {1.0, -1.0}) {
      const Cx w = c.z + sign * h * direction;
      const Candidate pair = canonical(
          {ratio_objective(src, dst, m, c.z, w, delta, cfg.separation_floor), c.z, w});
      ++evaluations;
      if (pair.ratio != kInfeasible && (best.ratio == kInfeasible || better(pair, best))) best = pair;
    }
    if (best.ratio != kInfeasible) seeds.push_back(best);
  }

  // Stage 3: pattern search from every seed.
  const std::array<double, 2> step0 = {
      (frame.hi(0) - frame.lo(0)) / static_cast<double>(g - 1),
      (frame.hi(1) - frame.lo(1)) / static_cast<double>(g - 1)};
  std::vector<Refined> refined(seeds.size());
  parallel_for(seeds.size(), threads, [&](std::size_t s) {
    refined[s] = pattern_search(frame, step0, seeds[s], cfg, src, dst, m);
  });

  Candidate best = grid_best;
  for (const Refined& r : refined) {
    evaluations += r.evaluations;
    const Candidate c = canonical(r.best);
    if (c.ratio != kInfeasible && (best.ratio == kInfeasible || better(c, best))) best = c;
  }
  if (best.ratio == kInfeasible) {
    throw Error(ErrorCode::DomainError, "search found no admissible pair");
  }
  best = canonical(best);

  SearchReport report;
  report.best_ratio = ratio_objective(src, dst, m, best.z, best.w, delta, cfg.separation_floor);
  report.witness_z = best.z;
  report.witness_w = best.w;
  report.evaluations = evaluations;
  report.config = cfg;
  report.lower_bound_claim = report.best_ratio;
  report.src = src;
  report.dst = dst;
  report.map = format_map(m);
  report.box = frame.box();
  if (approx_equal(src, UnitDisk{}, 0.0) && approx_equal(dst, UnitDisk{}, 0.0)) {
    const double a = std::abs(apply(m, Cx{0.0, 0.0}));
    if (a < 1.0) report.cstar_interval = cstar_bounds(a);
  }
  return report;
}

std::string to_json(const SearchReport& report) {
  nlohmann::ordered_json j;
  j["best_ratio"] = report.best_ratio;
  j["witness_z"] = format_cx(report.witness_z);
  j["witness_w"] = format_cx(report.witness_w);
  j["evaluations"] = report.evaluations;
  j["config"] = config_json(report.config);
  j["lower_bound_claim"] = report.lower_bound_claim;
  j["theoretical_ceiling"] = report.theoretical_ceiling;
  if (report.cstar_interval) {
    j["cstar_interval"] = {report.cstar_interval->first, report.cstar_interval->second};
  } else {
    j["cstar_interval"] = nullptr;
  }
  j["src"] = format_domain(report.src);
  j["dst"] = format_domain(report.dst);
  j["map"] = report.map;
  j["search_box"] = box_json(report.box);
  return j.dump();
}

double extremal_ratio(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorCode::DomainError, "extremal_ratio needs a finite t > 0");
  }
  if (t <= 1.0) return std::log1p(t * std::hypot(1.0, t)) / std::log1p(t);
  // 1 + t sqrt(1 + t^2) = t^2 (1 + u^2 + u^2 / (sqrt(1 + u^2) + 1)) with u = 1/t.
  const double u = 1.0 / t;
  const double u2 = u * u;
  const double lt = std::log(t);
  return (2.0 * lt + std::log1p(u2 + u2 / (std::sqrt(1.0 + u2) + 1.0))) / (lt + std::log1p(u));
}

std::vector<SweepRow> extremal_sweep(std::span<const double> ts, double a, double b) {
  const MapExpr f = Extremal{a, b};
  std::vector<SweepRow> rows;
  rows.reserve(ts.size());
  for (const double t : ts) {
    SweepRow row;
    row.t = t;
    row.closed_form = extremal_ratio(t);
    const Cx z{-b + t, 1.0};
    const Cx w{-b, 1.0};
    row.measured = check_lipschitz_pair(UpperHalfPlane{}, UpperHalfPlane{}, f, z, w);
    row.abs_rel_gap = std::abs(row.measured - row.closed_form) / std::abs(row.closed_form);
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "t,closed_form,measured,abs_rel_gap\n";
  for (const SweepRow& r : rows) {
    out += format_real(r.t) + ',' + format_real(r.closed_form) + ',' + format_real(r.measured) + ',' +
           format_real(r.abs_rel_gap) + '\n';
  }
  return out;
}

std::pair<double, double> cstar_bounds(double a_mod) {
  if (!(a_mod >= 0.0 && a_mod < 1.0)) {
    throw Error(ErrorCode::DomainError, "cstar_bounds needs |a| in [0, 1)");
  }
  return {1.0 + a_mod, 2.0};
}

}  // namespace jratio
