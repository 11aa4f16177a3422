#include "jratio/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <type_traits>

#include "json.hpp"
#include "jratio/error.hpp"
#include "jratio/parallel.hpp"
#include "jratio/text.hpp"

namespace jratio {

namespace {

constexpr double kFailedSample = -std::numeric_limits<double>::max();
constexpr std::size_t kChunk = 1000;
constexpr std::size_t kPairsPerMap = 100;
constexpr std::size_t kCertificationSamples = 256;

void require_inside(const PlanarDomain& d, Cx z, const char* what) {
  if (!contains(d, z)) {
    throw Error(ErrorCode::PointOutsideDomain, std::string(what) + " = " + format_cx(z) +
                                                   " is not an interior point");
  }
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw Error(ErrorCode::DomainError, std::string(what) + " must lie in [0, 1)");
  }
}

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : s) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t stream_key(std::uint64_t tag, std::uint64_t kind, std::uint64_t index) noexcept {
  return splitmix64(tag ^ splitmix64(kind ^ splitmix64(index)));
}

Cx random_in_disk(CounterRng& rng, double radius) {
  for (;;) {
    const Cx z{rng.uniform(-radius, radius), rng.uniform(-radius, radius)};
    if (std::abs(z) <= radius) return z;
  }
}

Cx random_box(CounterRng& rng, double half_width) {
  return {rng.uniform(-half_width, half_width), rng.uniform(-half_width, half_width)};
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

// ---------------------------------------------------------------------------
// Suite driver: margins are computed per sample index and reduced in index
// order; the witness of the worst sample is regenerated from its index.
// ---------------------------------------------------------------------------

struct SuiteDef {
  std::string name;
  double tolerance = 0.0;
  MarginConvention convention = MarginConvention::Absolute;
  std::function<double(std::size_t)> margin;
  std::function<Witness(std::size_t)> witness;
};

CheckReport execute(const SuiteDef& def, std::size_t samples, std::uint64_t seed, unsigned threads) {
  if (samples == 0) throw Error(ErrorCode::DomainError, "suite needs at least one sample");
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::pair<double, std::size_t>> best(chunks);
  parallel_for(chunks, threads, [&](std::size_t k) {
    const std::size_t begin = k * kChunk;
    const std::size_t end = std::min(samples, begin + kChunk);
    std::pair<double, std::size_t> local{std::numeric_limits<double>::infinity(), begin};
    for (std::size_t i = begin; i < end; ++i) {
      double m;
      try {
        m = def.margin(i);
      } catch (const Error&) {
        m = kFailedSample;
      }
      if (std::isnan(m)) m = kFailedSample;
      if (m < local.first) local = {m, i};
    }
    best[k] = local;
  });
  std::pair<double, std::size_t> worst = best.front();
  for (const auto& b : best) {
    if (b.first < worst.first) worst = b;
  }
  CheckReport report;
  report.suite = def.name;
  report.samples = samples;
  report.seed = seed;
  report.worst_margin = worst.first;
  report.tolerance = def.tolerance;
  report.convention = def.convention;
  report.passed = worst.first >= -def.tolerance;
  try {
    report.worst_witness = def.witness(worst.second);
  } catch (const Error& e) {
    report.worst_witness = {{"error", std::string(e.what())}};
  }
  return report;
}

// A block of consecutive samples shares one map case.
struct CaseTable {
  std::vector<MapCase> cases;
  std::vector<std::string> rejection;  // empty when certified

  const MapCase& at(std::size_t block) const { return cases[block]; }
  bool certified(std::size_t block) const { return rejection[block].empty(); }
};

template <class Draw>
CaseTable build_cases(std::size_t blocks, unsigned threads, std::uint64_t seed, Draw draw) {
  std::vector<std::optional<MapCase>> slots(blocks);
  std::vector<std::string> rejection(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    slots[b] = draw(b);
    std::string diagnostic;
    if (!maps_into(slots[b]->map, slots[b]->src, slots[b]->dst, splitmix64(seed ^ b), diagnostic)) {
      rejection[b] = diagnostic.empty() ? "certification failed" : diagnostic;
    }
  });
  CaseTable table;
  table.cases.reserve(blocks);
  for (auto& s : slots) table.cases.push_back(std::move(*s));
  table.rejection = std::move(rejection);
  return table;
}

Witness case_witness(const MapCase& mc, Cx z, Cx w) {
  return {{"map", format_map(mc.map)}, {"z", z}, {"w", w}};
}

using PairCheck = std::function<double(const MapCase&, Cx, Cx)>;

SuiteDef pair_suite(std::string name, double tolerance, MarginConvention convention,
                    std::shared_ptr<const CaseTable> table, std::size_t pairs_per_case,
                    std::uint64_t seed, PairCheck check, bool describe_domains = false) {
  const std::uint64_t tag = fnv1a(name);
  auto draw_pair = [=](std::size_t i) {
    const MapCase& mc = table->at(i / pairs_per_case);
    CounterRng rng(seed, stream_key(tag, 1, i));
    return sample_pair(mc.src, rng);
  };
  SuiteDef def;
  def.name = std::move(name);
  def.tolerance = tolerance;
  def.convention = convention;
  def.margin = [=](std::size_t i) {
    const std::size_t block = i / pairs_per_case;
    if (!table->certified(block)) return kFailedSample;
    const auto [z, w] = draw_pair(i);
    return check(table->at(block), z, w);
  };
  def.witness = [=](std::size_t i) {
    const std::size_t block = i / pairs_per_case;
    const MapCase& mc = table->at(block);
    const auto [z, w] = draw_pair(i);
    Witness out = case_witness(mc, z, w);
    if (describe_domains) {
      out.insert(out.begin(), Witness::value_type{"dst", format_domain(mc.dst)});
      out.insert(out.begin(), Witness::value_type{"src", format_domain(mc.src)});
    }
    if (!table->certified(block)) out.emplace_back("rejected", table->rejection[block]);
    return out;
  };
  return def;
}

std::shared_ptr<const CaseTable> suite_cases(std::string_view suite, std::size_t samples,
                                             std::size_t pairs_per_case, std::uint64_t seed,
                                             unsigned threads, const PlanarDomain& domain,
                                             MapExpr (*draw)(CounterRng&)) {
  const std::uint64_t tag = fnv1a(suite);
  const std::size_t blocks = (samples + pairs_per_case - 1) / pairs_per_case;
  return std::make_shared<const CaseTable>(build_cases(blocks, threads, seed, [&](std::size_t b) {
    CounterRng rng(seed, stream_key(tag, 0, b));
    return MapCase{domain, domain, draw(rng)};
  }));
}

SuiteDef identity_suite(std::string name, std::uint64_t seed, double box,
                        double (*residual)(Cx, Cx) noexcept, double (*scale)(Cx, Cx)) {
  const std::uint64_t tag = fnv1a(name);
  auto draw = [=](std::size_t i) {
    CounterRng rng(seed, stream_key(tag, 1, i));
    const Cx x = random_box(rng, box);
    const Cx y = random_box(rng, box);
    return std::pair{x, y};
  };
  SuiteDef def;
  def.name = std::move(name);
  def.tolerance = 1e-10;
  def.convention = MarginConvention::Relative;
  def.margin = [=](std::size_t i) {
    const auto [x, y] = draw(i);
    return -std::abs(residual(x, y)) / scale(x, y);
  };
  def.witness = [=](std::size_t i) {
    const auto [x, y] = draw(i);
    return Witness{{"x", x}, {"y", y}, {"residual", residual(x, y)}};
  };
  return def;
}

SuiteDef g_negativity_suite(std::uint64_t seed) {
  const std::string name = "g-negativity";
  const std::uint64_t tag = fnv1a(name);
  auto draw = [=](std::size_t i) {
    CounterRng rng(seed, stream_key(tag, 1, i));
    double c;
    if (i % 2 == 0) {
      double a_mod;
      do a_mod = rng.uniform(); while (a_mod == 0.0);
      c = disk_contraction_constant(a_mod, rng.uniform());
    } else {
      c = rng.uniform(0.5, 1.0);
    }
    const double threshold = g_threshold(c);
    double u;
    do u = rng.uniform(); while (u == 0.0);
    const double x = std::isinf(threshold) ? std::exp(std::log(1e-6) + u * std::log(1e12)) : u * threshold;
    return std::pair{c, x};
  };
  SuiteDef def;
  def.name = name;
  def.tolerance = 1e-12;
  def.convention = MarginConvention::Absolute;
  def.margin = [=](std::size_t i) {
    const auto [c, x] = draw(i);
    if (!(x > 0.0)) return std::numeric_limits<double>::infinity();
    return -check_g_negativity(c, x);
  };
  def.witness = [=](std::size_t i) {
    const auto [c, x] = draw(i);
    return Witness{{"c", c}, {"X", x}, {"T", g_threshold(c)}, {"g", check_g_negativity(c, x)}};
  };
  return def;
}

SuiteDef bound_2_3_suite(std::size_t samples, std::uint64_t seed, unsigned threads) {
  const std::string name = "bound-2-3";
  const std::uint64_t tag = fnv1a(name);
  auto table = suite_cases(name, samples, kPairsPerMap, seed, threads, UnitDisk{}, random_disk_self_map);
  auto draw = [=](std::size_t i) {
    CounterRng rng(seed, stream_key(tag, 1, i));
    return sample_interior(UnitDisk{}, rng);
  };
  SuiteDef def;
  def.name = name;
  def.tolerance = 1e-10;
  def.convention = MarginConvention::Absolute;
  def.margin = [=](std::size_t i) {
    const std::size_t block = i / kPairsPerMap;
    if (!table->certified(block)) return kFailedSample;
    return check_bound_2_3(table->at(block).map, draw(i));
  };
  def.witness = [=](std::size_t i) {
    return Witness{{"map", format_map(table->at(i / kPairsPerMap).map)}, {"z", draw(i)}};
  };
  return def;
}

const char* corpus_name(Corpus corpus) {
  switch (corpus) {
    case Corpus::HalfPlaneSelfMaps: return "halfplane";
    case Corpus::DiskBlaschke: return "disk";
    case Corpus::MobiusImages: return "mobius";
    case Corpus::Mixed: return "mixed";
  }
  return "unknown";
}

double ceiling_margin(const MapCase& mc, Cx z, Cx w) {
  return 2.0 - check_lipschitz_pair(mc.src, mc.dst, mc.map, z, w);
}

}  // namespace

// ---------------------------------------------------------------------------
// Single-point checks
// ---------------------------------------------------------------------------

double check_identity_halfplane(Cx x, Cx y) noexcept {
  return std::norm(x - std::conj(y)) - std::norm(x - y) - 4.0 * x.imag() * y.imag();
}

double check_identity_disk(Cx x, Cx y) noexcept {
  return std::norm(1.0 - std::conj(x) * y) - std::norm(x - y) -
         (1.0 - std::norm(x)) * (1.0 - std::norm(y));
}

double check_schwarz_pick_halfplane(const MapExpr& m, Cx z, Cx w) {
  const double before = pseudo_hyperbolic_halfplane(z, w);
  const PairImage f = apply_pair(m, z, w);
  return before - pseudo_hyperbolic_halfplane(f.fz, f.fw, std::abs(f.difference));
}

double check_schwarz_pick_disk(const MapExpr& m, Cx z, Cx w) {
  const double before = pseudo_hyperbolic_disk(z, w);
  const PairImage f = apply_pair(m, z, w);
  return before - pseudo_hyperbolic_disk(f.fz, f.fw, std::abs(f.difference));
}

double InequalitySides::relative_slack() const noexcept {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : slack() / scale;
}

InequalitySides step_1_2_sides(const MapExpr& m, Cx z, Cx w) {
  const PlanarDomain h = UpperHalfPlane{};
  require_inside(h, z, "z");
  require_inside(h, w, "w");
  const PairImage f = apply_pair(m, z, w);
  const Cx fz = f.fz;
  const Cx fw = f.fw;
  require_inside(h, fz, "f(z)");
  require_inside(h, fw, "f(w)");
  const double s = std::min(z.imag(), w.imag());
  const double big_s = std::min(fz.imag(), fw.imag());
  InequalitySides out;
  out.lhs = std::abs(f.difference) / big_s;
  out.rhs = std::abs(z - w) / s * std::sqrt(1.0 + out.lhs);
  return out;
}

double check_step_1_2(const MapExpr& m, Cx z, Cx w) { return step_1_2_sides(m, z, w).slack(); }

InequalitySides step_2_2_sides(const MapExpr& m, Cx z, Cx w) {
  const PlanarDomain disk = UnitDisk{};
  require_inside(disk, z, "z");
  require_inside(disk, w, "w");
  const PairImage f = apply_pair(m, z, w);
  Cx fz = f.fz;
  Cx fw = f.fw;
  require_inside(disk, fz, "f(z)");
  require_inside(disk, fw, "f(w)");
  if (std::abs(fz) < std::abs(fw)) {
    std::swap(z, w);
    std::swap(fz, fw);
  }
  const double r = std::max(std::abs(z), std::abs(w));
  const double mod = std::abs(fz);
  InequalitySides out;
  out.lhs = std::abs(f.difference) / (1.0 - mod);
  out.rhs = std::abs(z - w) / (1.0 - r) * (1.0 + mod) / (1.0 + r) * std::sqrt(1.0 + out.lhs);
  return out;
}

double check_step_2_2(const MapExpr& m, Cx z, Cx w) { return step_2_2_sides(m, z, w).slack(); }

double check_bound_2_3(const MapExpr& m, Cx z) {
  const PlanarDomain disk = UnitDisk{};
  require_inside(disk, z, "z");
  const Cx a = apply(m, Cx{0.0, 0.0});
  const Cx fz = apply(m, z);
  require_inside(disk, a, "f(0)");
  require_inside(disk, fz, "f(z)");
  return image_modulus_bound(std::abs(a), std::abs(z)) - std::abs(fz);
}

double disk_contraction_constant(double a_mod, double r) {
  require_unit_interval(a_mod, "|a|");
  require_unit_interval(r, "r");
  return (1.0 + a_mod) / (2.0 * (1.0 + a_mod * r));
}

double g_threshold(double c) {
  if (!(c >= 0.5 && c <= 1.0)) throw Error(ErrorCode::DomainError, "g_threshold needs c in [1/2, 1]");
  if (c == 0.5) return std::numeric_limits<double>::infinity();
  return 2.0 * (1.0 - c) / (2.0 * c - 1.0);
}

double g_threshold_from(double a_mod, double r) {
  require_unit_interval(a_mod, "|a|");
  require_unit_interval(r, "r");
  if (a_mod == 0.0) return std::numeric_limits<double>::infinity();
  return (2.0 * a_mod * r + 1.0 - a_mod) / (a_mod * (1.0 - r));
}

double check_g_negativity(double c, double x) {
  if (!(c >= 0.5 && c <= 1.0)) throw Error(ErrorCode::DomainError, "g needs c in [1/2, 1]");
  if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorCode::DomainError, "g needs finite X > 0");
  // sqrt(1 + c^2 X^2) - (1 + (1 - c) X) rationalized:
  // X ((2c - 1) X - 2 (1 - c)) / (sqrt(1 + c^2 X^2) + 1 + (1 - c) X).
  const double one_minus_c = 1.0 - c;
  const double numerator = x * ((2.0 * c - 1.0) * x - 2.0 * one_minus_c);
  return numerator / (std::hypot(1.0, c * x) + 1.0 + one_minus_c * x);
}

DiskProofQuantities disk_proof_quantities(const MapExpr& m, Cx z, Cx w) {
  const PlanarDomain disk = UnitDisk{};
  require_inside(disk, z, "z");
  require_inside(disk, w, "w");
  const Cx a = apply(m, Cx{0.0, 0.0});
  require_inside(disk, a, "f(0)");
  DiskProofQuantities q;
  q.r = std::max(std::abs(z), std::abs(w));
  q.x = std::abs(z - w) / (1.0 - q.r);
  q.x_bound = 2.0 * q.r / (1.0 - q.r);
  q.a_mod = std::abs(a);
  q.c = disk_contraction_constant(q.a_mod, q.r);
  q.threshold = g_threshold(q.c);
  return q;
}

double check_lipschitz_pair(const PlanarDomain& src, const PlanarDomain& dst, const MapExpr& m,
                            Cx z, Cx w) {
  if (z == w) throw Error(ErrorCode::CoincidentPoints, "lipschitz ratio needs z != w");
  const double before = j_distance(src, z, w);
  if (!(before > 0.0)) {
    throw Error(ErrorCode::CoincidentPoints, "points are numerically coincident in the j metric");
  }
  const PairImage f = apply_pair(m, z, w);
  return j_distance(dst, f.fz, f.fw, std::abs(f.difference)) / before;
}

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

MapExpr random_halfplane_mobius(CounterRng& rng) {
  for (;;) {
    double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    const double c = rng.uniform(-2.0, 2.0), d = rng.uniform(-2.0, 2.0);
    const double det = a * d - b * c;
    if (std::abs(det) < 0.05) continue;
    if (det < 0.0) {
      a = -a;
      b = -b;
    }
    return MapExpr(Mobius::make(a, b, c, d));
  }
}

MapExpr random_extremal(CounterRng& rng) {
  const double a = rng.uniform(-3.0, 3.0);
  const double b = rng.uniform(-3.0, 3.0);
  return MapExpr(Extremal{a, b});
}

MapExpr random_halfplane_self_map(CounterRng& rng) {
  auto base = [&] { return rng.below(2) == 0 ? random_halfplane_mobius(rng) : random_extremal(rng); };
  switch (rng.below(3)) {
    case 0: return random_halfplane_mobius(rng);
    case 1: return random_extremal(rng);
    default: {
      const MapExpr outer = base();
      return compose(outer, base());
    }
  }
}

MapExpr random_blaschke(CounterRng& rng, std::size_t max_zeros) {
  const double rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const std::size_t count = 1 + rng.below(std::max<std::size_t>(max_zeros, 1));
  std::vector<Cx> zeros;
  for (std::size_t k = 0; k < count; ++k) zeros.push_back(random_in_disk(rng, 0.95));
  return MapExpr(Blaschke{rotation, std::move(zeros)});
}

namespace {

MapExpr random_mobius_disk_automorphism(CounterRng& rng) {
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return MapExpr(Mobius::disk_automorphism(theta, random_in_disk(rng, 0.95)));
}

MapExpr random_single_automorphism(CounterRng& rng) {
  switch (rng.below(3)) {
    case 0: return MapExpr(Blaschke{rng.uniform(0.0, 2.0 * std::numbers::pi), {Cx{0.0, 0.0}}});
    case 1: {
      const double rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
      return MapExpr(Blaschke{rotation, {random_in_disk(rng, 0.95)}});
    }
    default: return random_mobius_disk_automorphism(rng);
  }
}

}  // namespace

MapExpr random_disk_self_map(CounterRng& rng) {
  auto base = [&] { return rng.below(3) == 0 ? random_mobius_disk_automorphism(rng) : random_blaschke(rng); };
  if (rng.below(3) < 2) return random_blaschke(rng);
  const MapExpr outer = base();
  return compose(outer, base());
}

MapExpr random_disk_automorphism(CounterRng& rng) {
  if (rng.below(2) == 0) return random_single_automorphism(rng);
  const MapExpr outer = random_single_automorphism(rng);
  return compose(outer, random_single_automorphism(rng));
}

MapCase random_mobius_case(CounterRng& rng) {
  for (;;) {
    PlanarDomain src;
    switch (rng.below(4)) {
      case 0: src = UnitDisk{}; break;
      case 1: src = UpperHalfPlane{}; break;
      case 2: {
        const Cx center = random_box(rng, 2.0);
        src = make_disk(center, rng.uniform(0.5, 3.0));
        break;
      }
      default: {
        const Cx normal = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
        src = make_half_plane(normal, rng.uniform(-2.0, 2.0));
        break;
      }
    }
    const std::size_t mode = rng.below(8);
    Mobius m;
    if (mode < 2) {
      const Cx a = std::polar(rng.uniform(0.3, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
      m = Mobius{a, random_box(rng, 2.0), 0.0, 1.0};
    } else {
      const bool on_boundary = mode == 2;
      Cx pole;
      if (is_bounded(src)) {
        const Disk disk = as_disk(src);
        const double dist = on_boundary ? disk.radius : disk.radius * rng.uniform(1.2, 4.0);
        pole = disk.center + std::polar(dist, rng.uniform(0.0, 2.0 * std::numbers::pi));
      } else {
        const HalfPlane hp = as_half_plane(src);
        const double depth = on_boundary ? 0.0 : rng.uniform(0.2, 3.0);
        const double along = rng.uniform(-3.0, 3.0);
        pole = hp.normal * (hp.offset - depth) + hp.normal * Cx{0.0, -1.0} * along;
      }
      const Cx c = std::polar(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0 * std::numbers::pi));
      const Cx d = -c * pole;
      Cx a, b;
      do {
        a = random_box(rng, 2.0);
        b = random_box(rng, 2.0);
      } while (std::abs(a * d - b * c) < 0.05);
      m = Mobius{a, b, c, d};
    }
    try {
      const PlanarDomain dst = mobius_image_domain(m, src);
      return MapCase{src, dst, MapExpr(m)};
    } catch (const Error&) {
      // Redraw; the loop stays deterministic in the generator state.
    }
  }
}

MapCase make_map_case(Corpus corpus, std::uint64_t seed, std::uint64_t index) {
  if (corpus == Corpus::Mixed) {
    static constexpr Corpus kCycle[] = {Corpus::HalfPlaneSelfMaps, Corpus::DiskBlaschke,
                                        Corpus::MobiusImages};
    corpus = kCycle[index % 3];
  }
  CounterRng rng(seed, stream_key(fnv1a(corpus_name(corpus)), 0, index));
  switch (corpus) {
    case Corpus::HalfPlaneSelfMaps:
      return MapCase{UpperHalfPlane{}, UpperHalfPlane{}, random_halfplane_self_map(rng)};
    case Corpus::DiskBlaschke:
      return MapCase{UnitDisk{}, UnitDisk{}, random_blaschke(rng)};
    default:
      return random_mobius_case(rng);
  }
}

// ---------------------------------------------------------------------------
// Reports and suites
// ---------------------------------------------------------------------------

std::string to_json(const CheckReport& report) {
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.worst_witness) {
    std::visit(
        [&, &key = key](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Cx>) {
            witness[key] = format_cx(v);
          } else {
            witness[key] = v;
          }
        },
        value);
  }
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["passed"] = report.passed;
  j["worst_margin"] = report.worst_margin;
  j["worst_witness"] = std::move(witness);
  return j.dump();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "identity-halfplane", "identity-disk", "schwarz-pick-halfplane",
      "schwarz-pick-disk",  "step-1-2",      "step-2-2",
      "bound-2-3",          "g-negativity",  "lipschitz-pair"};
  return names;
}

CheckReport run_suite(std::string_view name, const SuiteOptions& options) {
  const std::size_t n = options.samples;
  const std::uint64_t seed = options.seed;
  const unsigned threads = options.threads;
  if (n == 0) throw Error(ErrorCode::DomainError, "suite needs at least one sample");
  const bool automorphisms = options.family == MapFamily::Automorphisms;

  SuiteDef def;
  if (name == "identity-halfplane") {
    def = identity_suite(std::string(name), seed, 10.0, check_identity_halfplane,
                         [](Cx x, Cx y) { return 1.0 + std::norm(x) + std::norm(y); });
  } else if (name == "identity-disk") {
    def = identity_suite(std::string(name), seed, 3.0, check_identity_disk,
                         [](Cx x, Cx y) { return (1.0 + std::norm(x)) * (1.0 + std::norm(y)); });
  } else if (name == "schwarz-pick-halfplane") {
    auto table = suite_cases(name, n, kPairsPerMap, seed, threads, UpperHalfPlane{},
                             random_halfplane_self_map);
    def = automorphisms
              ? pair_suite(std::string(name), 1e-12, MarginConvention::Absolute, table, kPairsPerMap, seed,
                           [](const MapCase& mc, Cx z, Cx w) {
                             return -std::abs(check_schwarz_pick_halfplane(mc.map, z, w));
                           })
              : pair_suite(std::string(name), 1e-12, MarginConvention::Absolute, table, kPairsPerMap, seed,
                           [](const MapCase& mc, Cx z, Cx w) {
                             return check_schwarz_pick_halfplane(mc.map, z, w);
                           });
  } else if (name == "schwarz-pick-disk") {
    auto table = suite_cases(name, n, kPairsPerMap, seed, threads, UnitDisk{},
                             automorphisms ? random_disk_automorphism : random_disk_self_map);
    def = automorphisms
              ? pair_suite(std::string(name), 1e-12, MarginConvention::Absolute, table, kPairsPerMap, seed,
                           [](const MapCase& mc, Cx z, Cx w) {
                             return -std::abs(check_schwarz_pick_disk(mc.map, z, w));
                           })
              : pair_suite(std::string(name), 1e-12, MarginConvention::Absolute, table, kPairsPerMap, seed,
                           [](const MapCase& mc, Cx z, Cx w) {
                             return check_schwarz_pick_disk(mc.map, z, w);
                           });
  } else if (name == "step-1-2") {
    auto table = suite_cases(name, n, kPairsPerMap, seed, threads, UpperHalfPlane{},
                             random_halfplane_self_map);
    def = pair_suite(std::string(name), 1e-10, MarginConvention::Relative, table, kPairsPerMap, seed,
                     [](const MapCase& mc, Cx z, Cx w) {
                       return step_1_2_sides(mc.map, z, w).relative_slack();
                     });
  } else if (name == "step-2-2") {
    auto table = suite_cases(name, n, kPairsPerMap, seed, threads, UnitDisk{}, random_disk_self_map);
    def = pair_suite(std::string(name), 1e-10, MarginConvention::Relative, table, kPairsPerMap, seed,
                     [](const MapCase& mc, Cx z, Cx w) {
                       return step_2_2_sides(mc.map, z, w).relative_slack();
                     });
  } else if (name == "bound-2-3") {
    def = bound_2_3_suite(n, seed, threads);
  } else if (name == "g-negativity") {
    def = g_negativity_suite(seed);
  } else if (name == "lipschitz-pair") {
    const std::size_t blocks = (n + kPairsPerMap - 1) / kPairsPerMap;
    auto table = std::make_shared<const CaseTable>(build_cases(
        blocks, threads, seed, [&](std::size_t b) { return make_map_case(Corpus::Mixed, seed, b); }));
    def = pair_suite(std::string(name), 1e-9, MarginConvention::Absolute, table, kPairsPerMap, seed,
                     ceiling_margin, true);
  } else {
    throw Error(ErrorCode::DomainError, "unknown suite '" + std::string(name) + "'");
  }
  return execute(def, n, seed, threads);
}

CheckReport lipschitz_ceiling(Corpus corpus, std::size_t maps, std::size_t pairs_per_map,
                              std::uint64_t seed, unsigned threads) {
  if (maps == 0 || pairs_per_map == 0) {
    throw Error(ErrorCode::DomainError, "lipschitz ceiling needs maps and pairs");
  }
  auto table = std::make_shared<const CaseTable>(build_cases(
      maps, threads, seed, [&](std::size_t b) { return make_map_case(corpus, seed, b); }));
  const SuiteDef def =
      pair_suite(std::string("lipschitz-ceiling-") + corpus_name(corpus), 1e-9,
                 MarginConvention::Absolute, table, pairs_per_map, seed, ceiling_margin, true);
  return execute(def, maps * pairs_per_map, seed, threads);
}

CheckReport lipschitz_ceiling(const MapCase& map_case, std::size_t pairs, std::uint64_t seed,
                              unsigned threads) {
  if (pairs == 0) throw Error(ErrorCode::DomainError, "lipschitz ceiling needs pairs");
  auto table = std::make_shared<const CaseTable>(
      build_cases(1, threads, seed, [&](std::size_t) { return map_case; }));
  const SuiteDef def = pair_suite("lipschitz-ceiling-case", 1e-9, MarginConvention::Absolute, table,
                                  pairs, seed, ceiling_margin, true);
  return execute(def, pairs, seed, threads);
}

}  // namespace jratio
