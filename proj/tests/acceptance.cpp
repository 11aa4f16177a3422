// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and runtime budgets are fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "jratio/search.hpp"
#include "jratio/verify.hpp"

using namespace jratio;

namespace {

constexpr double kCeilingTol = 1e-9;
constexpr double kSchwarzPickTol = 1e-12;
constexpr double kChainTol = 1e-10;
constexpr double kThresholdAgreement = 1e-12;
constexpr double kSweepTol = 1e-9;
constexpr double kMonotoneJitter = 1e-12;
constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string exact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string suite_line(const CheckReport& r) {
  return r.suite + " worst " + num(r.worst_margin);
}

SuiteOptions suite(std::size_t samples, MapFamily family = MapFamily::General, unsigned threads = 0) {
  SuiteOptions o;
  o.samples = samples;
  o.seed = kSeed;
  o.threads = threads;
  o.family = family;
  return o;
}

// Max ratio over a ceiling report, whose margin is 2 - ratio.
double max_ratio(const CheckReport& r) { return 2.0 - r.worst_margin; }

std::string ceiling_json(Corpus corpus, unsigned threads) {
  return to_json(lipschitz_ceiling(corpus, 200, 10000, kSeed, threads));
}

SearchReport blaschke_search(unsigned threads) {
  return estimate_lipschitz(UnitDisk{}, Blaschke{0.0, {0.5}}, SearchConfig{}, threads);
}

Outcome ceiling(Corpus corpus) {
  Outcome o;
  const CheckReport r = lipschitz_ceiling(corpus, 200, 10000, kSeed);
  o.require(r.passed, "report failed");
  o.require(max_ratio(r) <= 2.0 + kCeilingTol, "ratio " + num(max_ratio(r)) + " above 2");
  o.detail = "max ratio " + num(max_ratio(r)) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome sharpness() {
  Outcome o;
  const double at = extremal_ratio(1e6);
  o.require(at >= 2.0 - 1e-6, "extremal_ratio(1e6) = " + num(at));
  double previous = extremal_ratio(1.0);
  for (int k = 1; k <= 20; ++k) {
    const double v = extremal_ratio(std::ldexp(1.0, k));
    o.require(v >= previous - kMonotoneJitter, "decrease at 2^" + std::to_string(k));
    previous = v;
  }
  o.detail = "extremal_ratio(1e6) = " + exact(at) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome sweep() {
  Outcome o;
  std::vector<double> ts;
  for (int k = -20; k <= 40; ++k) ts.push_back(std::pow(10.0, k / 10.0));
  double worst = 0.0;
  for (const auto& [a, b] : {std::pair{0.0, 0.0}, std::pair{1.0, 1.0}, std::pair{-2.0, 3.0}}) {
    for (const SweepRow& row : extremal_sweep(ts, a, b)) worst = std::max(worst, row.abs_rel_gap);
  }
  o.require(worst <= kSweepTol, "gap too large");
  o.detail = std::to_string(ts.size()) + " t values x 3 (a,b); worst gap " + num(worst);
  return o;
}

Outcome schwarz_pick() {
  Outcome o;
  for (const char* name : {"schwarz-pick-halfplane", "schwarz-pick-disk"}) {
    const CheckReport general = run_suite(name, suite(100000));
    o.require(general.passed && general.worst_margin >= -kSchwarzPickTol, suite_line(general));
    // The automorphism report scores -|slack|.
    const CheckReport equality = run_suite(name, suite(100000, MapFamily::Automorphisms));
    o.require(equality.passed && equality.worst_margin >= -kSchwarzPickTol, "equality " + suite_line(equality));
    o.detail += std::string(o.detail.empty() ? "" : ", ") + suite_line(general) + " / automorphisms " +
                num(equality.worst_margin);
  }
  return o;
}

Outcome identities() {
  Outcome o;
  for (const char* name : {"identity-halfplane", "identity-disk"}) {
    const CheckReport r = run_suite(name, suite(100000));
    o.require(r.passed && r.worst_margin >= -kChainTol, suite_line(r));
    o.detail += std::string(o.detail.empty() ? "" : ", ") + suite_line(r);
  }
  return o;
}

Outcome proof_chain() {
  Outcome o;
  std::string lines;
  for (const char* name : {"step-1-2", "step-2-2", "bound-2-3"}) {
    const CheckReport r = run_suite(name, suite(100000));
    o.require(r.passed && r.worst_margin >= -kChainTol, suite_line(r));
    lines += std::string(lines.empty() ? "" : ", ") + suite_line(r);
  }
  const CheckReport g = run_suite("g-negativity", suite(100000));
  o.require(g.passed, suite_line(g));
  lines += ", " + suite_line(g);

  const double c_form = g_threshold(0.6), ar_form = g_threshold_from(0.5, 0.5);
  o.require(std::abs(c_form - 4.0) <= kThresholdAgreement * 4.0, "T(0.6) = " + num(c_form));
  o.require(std::abs(ar_form - 4.0) <= kThresholdAgreement * 4.0, "T(0.5, 0.5) = " + num(ar_form));
  double worst = 0.0;
  for (int p = 1; p <= 99; ++p) {
    for (int q = 0; q <= 95; ++q) {
      const double a = p / 100.0, r = q / 100.0;
      const double t1 = g_threshold(disk_contraction_constant(a, r)), t2 = g_threshold_from(a, r);
      worst = std::max(worst, std::abs(t1 - t2) / t2);
    }
  }
  o.require(worst <= kThresholdAgreement, "T forms disagree by " + num(worst));
  o.detail = lines + "; T(0.6) = " + num(c_form) + ", forms agree to " + num(worst) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome search_lower_bound() {
  Outcome o;
  const SearchReport r = blaschke_search(0);
  o.require(r.best_ratio >= 1.499, "best ratio " + num(r.best_ratio));
  o.require(r.cstar_interval && r.cstar_interval->first == 1.5 && r.cstar_interval->second == 2.0,
            "cstar interval missing or wrong");
  o.detail = "best ratio " + exact(r.best_ratio) + ", cstar_interval (1.5, 2)" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome planar_mobius() {
  Outcome o;
  const MapCase cayley{UpperHalfPlane{}, mobius_image_domain(Mobius::cayley(), UpperHalfPlane{}),
                       Mobius::cayley()};
  const CheckReport c = lipschitz_ceiling(cayley, 10000, kSeed);
  o.require(c.passed && max_ratio(c) <= 2.0 + kCeilingTol, "cayley ratio " + num(max_ratio(c)));
  const CheckReport m = lipschitz_ceiling(Corpus::MobiusImages, 50, 10000, kSeed);
  o.require(m.passed && max_ratio(m) <= 2.0 + kCeilingTol, "mobius ratio " + num(max_ratio(m)));
  o.detail = "cayley max " + num(max_ratio(c)) + ", 50 maps max " + num(max_ratio(m)) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome determinism() {
  Outcome o;
  const unsigned counts[] = {1, 2, 4};
  for (Corpus corpus : {Corpus::HalfPlaneSelfMaps, Corpus::DiskBlaschke}) {
    const std::string base = ceiling_json(corpus, counts[0]);
    for (unsigned t : {counts[1], counts[2]}) {
      o.require(ceiling_json(corpus, t) == base, "ceiling report differs at " + std::to_string(t) + " threads");
    }
  }
  const std::string base = to_json(blaschke_search(counts[0]));
  for (unsigned t : {counts[1], counts[2]}) {
    o.require(to_json(blaschke_search(t)) == base, "search report differs at " + std::to_string(t) + " threads");
  }
  o.detail = "criteria 1, 2, 8 at 1, 2, 4 threads" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "half-plane self-map ceiling", 60, [] { return ceiling(Corpus::HalfPlaneSelfMaps); }},
      {2, "disk Blaschke ceiling", 60, [] { return ceiling(Corpus::DiskBlaschke); }},
      {3, "extremal sharpness", 1, sharpness},
      {4, "extremal sweep cross-validation", 1, sweep},
      {5, "Schwarz-Pick suites", 30, schwarz_pick},
      {6, "identity suites", 5, identities},
      {7, "proof-chain suites", 30, proof_chain},
      {8, "search lower bound", 120, search_lower_bound},
      {9, "planar Mobius ceiling", 30, planar_mobius},
      {10, "thread-count determinism", 600, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_s) {
      o.ok = false;
      o.detail += "; over the " + num(c.budget_s) + " s budget";
    }
    if (!o.ok) ++failures;
    std::printf("%s  %2d  %-32s %8.3f s  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
