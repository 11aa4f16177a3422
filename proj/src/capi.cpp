#include "jratio/jratio.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "jratio/domain.hpp"
#include "jratio/error.hpp"
#include "jratio/maps.hpp"
#include "jratio/search.hpp"
#include "jratio/text.hpp"
#include "jratio/verify.hpp"

struct jr_domain {
  jratio::PlanarDomain value;
};

struct jr_map {
  jratio::MapExpr value;
};

struct jr_check_report {
  jratio::CheckReport value;
  std::string json;
};

struct jr_search_report {
  jratio::SearchReport value;
  std::string json;
};

namespace {

thread_local std::string last_error;

jr_status status_of(jratio::ErrorCode code) noexcept {
  switch (code) {
    case jratio::ErrorCode::PointOutsideDomain: return JR_POINT_OUTSIDE_DOMAIN;
    case jratio::ErrorCode::PoleEncountered: return JR_POLE_ENCOUNTERED;
    case jratio::ErrorCode::DomainError: return JR_DOMAIN_ERROR;
    case jratio::ErrorCode::UnsupportedImage: return JR_UNSUPPORTED_IMAGE;
    case jratio::ErrorCode::CoincidentPoints: return JR_COINCIDENT_POINTS;
    case jratio::ErrorCode::SelfMapViolation: return JR_SELF_MAP_VIOLATION;
    case jratio::ErrorCode::ParseError: return JR_PARSE_ERROR;
  }
  return JR_INTERNAL_ERROR;
}

jr_status fail(jr_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body() and turns every exception into a status with a message.
template <class Body>
jr_status guarded(Body&& body) noexcept {
  try {
    last_error.clear();
    body();
    return JR_OK;
  } catch (const jratio::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(JR_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(JR_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(JR_INTERNAL_ERROR, "unknown failure");
  }
}

jratio::Cx cx(jr_cx z) noexcept { return {z.re, z.im}; }
jr_cx cx(jratio::Cx z) noexcept { return {z.real(), z.imag()}; }

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define JR_REQUIRE(cond)                                              \
  do {                                                                \
    if (!(cond)) return fail(JR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

jratio::SearchConfig to_config(const jr_search_config& c) {
  jratio::SearchConfig cfg;
  cfg.boundary_margin = c.boundary_margin;
  cfg.separation_floor = c.separation_floor;
  cfg.grid_per_axis = c.grid_per_axis;
  cfg.refine_rounds = c.refine_rounds;
  cfg.refine_seeds = c.refine_seeds;
  cfg.shrink_factor = c.shrink_factor;
  cfg.seed = c.seed;
  return cfg;
}

jratio::Corpus to_corpus(jr_corpus c) {
  switch (c) {
    case JR_CORPUS_HALFPLANE: return jratio::Corpus::HalfPlaneSelfMaps;
    case JR_CORPUS_DISK: return jratio::Corpus::DiskBlaschke;
    case JR_CORPUS_MOBIUS: return jratio::Corpus::MobiusImages;
    case JR_CORPUS_MIXED: return jratio::Corpus::Mixed;
  }
  throw jratio::Error(jratio::ErrorCode::DomainError, "unknown corpus");
}

jr_check_report* wrap(jratio::CheckReport r) {
  auto* out = new jr_check_report{std::move(r), {}};
  out->json = jratio::to_json(out->value);
  return out;
}

}  // namespace

extern "C" {

const char* jr_last_error(void) { return last_error.c_str(); }

const char* jr_status_name(jr_status status) {
  switch (status) {
    case JR_OK: return "ok";
    case JR_PARSE_ERROR: return "ParseError";
    case JR_POINT_OUTSIDE_DOMAIN: return "PointOutsideDomain";
    case JR_POLE_ENCOUNTERED: return "PoleEncountered";
    case JR_DOMAIN_ERROR: return "DomainError";
    case JR_UNSUPPORTED_IMAGE: return "UnsupportedImage";
    case JR_COINCIDENT_POINTS: return "CoincidentPoints";
    case JR_SELF_MAP_VIOLATION: return "SelfMapViolation";
    case JR_INVALID_ARGUMENT: return "InvalidArgument";
    case JR_INTERNAL_ERROR: return "InternalError";
  }
  return "unknown";
}

void jr_string_free(char* s) { std::free(s); }

jr_status jr_cx_parse(const char* text, jr_cx* out) {
  JR_REQUIRE(text && out);
  return guarded([&] { *out = cx(jratio::parse_cx(text)); });
}

jr_status jr_cx_format(jr_cx z, int digits, char** out) {
  JR_REQUIRE(out && digits >= 0);
  return guarded([&] {
    *out = duplicate(digits == 0 ? jratio::format_cx(cx(z)) : jratio::format_cx(cx(z), digits));
  });
}

jr_status jr_domain_parse(const char* text, jr_domain** out) {
  JR_REQUIRE(text && out);
  return guarded([&] { *out = new jr_domain{jratio::parse_domain(text)}; });
}

void jr_domain_free(jr_domain* d) { delete d; }

jr_status jr_domain_to_string(const jr_domain* d, char** out) {
  JR_REQUIRE(d && out);
  return guarded([&] { *out = duplicate(jratio::format_domain(d->value)); });
}

jr_status jr_domain_contains(const jr_domain* d, jr_cx z, int* out) {
  JR_REQUIRE(d && out);
  return guarded([&] { *out = jratio::contains(d->value, cx(z)) ? 1 : 0; });
}

jr_status jr_boundary_distance(const jr_domain* d, jr_cx z, double* out) {
  JR_REQUIRE(d && out);
  return guarded([&] { *out = jratio::boundary_distance(d->value, cx(z)); });
}

jr_status jr_j_distance(const jr_domain* d, jr_cx z, jr_cx w, double* out) {
  JR_REQUIRE(d && out);
  return guarded([&] { *out = jratio::j_distance(d->value, cx(z), cx(w)); });
}

jr_status jr_pseudo_hyperbolic_disk(jr_cx z, jr_cx w, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::pseudo_hyperbolic_disk(cx(z), cx(w)); });
}

jr_status jr_pseudo_hyperbolic_halfplane(jr_cx z, jr_cx w, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::pseudo_hyperbolic_halfplane(cx(z), cx(w)); });
}

jr_status jr_map_parse(const char* text, jr_map** out) {
  JR_REQUIRE(text && out);
  return guarded([&] { *out = new jr_map{jratio::parse_map(text)}; });
}

void jr_map_free(jr_map* m) { delete m; }

jr_status jr_map_to_string(const jr_map* m, char** out) {
  JR_REQUIRE(m && out);
  return guarded([&] { *out = duplicate(jratio::format_map(m->value)); });
}

jr_status jr_map_apply(const jr_map* m, jr_cx z, jr_cx* out) {
  JR_REQUIRE(m && out);
  return guarded([&] { *out = cx(jratio::apply(m->value, cx(z))); });
}

jr_status jr_map_derivative(const jr_map* m, jr_cx z, jr_cx* out) {
  JR_REQUIRE(m && out);
  return guarded([&] { *out = cx(jratio::derivative(m->value, cx(z))); });
}

jr_status jr_map_compose(const jr_map* outer, const jr_map* inner, jr_map** out) {
  JR_REQUIRE(outer && inner && out);
  return guarded([&] { *out = new jr_map{jratio::compose(outer->value, inner->value)}; });
}

jr_status jr_mobius_inverse(const jr_map* m, jr_map** out) {
  JR_REQUIRE(m && out);
  const jratio::Mobius* mob = m->value.as_mobius();
  if (!mob) return fail(JR_INVALID_ARGUMENT, "mobius_inverse needs a single mobius map");
  return guarded([&] { *out = new jr_map{jratio::MapExpr(jratio::mobius_inverse(*mob))}; });
}

jr_status jr_mobius_image_domain(const jr_map* m, const jr_domain* d, jr_domain** out) {
  JR_REQUIRE(m && d && out);
  const jratio::Mobius* mob = m->value.as_mobius();
  if (!mob) return fail(JR_INVALID_ARGUMENT, "mobius_image_domain needs a single mobius map");
  return guarded([&] { *out = new jr_domain{jratio::mobius_image_domain(*mob, d->value)}; });
}

jr_status jr_is_self_map(const jr_map* m, const jr_domain* d, size_t samples, uint64_t seed,
                         int* out) {
  JR_REQUIRE(m && d && out);
  return guarded([&] {
    std::string diagnostic;
    *out = jratio::is_self_map_sampled(m->value, d->value, samples, seed, &diagnostic) ? 1 : 0;
    last_error = diagnostic;
  });
}

jr_status jr_check_lipschitz_pair(const jr_domain* src, const jr_domain* dst, const jr_map* m,
                                  jr_cx z, jr_cx w, double* out) {
  JR_REQUIRE(src && dst && m && out);
  return guarded(
      [&] { *out = jratio::check_lipschitz_pair(src->value, dst->value, m->value, cx(z), cx(w)); });
}

jr_status jr_local_distortion(const jr_domain* src, const jr_domain* dst, const jr_map* m, jr_cx z,
                              double* out) {
  JR_REQUIRE(src && m && out);
  return guarded([&] {
    *out = jratio::local_distortion(src->value, dst ? dst->value : src->value, m->value, cx(z));
  });
}

jr_status jr_image_modulus_bound(double a_mod, double r, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::image_modulus_bound(a_mod, r); });
}

jr_status jr_g_threshold(double c, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::g_threshold(c); });
}

jr_status jr_g_threshold_from(double a_mod, double r, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::g_threshold_from(a_mod, r); });
}

jr_status jr_g_value(double c, double x, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::check_g_negativity(c, x); });
}

jr_status jr_cstar_bounds(double a_mod, double* lo, double* hi) {
  JR_REQUIRE(lo && hi);
  return guarded([&] {
    const auto [l, h] = jratio::cstar_bounds(a_mod);
    *lo = l;
    *hi = h;
  });
}

jr_status jr_extremal_ratio(double t, double* out) {
  JR_REQUIRE(out);
  return guarded([&] { *out = jratio::extremal_ratio(t); });
}

jr_status jr_extremal_sweep(const double* ts, size_t count, double a, double b, jr_sweep_row* rows) {
  JR_REQUIRE((ts && rows) || count == 0);
  return guarded([&] {
    const auto table = jratio::extremal_sweep({ts, count}, a, b);
    for (size_t k = 0; k < count; ++k) {
      rows[k] = {table[k].t, table[k].closed_form, table[k].measured, table[k].abs_rel_gap};
    }
  });
}

jr_status jr_extremal_sweep_csv(const double* ts, size_t count, double a, double b, char** out) {
  JR_REQUIRE((ts || count == 0) && out);
  return guarded([&] {
    const auto table = jratio::extremal_sweep({ts, count}, a, b);
    *out = duplicate(jratio::sweep_csv(table));
  });
}

size_t jr_suite_count(void) { return jratio::suite_names().size(); }

const char* jr_suite_name(size_t index) {
  const auto& names = jratio::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

jr_status jr_verify(const char* suite, size_t samples, uint64_t seed, unsigned threads,
                    int automorphisms, jr_check_report** out) {
  JR_REQUIRE(suite && out);
  return guarded([&] {
    jratio::SuiteOptions options;
    options.samples = samples;
    options.seed = seed;
    options.threads = threads;
    options.family = automorphisms ? jratio::MapFamily::Automorphisms : jratio::MapFamily::General;
    *out = wrap(jratio::run_suite(suite, options));
  });
}

jr_status jr_lipschitz_ceiling(jr_corpus corpus, size_t maps, size_t pairs_per_map, uint64_t seed,
                               unsigned threads, jr_check_report** out) {
  JR_REQUIRE(out);
  return guarded([&] {
    *out = wrap(jratio::lipschitz_ceiling(to_corpus(corpus), maps, pairs_per_map, seed, threads));
  });
}

jr_status jr_lipschitz_ceiling_map(const jr_domain* src, const jr_domain* dst, const jr_map* m,
                                   size_t pairs, uint64_t seed, unsigned threads,
                                   jr_check_report** out) {
  JR_REQUIRE(src && m && out);
  return guarded([&] {
    const jratio::MapCase mc{src->value, dst ? dst->value : src->value, m->value};
    *out = wrap(jratio::lipschitz_ceiling(mc, pairs, seed, threads));
  });
}

void jr_check_report_free(jr_check_report* r) { delete r; }
const char* jr_check_report_json(const jr_check_report* r) { return r ? r->json.c_str() : nullptr; }
const char* jr_check_report_suite(const jr_check_report* r) {
  return r ? r->value.suite.c_str() : nullptr;
}
int jr_check_report_passed(const jr_check_report* r) { return r && r->value.passed ? 1 : 0; }
double jr_check_report_worst_margin(const jr_check_report* r) {
  return r ? r->value.worst_margin : 0.0;
}

jr_search_config jr_search_config_default(void) {
  const jratio::SearchConfig d;
  return {d.boundary_margin, d.separation_floor, d.grid_per_axis, d.refine_rounds,
          d.refine_seeds,    d.shrink_factor,    d.seed};
}

jr_status jr_estimate_lipschitz(const jr_domain* src, const jr_domain* dst, const jr_map* m,
                                const jr_search_config* cfg, unsigned threads,
                                jr_search_report** out) {
  JR_REQUIRE(src && m && cfg && out);
  return guarded([&] {
    const jratio::SearchConfig c = to_config(*cfg);
    jratio::SearchReport r = dst ? jratio::estimate_lipschitz(src->value, dst->value, m->value, c, threads)
                                 : jratio::estimate_lipschitz(src->value, m->value, c, threads);
    auto* report = new jr_search_report{std::move(r), {}};
    report->json = jratio::to_json(report->value);
    *out = report;
  });
}

void jr_search_report_free(jr_search_report* r) { delete r; }
const char* jr_search_report_json(const jr_search_report* r) {
  return r ? r->json.c_str() : nullptr;
}
double jr_search_report_best_ratio(const jr_search_report* r) {
  return r ? r->value.best_ratio : 0.0;
}
jr_cx jr_search_report_witness_z(const jr_search_report* r) {
  return r ? cx(r->value.witness_z) : jr_cx{0.0, 0.0};
}
jr_cx jr_search_report_witness_w(const jr_search_report* r) {
  return r ? cx(r->value.witness_w) : jr_cx{0.0, 0.0};
}
int jr_search_report_cstar_interval(const jr_search_report* r, double* lo, double* hi) {
  if (!r || !r->value.cstar_interval) return 0;
  if (lo) *lo = r->value.cstar_interval->first;
  if (hi) *hi = r->value.cstar_interval->second;
  return 1;
}

}  // extern "C"
