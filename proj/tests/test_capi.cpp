// Exercises the shared library through its C surface only.

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "jratio/jratio.h"
#include "json.hpp"

namespace {

struct Domain {
  jr_domain* p = nullptr;
  explicit Domain(const char* text) { REQUIRE(jr_domain_parse(text, &p) == JR_OK); }
  ~Domain() { jr_domain_free(p); }
};

struct Map {
  jr_map* p = nullptr;
  Map() = default;
  explicit Map(const char* text) { REQUIRE(jr_map_parse(text, &p) == JR_OK); }
  ~Map() { jr_map_free(p); }
};

std::string take(char* s) {
  std::string out = s;
  jr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status names and error text") {
  CHECK(std::strcmp(jr_status_name(JR_OK), "ok") == 0);
  CHECK(std::strcmp(jr_status_name(JR_POLE_ENCOUNTERED), "PoleEncountered") == 0);
  jr_cx z;
  CHECK(jr_cx_parse("1+", &z) == JR_PARSE_ERROR);
  CHECK(std::string(jr_last_error()).find("position 2") != std::string::npos);
  CHECK(jr_cx_parse(nullptr, &z) == JR_INVALID_ARGUMENT);
  CHECK(jr_cx_parse("1+2i", nullptr) == JR_INVALID_ARGUMENT);
}

TEST_CASE("complex numbers cross the boundary") {
  jr_cx z;
  REQUIRE(jr_cx_parse("-0.5+2i", &z) == JR_OK);
  CHECK((z.re == -0.5 && z.im == 2.0));
  char* s = nullptr;
  REQUIRE(jr_cx_format(jr_cx{0.1, -3.0}, 0, &s) == JR_OK);
  CHECK(take(s) == "0.1-3i");
  REQUIRE(jr_cx_format(jr_cx{std::log(3.0), 0.0}, 9, &s) == JR_OK);
  CHECK(take(s) == "1.09861229+0i");
}

TEST_CASE("domains and the j metric") {
  Domain disk("unitdisk");
  double j = 0.0;
  REQUIRE(jr_j_distance(disk.p, jr_cx{0.5, 0.0}, jr_cx{-0.5, 0.0}, &j) == JR_OK);
  CHECK(j == doctest::Approx(1.0986122886681097).epsilon(1e-15));
  CHECK(jr_j_distance(disk.p, jr_cx{2.0, 0.0}, jr_cx{0.0, 0.0}, &j) == JR_POINT_OUTSIDE_DOMAIN);
  int inside = -1;
  REQUIRE(jr_domain_contains(disk.p, jr_cx{1.0, 0.0}, &inside) == JR_OK);
  CHECK(inside == 0);
  double d = 0.0;
  REQUIRE(jr_boundary_distance(disk.p, jr_cx{0.25, 0.0}, &d) == JR_OK);
  CHECK(d == 0.75);
  Domain generic("halfplane:0.6,0.8,-1.5");
  char* s = nullptr;
  REQUIRE(jr_domain_to_string(generic.p, &s) == JR_OK);
  CHECK(take(s) == "halfplane:0.6,0.8,-1.5");
  double rho = 0.0;
  REQUIRE(jr_pseudo_hyperbolic_halfplane(jr_cx{0.0, 1.0}, jr_cx{0.0, 2.0}, &rho) == JR_OK);
  CHECK(rho == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  REQUIRE(jr_pseudo_hyperbolic_disk(jr_cx{0.0, 0.0}, jr_cx{0.5, 0.0}, &rho) == JR_OK);
  CHECK(rho == doctest::Approx(0.5).epsilon(1e-15));
  jr_domain* bad = nullptr;
  CHECK(jr_domain_parse("disk:0,0,-1", &bad) == JR_PARSE_ERROR);
  CHECK(bad == nullptr);
}

TEST_CASE("maps") {
  Map b("blaschke:0.3;[0.2+0.1i,-0.4i]");
  jr_cx fz, dfz;
  REQUIRE(jr_map_apply(b.p, jr_cx{0.3, 0.2}, &fz) == JR_OK);
  CHECK(fz.re == doctest::Approx(-0.064212335029674664).epsilon(1e-14));
  CHECK(fz.im == doctest::Approx(0.069863102394062661).epsilon(1e-14));
  REQUIRE(jr_map_derivative(b.p, jr_cx{0.3, 0.2}, &dfz) == JR_OK);
  CHECK(dfz.im == doctest::Approx(0.79833218728737096).epsilon(1e-14));

  Map pole("extremal:0,2");
  CHECK(jr_map_apply(pole.p, jr_cx{-2.0, 0.0}, &fz) == JR_POLE_ENCOUNTERED);

  Map cayley("mobius:1,-i,1,i"), inv;
  REQUIRE(jr_mobius_inverse(cayley.p, &inv.p) == JR_OK);
  CHECK(jr_mobius_inverse(b.p, &inv.p) == JR_INVALID_ARGUMENT);
  Map round;
  REQUIRE(jr_map_compose(inv.p, cayley.p, &round.p) == JR_OK);
  REQUIRE(jr_map_apply(round.p, jr_cx{0.3, 2.0}, &fz) == JR_OK);
  CHECK(fz.re == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(fz.im == doctest::Approx(2.0).epsilon(1e-14));

  Domain uhp("upperhalfplane");
  jr_domain* image = nullptr;
  REQUIRE(jr_mobius_image_domain(cayley.p, uhp.p, &image) == JR_OK);
  char* s = nullptr;
  REQUIRE(jr_domain_to_string(image, &s) == JR_OK);
  CHECK(take(s) == "unitdisk");
  jr_domain_free(image);

  int self = -1;
  REQUIRE(jr_is_self_map(cayley.p, uhp.p, 100, 1, &self) == JR_OK);
  CHECK(self == 0);
  Map ext("extremal:0,0");
  REQUIRE(jr_is_self_map(ext.p, uhp.p, 100, 1, &self) == JR_OK);
  CHECK(self == 1);
  REQUIRE(jr_map_to_string(ext.p, &s) == JR_OK);
  CHECK(take(s) == "extremal:0,0");
}

TEST_CASE("bounds and the extremal family") {
  double x = 0.0, lo = 0.0, hi = 0.0;
  REQUIRE(jr_g_threshold(0.6, &x) == JR_OK);
  CHECK(x == doctest::Approx(4.0).epsilon(1e-14));
  REQUIRE(jr_g_threshold_from(0.5, 0.5, &x) == JR_OK);
  CHECK(x == doctest::Approx(4.0).epsilon(1e-14));
  REQUIRE(jr_g_value(0.6, 2.0, &x) == JR_OK);
  CHECK(x == doctest::Approx(-0.23795006481866912).epsilon(1e-14));
  CHECK(jr_g_threshold(0.2, &x) == JR_DOMAIN_ERROR);
  REQUIRE(jr_image_modulus_bound(0.5, 0.5, &x) == JR_OK);
  CHECK(x == doctest::Approx(0.8).epsilon(1e-15));
  REQUIRE(jr_cstar_bounds(0.5, &lo, &hi) == JR_OK);
  CHECK((lo == 1.5 && hi == 2.0));
  REQUIRE(jr_extremal_ratio(10.0, &x) == JR_OK);
  CHECK(x == doctest::Approx(1.9267090588732655).epsilon(1e-14));

  const double ts[] = {1.0, 10.0, 100.0};
  jr_sweep_row rows[3];
  REQUIRE(jr_extremal_sweep(ts, 3, -2.0, 3.0, rows) == JR_OK);
  for (const jr_sweep_row& r : rows) CHECK(r.abs_rel_gap <= 1e-9);
  char* csv = nullptr;
  REQUIRE(jr_extremal_sweep_csv(ts, 3, 0.0, 0.0, &csv) == JR_OK);
  CHECK(take(csv).rfind("t,closed_form,measured,abs_rel_gap\n", 0) == 0);
  CHECK(jr_extremal_sweep(ts, 3, 0.0, 0.0, nullptr) == JR_INVALID_ARGUMENT);
}

TEST_CASE("local distortion and pair ratios") {
  Domain disk("unitdisk");
  Map sigma("blaschke:0;[0.5]");
  double v = 0.0;
  REQUIRE(jr_local_distortion(disk.p, nullptr, sigma.p, jr_cx{0.0, 0.0}, &v) == JR_OK);
  CHECK(v == doctest::Approx(1.5).epsilon(1e-15));
  Map square("blaschke:0;[0,0]");
  REQUIRE(jr_check_lipschitz_pair(disk.p, disk.p, square.p, jr_cx{0.5, 0.0}, jr_cx{0.0, 0.0}, &v) == JR_OK);
  CHECK(v == doctest::Approx(0.41503749927884382).epsilon(1e-14));
  CHECK(jr_check_lipschitz_pair(disk.p, disk.p, square.p, jr_cx{0.5, 0.0}, jr_cx{0.5, 0.0}, &v) ==
        JR_COINCIDENT_POINTS);
}

TEST_CASE("verification suites") {
  REQUIRE(jr_suite_count() == 9);
  CHECK(jr_suite_name(9) == nullptr);
  for (std::size_t k = 0; k < jr_suite_count(); ++k) {
    jr_check_report* r = nullptr;
    REQUIRE(jr_verify(jr_suite_name(k), 500, 42, 2, 0, &r) == JR_OK);
    CHECK(jr_check_report_passed(r) == 1);
    CHECK(std::string(jr_check_report_suite(r)) == jr_suite_name(k));
    const auto j = nlohmann::json::parse(jr_check_report_json(r));
    CHECK(j["samples"] == 500);
    CHECK(j["worst_margin"].get<double>() == jr_check_report_worst_margin(r));
    jr_check_report_free(r);
  }
  jr_check_report* r = nullptr;
  CHECK(jr_verify("missing", 10, 1, 1, 0, &r) == JR_DOMAIN_ERROR);
  CHECK(r == nullptr);
  REQUIRE(jr_verify("schwarz-pick-disk", 2000, 3, 2, 1, &r) == JR_OK);
  CHECK(jr_check_report_passed(r) == 1);
  jr_check_report_free(r);

  REQUIRE(jr_lipschitz_ceiling(JR_CORPUS_MIXED, 8, 200, 42, 2, &r) == JR_OK);
  CHECK(jr_check_report_passed(r) == 1);
  jr_check_report_free(r);

  Domain uhp("upperhalfplane");
  Domain disk("unitdisk");
  Map cayley("mobius:1,-i,1,i");
  REQUIRE(jr_lipschitz_ceiling_map(uhp.p, disk.p, cayley.p, 1000, 42, 2, &r) == JR_OK);
  CHECK(jr_check_report_passed(r) == 1);
  jr_check_report_free(r);
}

TEST_CASE("lipschitz search") {
  Domain disk("unitdisk");
  Map sigma("blaschke:0;[0.5]");
  jr_search_config cfg = jr_search_config_default();
  CHECK(cfg.grid_per_axis == 24);
  jr_search_report* r = nullptr;
  REQUIRE(jr_estimate_lipschitz(disk.p, nullptr, sigma.p, &cfg, 2, &r) == JR_OK);
  CHECK(jr_search_report_best_ratio(r) >= 1.499);
  double lo = 0.0, hi = 0.0;
  CHECK(jr_search_report_cstar_interval(r, &lo, &hi) == 1);
  CHECK((lo == 1.5 && hi == 2.0));
  const jr_cx z = jr_search_report_witness_z(r), w = jr_search_report_witness_w(r);
  double ratio = 0.0;
  REQUIRE(jr_check_lipschitz_pair(disk.p, disk.p, sigma.p, z, w, &ratio) == JR_OK);
  CHECK(ratio == doctest::Approx(jr_search_report_best_ratio(r)).epsilon(1e-15));
  const std::string json = jr_search_report_json(r);
  jr_search_report_free(r);
  REQUIRE(jr_estimate_lipschitz(disk.p, nullptr, sigma.p, &cfg, 1, &r) == JR_OK);
  CHECK(json == jr_search_report_json(r));
  jr_search_report_free(r);

  Map ext("extremal:0,0");
  CHECK(jr_estimate_lipschitz(disk.p, nullptr, ext.p, &cfg, 1, &r) == JR_SELF_MAP_VIOLATION);
  cfg.shrink_factor = 2.0;
  CHECK(jr_estimate_lipschitz(disk.p, nullptr, sigma.p, &cfg, 1, &r) == JR_DOMAIN_ERROR);
  CHECK(jr_estimate_lipschitz(disk.p, nullptr, sigma.p, nullptr, 1, &r) == JR_INVALID_ARGUMENT);
}
