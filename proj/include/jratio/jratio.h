#ifndef JRATIO_JRATIO_H
#define JRATIO_JRATIO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JRATIO_BUILDING_LIBRARY)
#    define JRATIO_API __declspec(dllexport)
#  else
#    define JRATIO_API __declspec(dllimport)
#  endif
#else
#  define JRATIO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jr_status {
  JR_OK = 0,
  JR_PARSE_ERROR,
  JR_POINT_OUTSIDE_DOMAIN,
  JR_POLE_ENCOUNTERED,
  JR_DOMAIN_ERROR,
  JR_UNSUPPORTED_IMAGE,
  JR_COINCIDENT_POINTS,
  JR_SELF_MAP_VIOLATION,
  JR_INVALID_ARGUMENT,
  JR_INTERNAL_ERROR
} jr_status;

typedef struct jr_cx {
  double re;
  double im;
} jr_cx;

typedef struct jr_domain jr_domain;
typedef struct jr_map jr_map;
typedef struct jr_check_report jr_check_report;
typedef struct jr_search_report jr_search_report;

/* Message of the last failure on the calling thread; empty after success. */
JRATIO_API const char* jr_last_error(void);
JRATIO_API const char* jr_status_name(jr_status status);

/* Strings returned through char** are owned by the caller. */
JRATIO_API void jr_string_free(char* s);

JRATIO_API jr_status jr_cx_parse(const char* text, jr_cx* out);
/* digits == 0 selects the shortest round-trip form. */
JRATIO_API jr_status jr_cx_format(jr_cx z, int digits, char** out);

/* Domains */
JRATIO_API jr_status jr_domain_parse(const char* text, jr_domain** out);
JRATIO_API void jr_domain_free(jr_domain* d);
JRATIO_API jr_status jr_domain_to_string(const jr_domain* d, char** out);
JRATIO_API jr_status jr_domain_contains(const jr_domain* d, jr_cx z, int* out);
JRATIO_API jr_status jr_boundary_distance(const jr_domain* d, jr_cx z, double* out);
JRATIO_API jr_status jr_j_distance(const jr_domain* d, jr_cx z, jr_cx w, double* out);
JRATIO_API jr_status jr_pseudo_hyperbolic_disk(jr_cx z, jr_cx w, double* out);
JRATIO_API jr_status jr_pseudo_hyperbolic_halfplane(jr_cx z, jr_cx w, double* out);

/* Maps */
JRATIO_API jr_status jr_map_parse(const char* text, jr_map** out);
JRATIO_API void jr_map_free(jr_map* m);
JRATIO_API jr_status jr_map_to_string(const jr_map* m, char** out);
JRATIO_API jr_status jr_map_apply(const jr_map* m, jr_cx z, jr_cx* out);
JRATIO_API jr_status jr_map_derivative(const jr_map* m, jr_cx z, jr_cx* out);
/* outer o inner */
JRATIO_API jr_status jr_map_compose(const jr_map* outer, const jr_map* inner, jr_map** out);
/* JR_INVALID_ARGUMENT unless m is a single Möbius map. */
JRATIO_API jr_status jr_mobius_inverse(const jr_map* m, jr_map** out);
JRATIO_API jr_status jr_mobius_image_domain(const jr_map* m, const jr_domain* d, jr_domain** out);
JRATIO_API jr_status jr_is_self_map(const jr_map* m, const jr_domain* d, size_t samples,
                                    uint64_t seed, int* out);

/* Checks and bounds */
JRATIO_API jr_status jr_check_lipschitz_pair(const jr_domain* src, const jr_domain* dst,
                                             const jr_map* m, jr_cx z, jr_cx w, double* out);
/* dst may be NULL, meaning dst = src. */
JRATIO_API jr_status jr_local_distortion(const jr_domain* src, const jr_domain* dst,
                                         const jr_map* m, jr_cx z, double* out);
JRATIO_API jr_status jr_image_modulus_bound(double a_mod, double r, double* out);
JRATIO_API jr_status jr_g_threshold(double c, double* out);
JRATIO_API jr_status jr_g_threshold_from(double a_mod, double r, double* out);
JRATIO_API jr_status jr_g_value(double c, double x, double* out);
JRATIO_API jr_status jr_cstar_bounds(double a_mod, double* lo, double* hi);
JRATIO_API jr_status jr_extremal_ratio(double t, double* out);

typedef struct jr_sweep_row {
  double t;
  double closed_form;
  double measured;
  double abs_rel_gap;
} jr_sweep_row;

/* Fills rows[0..count). */
JRATIO_API jr_status jr_extremal_sweep(const double* ts, size_t count, double a, double b,
                                       jr_sweep_row* rows);
JRATIO_API jr_status jr_extremal_sweep_csv(const double* ts, size_t count, double a, double b,
                                           char** out);

/* Verification suites */
JRATIO_API size_t jr_suite_count(void);
/* NULL past the end. */
JRATIO_API const char* jr_suite_name(size_t index);
/* automorphisms != 0 restricts the Schwarz-Pick suites to their equality case.
   threads == 0 uses every hardware thread. */
JRATIO_API jr_status jr_verify(const char* suite, size_t samples, uint64_t seed, unsigned threads,
                               int automorphisms, jr_check_report** out);

typedef enum jr_corpus {
  JR_CORPUS_HALFPLANE = 0,
  JR_CORPUS_DISK,
  JR_CORPUS_MOBIUS,
  JR_CORPUS_MIXED
} jr_corpus;

/* Ratio ceiling 2 over maps x pairs_per_map draws from a seeded corpus. */
JRATIO_API jr_status jr_lipschitz_ceiling(jr_corpus corpus, size_t maps, size_t pairs_per_map,
                                          uint64_t seed, unsigned threads, jr_check_report** out);
/* The same for one fixed map; dst may be NULL for dst = src. */
JRATIO_API jr_status jr_lipschitz_ceiling_map(const jr_domain* src, const jr_domain* dst,
                                              const jr_map* m, size_t pairs, uint64_t seed,
                                              unsigned threads, jr_check_report** out);

JRATIO_API void jr_check_report_free(jr_check_report* r);
JRATIO_API const char* jr_check_report_json(const jr_check_report* r);
JRATIO_API const char* jr_check_report_suite(const jr_check_report* r);
JRATIO_API int jr_check_report_passed(const jr_check_report* r);
JRATIO_API double jr_check_report_worst_margin(const jr_check_report* r);

/* Lipschitz search */
typedef struct jr_search_config {
  double boundary_margin;
  double separation_floor;
  size_t grid_per_axis;
  size_t refine_rounds;
  size_t refine_seeds;
  double shrink_factor;
  uint64_t seed;
} jr_search_config;

JRATIO_API jr_search_config jr_search_config_default(void);
/* dst may be NULL: the map is then certified on src, falling back to the
   Möbius image domain. */
JRATIO_API jr_status jr_estimate_lipschitz(const jr_domain* src, const jr_domain* dst,
                                           const jr_map* m, const jr_search_config* cfg,
                                           unsigned threads, jr_search_report** out);
JRATIO_API void jr_search_report_free(jr_search_report* r);
JRATIO_API const char* jr_search_report_json(const jr_search_report* r);
JRATIO_API double jr_search_report_best_ratio(const jr_search_report* r);
JRATIO_API jr_cx jr_search_report_witness_z(const jr_search_report* r);
JRATIO_API jr_cx jr_search_report_witness_w(const jr_search_report* r);
/* Returns 0 when the report carries no interval. */
JRATIO_API int jr_search_report_cstar_interval(const jr_search_report* r, double* lo, double* hi);

#ifdef __cplusplus
}
#endif

#endif
