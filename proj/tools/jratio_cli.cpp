// Batch front end over the jratio C API.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "jratio/jratio.h"

namespace {

enum Exit { kOk = 0, kFailedSuite = 1, kUsage = 2, kMath = 3 };

struct Failure {
  jr_status status;
  std::string message;
};

int exit_code(jr_status s) {
  switch (s) {
    case JR_OK: return kOk;
    case JR_PARSE_ERROR:
    case JR_INVALID_ARGUMENT: return kUsage;
    default: return kMath;
  }
}

void check(jr_status s) {
  if (s != JR_OK) throw Failure{s, jr_last_error()};
}

struct DomainDeleter {
  void operator()(jr_domain* d) const { jr_domain_free(d); }
};
struct MapDeleter {
  void operator()(jr_map* m) const { jr_map_free(m); }
};
struct CheckDeleter {
  void operator()(jr_check_report* r) const { jr_check_report_free(r); }
};
struct SearchDeleter {
  void operator()(jr_search_report* r) const { jr_search_report_free(r); }
};
using Domain = std::unique_ptr<jr_domain, DomainDeleter>;
using Map = std::unique_ptr<jr_map, MapDeleter>;

Domain domain(const std::string& text) {
  jr_domain* d = nullptr;
  check(jr_domain_parse(text.c_str(), &d));
  return Domain(d);
}

Map map(const std::string& text) {
  jr_map* m = nullptr;
  check(jr_map_parse(text.c_str(), &m));
  return Map(m);
}

jr_cx point(const std::string& text) {
  jr_cx z{};
  check(jr_cx_parse(text.c_str(), &z));
  return z;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  jr_string_free(s);
  return out;
}

std::string cx_text(jr_cx z, int digits) {
  char* s = nullptr;
  check(jr_cx_format(z, digits, &s));
  return take(s);
}

std::string domain_text(const jr_domain* d) {
  char* s = nullptr;
  check(jr_domain_to_string(d, &s));
  return take(s);
}

std::string plain(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

std::string exact(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

struct Options {
  std::string domain, dst_domain, map, z, w, suite = "all", output, config;
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  std::vector<double> t;
  std::optional<double> a;
  double b = 0.0;
  std::optional<std::size_t> grid, rounds;
  std::optional<double> margin, separation;
  unsigned threads = 0;
};

[[noreturn]] void usage(const std::string& message) { throw Failure{JR_INVALID_ARGUMENT, message}; }

void require(const std::string& value, const char* flag, const std::string& command) {
  if (value.empty()) usage(command + " needs " + flag);
}

int run_dist(const Options& o, const std::string& fmt) {
  require(o.domain, "--domain", "dist");
  require(o.z, "--z", "dist");
  require(o.w, "--w", "dist");
  const Domain d = domain(o.domain);
  const jr_cx z = point(o.z), w = point(o.w);
  double j = 0.0;
  check(jr_j_distance(d.get(), z, w, &j));
  if (fmt == "json") {
    nlohmann::ordered_json out;
    out["domain"] = domain_text(d.get());
    out["z"] = cx_text(z, 0);
    out["w"] = cx_text(w, 0);
    out["j"] = j;
    std::cout << out.dump() << '\n';
  } else if (fmt == "csv") {
    std::cout << "domain,z,w,j\n"
              << domain_text(d.get()) << ',' << cx_text(z, 0) << ',' << cx_text(w, 0) << ','
              << exact(j) << '\n';
  } else {
    std::cout << plain(j) << '\n';
  }
  return kOk;
}

int run_map_eval(const Options& o, const std::string& fmt) {
  require(o.map, "--map", "map-eval");
  require(o.z, "--z", "map-eval");
  const Map m = map(o.map);
  const jr_cx z = point(o.z);
  Domain d;
  if (!o.domain.empty()) d = domain(o.domain);
  jr_cx value{}, slope{};
  check(jr_map_apply(m.get(), z, &value));
  check(jr_map_derivative(m.get(), z, &slope));
  std::optional<std::string> image;
  if (d && o.dst_domain.empty()) {
    jr_domain* img = nullptr;
    const jr_status s = jr_mobius_image_domain(m.get(), d.get(), &img);
    if (s == JR_OK) {
      image = domain_text(img);
      jr_domain_free(img);
    } else if (s != JR_INVALID_ARGUMENT && s != JR_UNSUPPORTED_IMAGE) {
      check(s);
    }
  }
  if (fmt == "json") {
    nlohmann::ordered_json out;
    out["z"] = cx_text(z, 0);
    out["value"] = cx_text(value, 0);
    out["derivative"] = cx_text(slope, 0);
    if (image) out["image_domain"] = *image;
    std::cout << out.dump() << '\n';
  } else if (fmt == "csv") {
    std::cout << "z,value,derivative" << (image ? ",image_domain" : "") << '\n'
              << cx_text(z, 0) << ',' << cx_text(value, 0) << ',' << cx_text(slope, 0);
    if (image) std::cout << ',' << *image;
    std::cout << '\n';
  } else {
    std::cout << "value " << cx_text(value, 9) << '\n' << "derivative " << cx_text(slope, 9) << '\n';
    if (image) std::cout << "image_domain " << *image << '\n';
  }
  return kOk;
}

int run_verify(const Options& o, const std::string& fmt) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    for (std::size_t k = 0; k < jr_suite_count(); ++k) suites.emplace_back(jr_suite_name(k));
  } else {
    bool known = false;
    for (std::size_t k = 0; k < jr_suite_count(); ++k) known = known || o.suite == jr_suite_name(k);
    if (!known) usage("unknown suite '" + o.suite + "'");
    suites.push_back(o.suite);
  }
  if (o.samples == 0) usage("--samples must be positive");
  bool all_passed = true;
  if (fmt == "csv") std::cout << "suite,samples,seed,passed,worst_margin\n";
  for (const std::string& name : suites) {
    jr_check_report* raw = nullptr;
    check(jr_verify(name.c_str(), o.samples, o.seed, o.threads, 0, &raw));
    const std::unique_ptr<jr_check_report, CheckDeleter> r(raw);
    const bool passed = jr_check_report_passed(r.get()) != 0;
    all_passed = all_passed && passed;
    const double margin = jr_check_report_worst_margin(r.get());
    if (fmt == "json") {
      std::cout << jr_check_report_json(r.get()) << '\n';
    } else if (fmt == "csv") {
      std::cout << name << ',' << o.samples << ',' << o.seed << ',' << (passed ? "true" : "false") << ','
                << exact(margin) << '\n';
    } else {
      std::cout << name << ' ' << (passed ? "passed" : "FAILED") << " worst_margin " << plain(margin)
                << '\n';
    }
  }
  return all_passed ? kOk : kFailedSuite;
}

int run_search(const Options& o, const std::string& fmt) {
  require(o.map, "--map", "search");
  const Domain src = domain(o.domain.empty() ? "unitdisk" : o.domain);
  Domain dst;
  if (!o.dst_domain.empty()) dst = domain(o.dst_domain);
  const Map m = map(o.map);
  jr_search_config cfg = jr_search_config_default();
  if (o.grid) cfg.grid_per_axis = *o.grid;
  if (o.rounds) cfg.refine_rounds = *o.rounds;
  if (o.margin) cfg.boundary_margin = *o.margin;
  if (o.separation) cfg.separation_floor = *o.separation;
  cfg.seed = o.seed;
  jr_search_report* raw = nullptr;
  check(jr_estimate_lipschitz(src.get(), dst.get(), m.get(), &cfg, o.threads, &raw));
  const std::unique_ptr<jr_search_report, SearchDeleter> r(raw);
  const double best = jr_search_report_best_ratio(r.get());
  const jr_cx z = jr_search_report_witness_z(r.get());
  const jr_cx w = jr_search_report_witness_w(r.get());
  double lo = 0.0, hi = 0.0;
  const bool has_interval = jr_search_report_cstar_interval(r.get(), &lo, &hi) != 0;
  if (fmt == "json") {
    std::cout << jr_search_report_json(r.get()) << '\n';
  } else if (fmt == "csv") {
    std::cout << "best_ratio,witness_z,witness_w,cstar_lo,cstar_hi\n"
              << exact(best) << ',' << cx_text(z, 0) << ',' << cx_text(w, 0) << ','
              << (has_interval ? exact(lo) : "") << ',' << (has_interval ? exact(hi) : "") << '\n';
  } else {
    std::cout << "best_ratio " << plain(best) << '\n'
              << "witness_z " << cx_text(z, 9) << '\n'
              << "witness_w " << cx_text(w, 9) << '\n';
    if (has_interval) std::cout << "cstar_interval " << plain(lo) << ' ' << plain(hi) << '\n';
  }
  return kOk;
}

int run_extremal(const Options& o, const std::string& fmt) {
  if (o.t.empty()) usage("extremal needs --t");
  const double a = o.a.value_or(0.0);
  if (fmt == "csv") {
    char* s = nullptr;
    check(jr_extremal_sweep_csv(o.t.data(), o.t.size(), a, o.b, &s));
    std::cout << take(s);
    return kOk;
  }
  std::vector<jr_sweep_row> rows(o.t.size());
  check(jr_extremal_sweep(o.t.data(), o.t.size(), a, o.b, rows.data()));
  if (fmt == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const jr_sweep_row& r : rows) {
      out.push_back({{"t", r.t},
                     {"closed_form", r.closed_form},
                     {"measured", r.measured},
                     {"abs_rel_gap", r.abs_rel_gap}});
    }
    std::cout << out.dump() << '\n';
  } else {
    for (const jr_sweep_row& r : rows) {
      std::cout << plain(r.t) << ' ' << plain(r.closed_form) << ' ' << plain(r.measured) << ' '
                << plain(r.abs_rel_gap) << '\n';
    }
  }
  return kOk;
}

// C* interval for |f(0)| given directly (--a) or read off a map (--map).
int run_bounds(const Options& o, const std::string& fmt) {
  double a_mod = 0.0;
  if (!o.map.empty()) {
    const Map m = map(o.map);
    jr_cx a{};
    check(jr_map_apply(m.get(), {0.0, 0.0}, &a));
    a_mod = std::hypot(a.re, a.im);
  } else if (o.a) {
    a_mod = *o.a;
  } else {
    usage("bounds needs --a or --map");
  }
  double lo = 0.0, hi = 0.0;
  check(jr_cstar_bounds(a_mod, &lo, &hi));
  if (fmt == "json") {
    nlohmann::ordered_json out;
    out["a"] = a_mod;
    out["cstar_interval"] = {lo, hi};
    std::cout << out.dump() << '\n';
  } else if (fmt == "csv") {
    std::cout << "a,cstar_lo,cstar_hi\n" << exact(a_mod) << ',' << exact(lo) << ',' << exact(hi) << '\n';
  } else {
    std::cout << plain(lo) << ' ' << plain(hi) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance ratio metric tools: distances, maps, verification suites, Lipschitz search."};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--domain", o.domain, "Source domain");
  app.add_option("--dst-domain", o.dst_domain, "Target domain");
  app.add_option("--map", o.map, "Map expression");
  app.add_option("--z", o.z, "First point");
  app.add_option("--w", o.w, "Second point");
  app.add_option("--suite", o.suite, "Suite name or 'all'");
  app.add_option("--samples", o.samples, "Suite sample count");
  app.add_option("--seed", o.seed, "Seed");
  app.add_option("--t", o.t, "Comma-separated t values")->delimiter(',');
  app.add_option("--a", o.a, "Extremal parameter a, or |f(0)| for bounds");
  app.add_option("--b", o.b, "Extremal parameter b");
  app.add_option("--grid", o.grid, "Search grid points per axis");
  app.add_option("--rounds", o.rounds, "Pattern search rounds");
  app.add_option("--margin", o.margin, "Search boundary margin");
  app.add_option("--separation", o.separation, "Search pair separation floor");
  app.add_option("--threads", o.threads, "Worker threads, 0 for all cores");
  app.add_option("--output", o.output, "json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.set_config("--config", "", "Flat key=value file; command-line flags win");

  struct Command {
    const char* name;
    const char* help;
    const char* default_format;
    int (*run)(const Options&, const std::string&);
  };
  const Command commands[] = {
      {"dist", "j distance of two points", "plain", run_dist},
      {"map-eval", "Evaluate a map and its derivative", "plain", run_map_eval},
      {"verify", "Run verification suites", "json", run_verify},
      {"search", "Estimate the Lipschitz constant of a map", "json", run_search},
      {"extremal", "Sweep the extremal family", "csv", run_extremal},
      {"bounds", "C* interval from |f(0)|", "plain", run_bounds},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) subs.push_back(app.add_subcommand(c.name, c.help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (!subs[k]->parsed()) continue;
    const std::string fmt = o.output.empty() ? commands[k].default_format : o.output;
    try {
      return commands[k].run(o, fmt);
    } catch (const Failure& f) {
      std::cerr << "jratio " << commands[k].name << ": " << jr_status_name(f.status) << ": " << f.message
                << '\n';
      return f.status == JR_INVALID_ARGUMENT ? kUsage : exit_code(f.status);
    }
  }
  return kUsage;
}
