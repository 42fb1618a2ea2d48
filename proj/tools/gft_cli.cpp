#include "gft_cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <gft/bounds.hpp>
#include <gft/classes.hpp>
#include <gft/constants.hpp>
#include <gft/errors.hpp>
#include <gft/oracle.hpp>
#include <gft/radii.hpp>
#include <gft/regions.hpp>

#ifndef GFT_VERSION
#define GFT_VERSION "0.0.0"
#endif

namespace gft::cli {

using Json = nlohmann::ordered_json;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  static const std::regex re(
      R"(^([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(?:([+-])((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i)?$)");
  static const std::regex pure_imag(R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?i$)");
  std::smatch m;
  if (std::regex_match(s, m, pure_imag)) {
    const double mag = m[2].matched ? std::stod(m[2].str()) : 1.0;
    return {0.0, m[1].str() == "-" ? -mag : mag};
  }
  if (!s.empty() && std::regex_match(s, m, re) && m[1].matched) {
    const double re_part = std::stod(m[1].str());
    double im_part = 0.0;
    if (m[2].matched) {
      im_part = m[3].matched ? std::stod(m[3].str()) : 1.0;
      if (m[2].str() == "-") im_part = -im_part;
    }
    return {re_part, im_part};
  }
  throw DomainError("cannot parse complex number '" + std::string(text) + "'");
}

namespace {

struct Options {
  bool json = false;
  std::optional<std::uint64_t> seed;

  std::string class_id;
  std::string class_file;
  std::vector<std::string> params;

  std::string eps = "1";
  int m = 1;
  int order = 8;

  std::string kind;
  std::string B;
  std::string mu = "0";

  std::string thm;
  std::string branch;
  std::optional<double> alpha;
  std::optional<double> beta;
  bool verify = false;
  double delta = 1e-4;
  int probes = kDefaultProbes;
  double sharp_tol = kSharpTol;

  std::string target = "all";
  int starts = 64;
  int iterations = 2000;
  int threads = 0;

  std::string action;
  std::string w;
  std::string region;
  int samples = 512;
};

Json num(double x) { return x == 0.0 ? 0.0 : round12(x); }

Json cplx(Complex z) { return Json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

std::string format_complex(double re, double im) {
  if (im == 0.0) return format_number(re);
  const std::string mag = std::abs(im) == 1.0 ? "" : format_number(std::abs(im));
  if (re == 0.0) return (im < 0 ? "-" : "") + mag + "i";
  return format_number(re) + (im < 0 ? "-" : "+") + mag + "i";
}

std::string render(const Json& v) {
  if (v.is_number_float()) return format_number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im")) {
    return format_complex(v["re"].get<double>(), v["im"].get<double>());
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
    return s + "]";
  }
  return v.dump();
}

void render_text(const Json& doc, std::ostream& out) {
  for (const Json& r : doc["results"]) {
    std::string line = r.value("name", std::string("result"));
    if (r.contains("value")) line += " = " + render(r["value"]);
    for (const auto& [key, val] : r.items()) {
      if (key == "name" || key == "value") continue;
      line += "  " + key + "=" + render(val);
    }
    out << line << '\n';
  }
  for (const Json& v : doc["verdicts"]) {
    std::string line = "[" + v["verdict"].get<std::string>() + "] " + v["target"].get<std::string>();
    for (const auto& [key, val] : v.items()) {
      if (key == "verdict" || key == "target") continue;
      line += "  " + key + "=" + render(val);
    }
    out << line << '\n';
  }
}

ClassParams parse_params(const std::vector<std::string>& items) {
  ClassParams p;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw DomainError("--param expects key=value, got '" + item + "'");
    }
    char* end = nullptr;
    const std::string value = item.substr(eq + 1);
    const double x = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') throw DomainError("bad number in --param '" + item + "'");
    p[item.substr(0, eq)] = x;
  }
  return p;
}

MindaClass load_class(const Options& o, int order = kDefaultOrder) {
  if (!o.class_file.empty()) {
    std::ifstream in(o.class_file);
    if (!in) throw DomainError("cannot read class file '" + o.class_file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return MindaClass::from_descriptor(ss.str(), order);
  }
  if (o.class_id.empty()) throw DomainError("--class or --class-file is required");
  return MindaClass::builtin(o.class_id, parse_params(o.params), order);
}

PhiCoefficients parse_B(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double x = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw DomainError("bad --B entry '" + item + "'");
    v.push_back(x);
  }
  if (v.empty() || v.size() > 4) throw DomainError("--B expects 1 to 4 comma-separated numbers");
  v.resize(4, 0.0);
  return {v[0], v[1], v[2], v[3]};
}

Json bound_json(const BoundReport& r) {
  Json j{{"name", r.label}, {"value", num(r.value)}, {"case", r.case_id}, {"sharp", r.sharp},
         {"status", to_string(r.status)}};
  if (!r.class_id.empty()) j["class"] = r.class_id;
  if (r.mu) j["mu"] = cplx(*r.mu);
  return j;
}

std::optional<double> radius_param(const Options& o) { return o.alpha ? o.alpha : o.beta; }

char single_char(const std::string& s, const char* what) {
  if (s.size() != 1) throw DomainError(std::string(what) + " must be a single letter");
  return s[0];
}

struct Outcome {
  Json results = Json::array();
  Json verdicts = Json::array();
  int code = kOk;
};

Outcome cmd_coeffs(const Options& o) {
  if (o.order < 5) throw DomainError("--N must be >= 5");
  const MindaClass cls = load_class(o, std::max(o.order, kDefaultOrder));
  const SchwarzSpec w(parse_complex(o.eps), o.m);
  const Series f = generate_function(cls, w, o.order);
  const DirectCoeffs a = direct_from_series(f);
  const InverseCoeffs A = inverse_from_direct(a);
  Outcome out;
  out.results.push_back({{"name", "a2"}, {"value", cplx(a.a2)}});
  out.results.push_back({{"name", "a3"}, {"value", cplx(a.a3)}});
  out.results.push_back({{"name", "a4"}, {"value", cplx(a.a4)}});
  out.results.push_back({{"name", "a5"}, {"value", cplx(*a.a5)}});
  out.results.push_back({{"name", "A2"}, {"value", cplx(A.A2)}});
  out.results.push_back({{"name", "A3"}, {"value", cplx(A.A3)}});
  out.results.push_back({{"name", "A4"}, {"value", cplx(A.A4)}});
  out.results.push_back({{"name", "A5"}, {"value", cplx(*A.A5)}});
  Json series = Json::array();
  for (int n = 0; n <= f.order(); ++n) series.push_back(cplx(f[n]));
  out.results.push_back({{"name", "series"}, {"value", series}});
  return out;
}

Outcome cmd_bound(const Options& o) {
  Outcome out;
  auto B = [&]() -> PhiCoefficients {
    if (!o.B.empty()) return parse_B(o.B);
    return load_class(o).B();
  };
  if (o.kind == "fs-inverse") {
    const PhiCoefficients b = B();
    out.results.push_back(bound_json(fs_inverse_bound(b.B1, b.B2, parse_complex(o.mu))));
  } else if (o.kind == "abs-a2-inverse") {
    out.results.push_back(bound_json(abs_a2_inverse_bound(B().B1)));
  } else if (o.kind == "hankel2-inverse") {
    const PhiCoefficients b = B();
    out.results.push_back(bound_json(hankel2_inverse_bound(b.B1, b.B2, b.B3)));
  } else if (o.kind == "class-inverse") {
    if (o.class_id.empty()) throw DomainError("class-inverse needs --class");
    for (const BoundReport& r : class_inverse_bounds(o.class_id)) out.results.push_back(bound_json(r));
  } else if (o.kind == "sr-direct") {
    const Complex mu = parse_complex(o.mu);
    if (mu.imag() != 0.0) throw DomainError("sr-direct needs a real --mu");
    for (const BoundReport& r : sr_direct_bounds(mu.real())) out.results.push_back(bound_json(r));
  } else if (o.kind == "conjectures") {
    const ConjectureSet c = sr_conjectures();
    for (const BoundReport& r : c.an_bounds) out.results.push_back(bound_json(r));
    out.results.push_back(bound_json(c.h3_bound));
  } else {
    throw DomainError("unknown bound kind '" + o.kind + "'");
  }
  return out;
}

Json sharpness_json(const std::string& target, const SharpnessReport& s) {
  Json v{{"target", target},
         {"verdict", s.pass ? "PASS" : "FAIL"},
         {"radius", num(s.radius)},
         {"delta", num(s.delta)},
         {"inner_inside", s.inner_inside},
         {"outer_exits", s.outer_exits},
         {"outer_checked", s.outer_checked},
         {"witness_exit_radius", num(s.witness_exit_radius)}};
  if (s.violating_z) v["violating_z"] = cplx(*s.violating_z);
  if (s.exit_z) v["exit_z"] = cplx(*s.exit_z);
  if (s.precision_warning) v["precision_warning"] = true;
  v["message"] = s.message;
  return v;
}

std::string radius_target(char th, char which, std::optional<double> p) {
  std::string t = std::string("radius:") + th + ":" + which;
  if (p) t += ":" + format_number(*p);
  return t;
}

void check_radius(char th, char which, std::optional<double> p, const Options& o, Outcome& out) {
  const RadiusResult r = radius_closed_form(th, which, p);
  const Witness w = radius_witness(th, which, p);
  const SharpnessReport s = sharpness_check(w.zfp_over_f, w.region, r.value, o.delta, o.probes);
  Json v = sharpness_json(radius_target(th, which, p), s);
  v["witness"] = w.id;
  out.verdicts.push_back(v);
  if (!s.pass) out.code = kVerificationFailed;
}

Outcome cmd_radius(const Options& o) {
  const char th = single_char(o.thm, "--thm");
  const char which = single_char(o.branch, "--branch");
  const std::optional<double> p = radius_param(o);
  const RadiusResult r = radius_closed_form(th, which, p);
  Outcome out;
  Json res{{"name", "radius"},
           {"value", num(r.value)},
           {"method", to_string(r.method)},
           {"equation", r.defining_equation},
           {"witness", r.sharp_witness}};
  if (r.param) res["param"] = num(*r.param);
  if (!r.note.empty()) res["note"] = r.note;
  out.results.push_back(res);
  try {
    const RadiusResult b = radius_bisect(proof_disk(th, which, p));
    out.results.push_back({{"name", "bisection"},
                           {"value", num(b.value)},
                           {"agrees", std::abs(b.value - r.value) <= 1e-8}});
  } catch (const NoRadiusError& e) {
    out.results.push_back({{"name", "bisection"}, {"value", nullptr}, {"error", e.what()}});
  }
  if (o.verify) check_radius(th, which, p, o, out);
  return out;
}

SearchBudget budget_of(const Options& o, std::uint64_t seed) {
  SearchBudget b;
  b.starts = o.starts;
  b.iterations = o.iterations;
  b.seed = seed;
  b.threads = o.threads;
  return b;
}

void check_bound(const Functional& f, const std::string& class_id, const Options& o,
                 std::uint64_t seed, Outcome& out) {
  const MindaClass cls = MindaClass::builtin(class_id);
  const auto bound = bound_for(f, cls);
  if (!bound) throw DomainError("no bound for " + f.id() + " on class " + class_id);
  const VerifyReport rep = verify_bound(f, cls, *bound, budget_of(o, seed), o.sharp_tol);
  const bool conjecture = bound->status == BoundStatus::conjecture;
  Json v{{"target", "bound:" + f.id() + ":" + class_id},
         {"verdict", to_string(rep.verdict)},
         {"empirical", num(rep.empirical)},
         {"bound", num(bound->value)},
         {"status", to_string(bound->status)},
         {"sharp", bound->sharp},
         {"start_kind", rep.search.start_kind},
         {"evaluations", rep.search.evaluations}};
  if (rep.witness_id) {
    v["witness"] = *rep.witness_id;
    v["witness_value"] = num(*rep.witness_value);
    v["witness_attains"] = rep.witness_attains;
  }
  out.verdicts.push_back(v);
  if (rep.verdict == Verdict::violation && !conjecture) out.code = kVerificationFailed;
}

struct RadiusCase {
  char th;
  char which;
  std::optional<double> param;
};

const RadiusCase kRadiusCases[] = {
    {'D', 'a', 0.0}, {'D', 'b', std::nullopt}, {'D', 'c', 0.5}, {'D', 'd', 1.5},
    {'D', 'e', std::nullopt}, {'E', 'a', std::nullopt}, {'E', 'b', std::nullopt},
    {'E', 'c', std::nullopt}, {'E', 'd', std::nullopt}, {'E', 'e', 0.5},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Outcome cmd_verify(const Options& o, std::uint64_t seed) {
  Outcome out;
  if (o.target == "all") {
    for (const MatrixEntry& e : verification_matrix()) check_bound(e.functional, e.class_id, o, seed, out);
    for (const MatrixEntry& e : conjecture_matrix()) check_bound(e.functional, e.class_id, o, seed, out);
    for (const RadiusCase& c : kRadiusCases) check_radius(c.th, c.which, c.param, o, out);
    return out;
  }
  const std::vector<std::string> parts = split(o.target, ':');
  if (parts.size() == 3 && parts[0] == "bound") {
    check_bound(Functional::parse(parts[1]), parts[2], o, seed, out);
    return out;
  }
  if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "radius") {
    std::optional<double> p = radius_param(o);
    if (parts.size() == 4) {
      char* end = nullptr;
      p = std::strtod(parts[3].c_str(), &end);
      if (parts[3].empty() || *end != '\0') throw DomainError("bad radius parameter '" + parts[3] + "'");
    }
    check_radius(single_char(parts[1], "theorem"), single_char(parts[2], "branch"), p, o, out);
    return out;
  }
  throw DomainError("unknown target '" + o.target + "' (all | bound:F:C | radius:T:b[:p])");
}

Region region_of(const Options& o) {
  if (!o.region.empty()) {
    if (o.region == "exp") return Region::exp_domain();
    if (o.region == "phi_r") return Region::phi_r_domain();
    if (o.region == "lemniscate") return Region::lemniscate();
    if (o.region == "half_plane") {
      if (!o.beta) throw DomainError("half_plane needs --beta");
      return Region::half_plane(*o.beta);
    }
    throw DomainError("unknown region '" + o.region + "'");
  }
  return Region::from_class(load_class(o));
}

Outcome cmd_region(const Options& o) {
  if (o.action != "contains") throw DomainError("region supports only 'contains'");
  if (o.w.empty()) throw DomainError("--w is required");
  const Region region = region_of(o);
  const Complex w = parse_complex(o.w);
  const Membership m = contains(region, w);
  Json r{{"name", "contains"},
         {"value", m.inside},
         {"region", region.name()},
         {"w", cplx(w)},
         {"ambiguous", m.ambiguous},
         {"boundary_distance", num(m.boundary_distance)}};
  r["fast"] = m.fast ? Json(*m.fast) : Json(nullptr);
  r["winding"] = m.winding ? Json(*m.winding) : Json(nullptr);
  r["disagreement"] = m.disagreement;
  if (!m.diagnostic.empty()) r["diagnostic"] = m.diagnostic;
  Outcome out;
  out.results.push_back(r);
  return out;
}

Outcome cmd_plot(const Options& o, std::ostream& csv, bool json) {
  const Region region = region_of(o);
  if (!region.has_boundary()) throw DomainError("region '" + region.name() + "' has no boundary curve");
  if (o.samples < 3) throw DomainError("--samples must be >= 3");
  const std::vector<Complex> pts = region.sample_boundary(o.samples);
  Outcome out;
  Json rows = Json::array();
  if (!json) csv << "t,Re,Im\n";
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(pts.size());
    if (json) {
      rows.push_back(Json::array({num(t), num(pts[j].real()), num(pts[j].imag())}));
    } else {
      csv << format_number(t) << ',' << format_number(pts[j].real()) << ','
          << format_number(pts[j].imag()) << '\n';
    }
  }
  if (json) out.results.push_back({{"name", "boundary"}, {"region", region.name()}, {"columns", {"t", "Re", "Im"}}, {"rows", rows}});
  return out;
}

Json echo_config(CLI::App* sub) {
  Json cfg{{"subcommand", sub->get_name()}};
  auto add = [&](const CLI::App* app) {
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->count() == 0) continue;
      const std::string name = opt->get_name();
      if (name == "--help" || name == "-h") continue;
      const std::vector<std::string>& res = opt->results();
      cfg[name] = res.size() == 1 ? Json(res[0]) : Json(res);
    }
  };
  add(sub->get_parent());
  add(sub);
  return cfg;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GFT_SEED")) {
    char* end = nullptr;
    const unsigned long long s = std::strtoull(env, &end, 10);
    if (*env != '\0' && *end == '\0') return s;
  }
  return 0;
}

void add_class_options(CLI::App* sub, Options& o) {
  sub->add_option("--class", o.class_id, "built-in class id (s, s_alpha, janowski, se, sr, sl, sq, sc, bs, m_beta)");
  sub->add_option("--class-file", o.class_file, "JSON class descriptor");
  sub->add_option("--param", o.params, "class parameter key=value (repeatable)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Coefficient bounds and radius constants for Ma-Minda starlike classes", "gft"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "emit a JSON report");
  app.add_option("--seed", o.seed, "search seed (default: $GFT_SEED or 0)");

  CLI::App* coeffs = app.add_subcommand("coeffs", "coefficients of the function generated by a Schwarz function");
  add_class_options(coeffs, o);
  coeffs->add_option("--eps", o.eps, "Schwarz rotation, |eps| = 1");
  coeffs->add_option("--m", o.m, "Schwarz power");
  coeffs->add_option("--N", o.order, "series order");

  CLI::App* bound = app.add_subcommand("bound", "closed-form coefficient bounds");
  bound->add_option("kind", o.kind, "fs-inverse | abs-a2-inverse | hankel2-inverse | class-inverse | sr-direct | conjectures")
      ->required();
  add_class_options(bound, o);
  bound->add_option("--B", o.B, "B1,B2[,B3[,B4]] instead of a class");
  bound->add_option("--mu", o.mu, "Fekete-Szego parameter");

  CLI::App* radius = app.add_subcommand("radius", "radius constants");
  radius->add_option("--thm", o.thm, "D or E")->required();
  radius->add_option("--branch", o.branch, "a..e")->required();
  radius->add_option("--alpha", o.alpha, "alpha parameter");
  radius->add_option("--beta", o.beta, "beta parameter");
  radius->add_flag("--verify", o.verify, "run the sharpness check on the witness");
  radius->add_option("--delta", o.delta, "relative probe offset");
  radius->add_option("--probes", o.probes, "probe points per circle");

  CLI::App* verify = app.add_subcommand("verify", "search-based soundness checks");
  verify->add_option("--target", o.target, "all | bound:F:C | radius:T:b[:p]");
  verify->add_option("--starts", o.starts, "multistart count");
  verify->add_option("--iterations", o.iterations, "iterations per start");
  verify->add_option("--threads", o.threads, "worker threads (0: hardware)");
  verify->add_option("--sharp-tol", o.sharp_tol, "search tolerance for sharp bounds");
  verify->add_option("--delta", o.delta, "relative probe offset for radii");
  verify->add_option("--probes", o.probes, "probe points per circle");
  verify->add_option("--alpha", o.alpha, "alpha for radius targets");
  verify->add_option("--beta", o.beta, "beta for radius targets");

  CLI::App* region = app.add_subcommand("region", "membership in an image domain");
  region->add_option("action", o.action, "contains")->required();
  add_class_options(region, o);
  region->add_option("--region", o.region, "exp | phi_r | lemniscate | half_plane");
  region->add_option("--beta", o.beta, "half-plane bound");
  region->add_option("--w", o.w, "point a+bi")->required();

  CLI::App* plot = app.add_subcommand("plot-data", "boundary curve as CSV (t,Re,Im)");
  add_class_options(plot, o);
  plot->add_option("--region", o.region, "exp | phi_r | lemniscate");
  plot->add_option("--samples", o.samples, "number of boundary points");

  for (CLI::App* sub : {coeffs, bound, radius, verify, region, plot}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::uint64_t seed = o.seed.value_or(default_seed());
  Outcome result;
  try {
    if (sub == coeffs) result = cmd_coeffs(o);
    else if (sub == bound) result = cmd_bound(o);
    else if (sub == radius) result = cmd_radius(o);
    else if (sub == verify) result = cmd_verify(o, seed);
    else if (sub == region) result = cmd_region(o);
    else result = cmd_plot(o, out, o.json);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotImplementedError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }

  Json doc{{"command", sub->get_name()},
           {"config", echo_config(sub)},
           {"results", result.results},
           {"verdicts", result.verdicts},
           {"seed", seed},
           {"version", GFT_VERSION}};
  if (o.json) {
    out << doc.dump(2) << '\n';
  } else if (sub != plot) {
    render_text(doc, out);
  }
  return result.code;
}

}  // namespace gft::cli
