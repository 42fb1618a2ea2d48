// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is nonzero when any blocking criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gft/bounds.hpp>
#include <gft/classes.hpp>
#include <gft/constants.hpp>
#include <gft/errors.hpp>
#include <gft/extremal.hpp>
#include <gft/oracle.hpp>
#include <gft/radii.hpp>
#include <gft/regions.hpp>
#include <gft/series.hpp>

using namespace gft;

namespace {

const double k = kPhiR;

struct Criterion {
  int id;
  std::string title;
  bool blocking = true;
  bool pass = true;
  std::vector<std::string> details;

  void note(const std::string& s) { details.push_back(s); }
  void fail(const std::string& s) {
    pass = false;
    details.push_back("FAIL: " + s);
  }
  void check(bool ok, const std::string& s) { ok ? note(s) : fail(s); }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt_e(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

void report(const Criterion& c) {
  const char* verdict = c.pass ? "PASS" : "FAIL";
  std::cout << verdict << "  " << c.id << ". " << c.title << (c.blocking ? "" : " (non-blocking)")
            << '\n';
  for (const std::string& d : c.details) std::cout << "      " << d << '\n';
  std::cout.flush();
}

// 1 ------------------------------------------------------------------------

struct Golden {
  std::string label;
  Complex got;
  Complex want;
};

Criterion golden_vectors() {
  Criterion c{1, "coefficient golden vectors (f0, f1, f2, f3, h; a and A columns) to 1e-12"};
  const MindaClass se = MindaClass::builtin("se", {}, 10);
  const MindaClass sr = MindaClass::builtin("sr", {}, 10);
  auto series = [](const MindaClass& cls, int m) {
    return generate_function(cls, SchwarzSpec(1.0, m), 10);
  };
  const Series f0 = series(se, 1), f1 = series(sr, 1), f2 = series(sr, 2), f3 = series(sr, 3);
  const Series h = extremal_catalog("h", std::nullopt, 10).series;
  const Series g0 = revert(f0), g1 = revert(f1), g2 = revert(f2), g3 = revert(f3);

  // values exactly as printed in the source expansions
  const std::vector<Golden> rows{
      {"f0 a2", f0[2], 1.0},          {"f0 a3", f0[3], 0.75},
      {"f0 a4", f0[4], 17.0 / 36},    {"f0 a5", f0[5], 19.0 / 72},
      {"f0 A2", g0[2], -1.0},         {"f0 A3", g0[3], 1.25},
      {"f0 A4", g0[4], -31.0 / 18},   {"f0 A5", g0[5], 361.0 / 144},
      {"f1 a2", f1[2], 1 / k},        {"f1 a3", f1[3], 3 / (2 * k * k)},
      {"f1 a4", f1[4], 11 / (6 * k * k * k)}, {"f1 a5", f1[5], 53 / (24 * std::pow(k, 4))},
      {"f1 A2", g1[2], -1 / k},       {"f1 A3", g1[3], 1 / (2 * k)},
      {"f1 A4", g1[4], 2 / (3 * k * k * k)}, {"f1 A5", g1[5], -47 / (24 * std::pow(k, 4))},
      {"f2 a3", f2[3], 1 / (2 * k)},  {"f2 a5", f2[5], 5 / (8 * k * k)},
      {"f2 A3", g2[3], -1 / (2 * k)}, {"f2 A5", g2[5], 1 / (8 * k * k)},
      {"f3 a4", f3[4], 1 / (3 * k)},  {"f3 a7", f3[7], 1 / (18 * k * k)},
      {"f3 A4", g3[4], -1 / (3 * k)},
      {"h a2", h[2], 1 / k},          {"h a3", h[3], 3 / (2 * k * k)},
      {"h a4", h[4], 11 / (6 * k * k * k)},
  };
  int ok = 0;
  for (const Golden& g : rows) {
    const double err = std::abs(g.got - g.want);
    if (err <= 1e-12) {
      ++ok;
    } else {
      c.fail(g.label + ": computed " + fmt(g.got.real()) + ", printed " + fmt(g.want.real()));
    }
  }
  // zero coefficients of the m-fold functions
  for (int n : {2, 4}) c.check(std::abs(f2[n]) <= 1e-12, "f2 a" + std::to_string(n) + " = 0");
  for (int n : {2, 3, 5, 6}) c.check(std::abs(f3[n]) <= 1e-12, "f3 a" + std::to_string(n) + " = 0");
  c.note(std::to_string(ok) + "/" + std::to_string(rows.size()) + " printed values reproduced");
  return c;
}

// 2 ------------------------------------------------------------------------

Criterion closed_constants() {
  Criterion c{2, "closed-form Hankel and inverse-coefficient constants to 1e-12"};
  struct Row {
    const char* cls;
    double want;
  };
  for (const Row& r : {Row{"s", 3.0}, Row{"sl", 19.0 / 280}, Row{"se", 29.0 / 98},
                       Row{"sr", 1 / (4 * k * k)}}) {
    const PhiCoefficients b = MindaClass::builtin(r.cls).B();
    const double got = hankel2_inverse_bound(b.B1, b.B2, b.B3).value;
    c.check(std::abs(got - r.want) <= 1e-12,
            std::string("hankel2_inverse ") + r.cls + " = " + fmt(got) + " (want " + fmt(r.want) + ")");
  }
  const double s = std::sqrt(2.0) - 1;
  const std::vector<std::pair<const char*, std::vector<double>>> tables{
      {"se", {1.0, 1.25, 31.0 / 18, 361.0 / 144}},
      {"sr", {s, s / 2, s / 3, 69 / std::sqrt(2.0) - 387.0 / 8}}};
  for (const auto& [id, want] : tables) {
    const auto got = class_inverse_bounds(id);
    std::string line = std::string("class_inverse_bounds ") + id + " =";
    bool ok = got.size() == 4;
    for (std::size_t i = 0; i < want.size() && i < got.size(); ++i) {
      line += " " + fmt(got[i].value);
      ok = ok && std::abs(got[i].value - want[i]) <= 1e-12;
    }
    c.check(ok, line);
  }
  c.note("69/sqrt2 - 387/8 = " + fmt(69 / std::sqrt(2.0) - 387.0 / 8) +
         " (the quoted decimal 0.415432 does not match the expression; the expression is used)");
  return c;
}

// 3 ------------------------------------------------------------------------

double bisect(char th, char which, std::optional<double> p) {
  return radius_bisect(proof_disk(th, which, p)).value;
}

Criterion radius_constants() {
  Criterion c{3, "radius constants to 1e-6; closed form vs bisection to 1e-8 over parameter sweeps"};
  struct Quoted {
    char th, which;
    double want;
  };
  for (const Quoted& q : {Quoted{'D', 'b', 0.350701}, Quoted{'D', 'e', 0.601232},
                          Quoted{'E', 'a', 0.864665}, Quoted{'E', 'b', 0.498824},
                          Quoted{'E', 'c', 0.780444}, Quoted{'E', 'd', 0.395772}}) {
    const double got = radius_closed_form(q.th, q.which, std::nullopt).value;
    c.check(std::abs(got - q.want) <= 1e-6, std::string(1, q.th) + "(" + q.which + ") = " + fmt(got) +
                                                " (quoted " + fmt(q.want) + ")");
  }
  struct Sweep {
    char th, which;
    std::vector<std::optional<double>> params;
  };
  std::vector<std::optional<double>> alphas, alphas_open, betas;
  for (int i = 0; i <= 9; ++i) alphas.push_back(0.1 * i);
  for (int i = 1; i <= 10; ++i) alphas_open.push_back(0.1 * i);
  for (int i = 0; i <= 19; ++i) betas.push_back(1.1 + 0.1 * i);
  const std::vector<Sweep> sweeps{{'D', 'a', alphas},           {'D', 'b', {std::nullopt}},
                                  {'D', 'c', alphas_open},      {'D', 'd', betas},
                                  {'D', 'e', {std::nullopt}},   {'E', 'a', {std::nullopt}},
                                  {'E', 'b', {std::nullopt}},   {'E', 'c', {std::nullopt}},
                                  {'E', 'd', {std::nullopt}},   {'E', 'e', alphas_open}};
  for (const Sweep& s : sweeps) {
    double worst = 0.0;
    std::optional<double> worst_p;
    for (const auto& p : s.params) {
      const double d = std::abs(radius_closed_form(s.th, s.which, p).value - bisect(s.th, s.which, p));
      if (d > worst) {
        worst = d;
        worst_p = p;
      }
    }
    std::string line = std::string(1, s.th) + "(" + s.which + ") sweep of " +
                       std::to_string(s.params.size()) + ": max |closed - bisection| = " + fmt_e(worst);
    if (worst > 1e-8 && worst_p) line += " at param " + fmt(*worst_p);
    if (worst > 1e-8 && !worst_p) {
      line += " (closed " + fmt(radius_closed_form(s.th, s.which, std::nullopt).value) +
              ", bisection " + fmt(bisect(s.th, s.which, std::nullopt)) + ")";
    }
    c.check(worst <= 1e-8, line);
  }
  return c;
}

// 4 ------------------------------------------------------------------------

Criterion th2_consistency() {
  Criterion c{4, "numeric max of G on [0,2] matches the printed closed form ~0.244395 to 1e-6"};
  const ScalarMax m = sr_a2a3_a4_numeric();
  const double closed = sr_a2a3_a4_closed_form();
  c.check(std::abs(m.value - closed) <= 1e-6,
          "numeric " + fmt(m.value) + " at c = " + fmt(m.argmax) + ", closed form " + fmt(closed));
  c.check(std::abs(closed - 0.244395) <= 1e-6, "closed form vs quoted 0.244395");
  return c;
}

// 5 ------------------------------------------------------------------------

Criterion oracle_soundness() {
  Criterion c{5, "oracle soundness matrix (seed 7): empirical <= bound + 1e-9; sharp bounds attained"};
  SearchBudget budget;
  budget.seed = 7;
  int sound = 0, sharp = 0;
  for (const MatrixEntry& e : verification_matrix()) {
    const MindaClass cls = MindaClass::builtin(e.class_id);
    const BoundReport bound = *bound_for(e.functional, cls);
    const VerifyReport r = verify_bound(e.functional, cls, bound, budget);
    const std::string tag = e.functional.id() + " on " + e.class_id;
    if (r.empirical > bound.value + kSoundTol) {
      c.fail(tag + ": empirical " + fmt(r.empirical) + " > bound " + fmt(bound.value));
      continue;
    }
    ++sound;
    if (bound.sharp) {
      if (!r.witness_attains) {
        c.fail(tag + ": witness " + r.witness_id.value_or("?") + " gives " +
               fmt(r.witness_value.value_or(NAN)) + ", bound " + fmt(bound.value));
      } else if (r.verdict != Verdict::sharp_confirmed) {
        c.fail(tag + ": search reached " + fmt(r.empirical) + ", bound " + fmt(bound.value));
      } else {
        ++sharp;
      }
    }
  }
  c.note(std::to_string(sound) + " bounds sound, " + std::to_string(sharp) +
         " sharp bounds attained by witness and search");
  return c;
}

// 6 ------------------------------------------------------------------------

HerglotzAtoms random_atoms(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> w(0.05, 1.0), th(0.0, kTwoPi);
  std::vector<HerglotzAtom> a(count(rng));
  double total = 0.0;
  for (auto& x : a) {
    x = {w(rng), th(rng)};
    total += x.weight;
  }
  for (auto& x : a) x.weight /= total;
  return HerglotzAtoms(std::move(a));
}

double inverse_gap(const InverseCoeffs& a, const InverseCoeffs& b) {
  return std::max({std::abs(a.A2 - b.A2), std::abs(a.A3 - b.A3), std::abs(a.A4 - b.A4),
                   std::abs(*a.A5 - *b.A5)});
}

Criterion class_invariants() {
  Criterion c{6, "two-path and pipeline invariants on 200 seeded instances to 1e-10"};
  std::mt19937_64 rng(6006);
  std::uniform_real_distribution<double> b1(0.05, 2.0), bi(-2.0, 2.0), th(0.0, kTwoPi);
  std::uniform_int_distribution<int> mpow(1, 3);
  const std::vector<std::string> ids = MindaClass::builtin_ids();
  const std::map<std::string, ClassParams> params{{"s_alpha", {{"alpha", 0.3}}},
                                                  {"janowski", {{"A", 0.5}, {"B", -0.5}}},
                                                  {"bs", {{"alpha", 0.4}}},
                                                  {"m_beta", {{"beta", 1.5}}}};
  double two_path = 0.0, pipeline = 0.0;
  for (int i = 0; i < 200; ++i) {
    const PhiCoefficients b{b1(rng), bi(rng), bi(rng), bi(rng)};
    const CaratheodoryCoeffs cc = herglotz_coeffs(random_atoms(rng));
    two_path = std::max(two_path, inverse_gap(inverse_coeffs(b, cc),
                                              inverse_from_direct(direct_coeffs(b, cc))));

    const std::string& id = ids[i % ids.size()];
    const auto it = params.find(id);
    const MindaClass cls = MindaClass::builtin(id, it == params.end() ? ClassParams{} : it->second, 12);
    const Complex eps = std::polar(1.0, th(rng));
    const int m = mpow(rng);
    Complex cn[5]{};
    for (int n = 1; n <= 4; ++n) {
      if (n % m == 0) cn[n] = 2.0 * std::pow(eps, n / m);
    }
    const InverseCoeffs via_series =
        inverse_from_direct(direct_from_series(generate_function(cls, SchwarzSpec(eps, m), 12)));
    const InverseCoeffs closed = inverse_coeffs(cls.B(), {cn[1], cn[2], cn[3], cn[4]});
    pipeline = std::max(pipeline, inverse_gap(via_series, closed));
  }
  c.check(two_path <= 1e-10, "two-path max deviation " + fmt_e(two_path));
  c.check(pipeline <= 1e-10, "pipeline max deviation " + fmt_e(pipeline));
  return c;
}

// 7 ------------------------------------------------------------------------

Criterion series_roundtrips() {
  Criterion c{7, "series round-trips on 100 seeded instances to 1e-12"};
  std::mt19937_64 rng(7007);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> order(2, 10);
  auto coeff = [&]() { return std::polar(std::sqrt(u(rng)), kTwoPi * u(rng)); };
  double rr = 0.0, el = 0.0, id = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int N = order(rng);
    Series f(N), a(N);
    f[1] = std::polar(0.5 + u(rng), kTwoPi * u(rng));
    for (int n = 2; n <= N; ++n) f[n] = coeff();
    for (int n = 1; n <= N; ++n) a[n] = coeff();
    const Series g = revert(f);
    double scale = 1.0;
    for (int n = 0; n <= N; ++n) scale = std::max(scale, std::abs(g[n]));
    rr = std::max(rr, max_abs_diff(revert(g), f) / scale);
    el = std::max(el, max_abs_diff(log(exp(a)), a));
    id = std::max(id, max_abs_diff(compose(f, g), Series::identity(N)) / scale);
  }
  c.check(rr <= 1e-12, "revert(revert f) = f, max relative deviation " + fmt_e(rr));
  c.check(el <= 1e-12, "log(exp a) = a, max deviation " + fmt_e(el));
  c.check(id <= 1e-12, "f o revert(f) = z, max relative deviation " + fmt_e(id));
  return c;
}

// 8 ------------------------------------------------------------------------

Criterion region_probes() {
  Criterion c{8, "disk lemma containment probes; sharpness of every radius at delta = 1e-4"};
  for (DiskLemma lemma : {DiskLemma::phi_r, DiskLemma::exp}) {
    const Region region = lemma_region(lemma);
    const auto [lo, hi] = disk_centre_range(lemma);
    int ok = 0;
    for (int i = 1; i <= 20; ++i) {
      const double a = lo + (hi - lo) * i / 21.0;
      const double r = disk_radius(lemma, a);
      bool inner = true, outer = false;
      for (int j = 0; j < 720; ++j) {
        const Complex u = std::polar(1.0, kTwoPi * j / 720);
        inner = inner && contains(region, a + 0.999 * r * u).inside;
        outer = outer || !contains(region, a + 1.02 * r * u).inside;
      }
      if (inner && outer) ++ok;
    }
    c.check(ok == 20, std::string("lemma ") + to_string(lemma) + ": " + std::to_string(ok) +
                          "/20 centres pass the 0.999/1.02 probe");
  }
  struct Branch {
    char th, which;
    std::optional<double> p;
  };
  for (const Branch& b : {Branch{'D', 'a', 0.0}, Branch{'D', 'b', std::nullopt}, Branch{'D', 'c', 0.5},
                          Branch{'D', 'd', 1.5}, Branch{'D', 'e', std::nullopt},
                          Branch{'E', 'a', std::nullopt}, Branch{'E', 'b', std::nullopt},
                          Branch{'E', 'c', std::nullopt}, Branch{'E', 'd', std::nullopt},
                          Branch{'E', 'e', 0.5}}) {
    const RadiusResult r = radius_closed_form(b.th, b.which, b.p);
    const Witness w = radius_witness(b.th, b.which, b.p);
    const SharpnessReport s = sharpness_check(w.zfp_over_f, w.region, r.value, 1e-4);
    c.check(s.pass, std::string(1, b.th) + "(" + b.which + ") R = " + fmt(r.value) + ", witness " +
                        w.id + ": " + s.message);
  }
  return c;
}

// 9 ------------------------------------------------------------------------

Criterion conjecture_probes() {
  Criterion c{9, "conjecture probes: |a_n| (n <= 6) on S*_R within the conjectured bound; H3 value"};
  c.blocking = false;
  const MindaClass sr = MindaClass::builtin("sr");
  SearchBudget budget;
  budget.seed = 7;
  for (int n = 2; n <= 6; ++n) {
    const Functional f = Functional::abs_an_direct(n);
    const double bound = sr_conjectured_an(n);
    const OracleResult r = maximize(f, sr, budget);
    c.check(r.max <= bound + 1e-9, "|a" + std::to_string(n) + "|: oracle max " + fmt(r.max) +
                                       ", conjectured " + fmt(bound));
  }
  const double h3 = sr_conjectured_h3();
  c.check(std::abs(h3 - 0.0563448) <= 1e-6, "assembled H3 bound " + fmt(h3) + " (quoted 0.0563448)");
  return c;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const std::vector<std::function<Criterion()>> suite{
      golden_vectors, closed_constants,  radius_constants, th2_consistency, oracle_soundness,
      class_invariants, series_roundtrips, region_probes,  conjecture_probes};
  int blocking_failures = 0, non_blocking_failures = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto t0 = clock::now();
    Criterion c{static_cast<int>(i + 1), "aborted"};
    try {
      c = suite[i]();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    c.note("time " + fmt(std::round(secs * 100) / 100) + " s");
    report(c);
    if (!c.pass) ++(c.blocking ? blocking_failures : non_blocking_failures);
  }
  std::cout << "summary: " << blocking_failures << " blocking criteria failed, "
            << non_blocking_failures << " non-blocking failed\n";
  return blocking_failures == 0 ? 0 : 1;
}
