#include "gft/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <sstream>
#include <thread>

#include "gft/constants.hpp"
#include "gft/errors.hpp"

namespace gft {

// ---- Functional --------------------------------------------------------------

Functional Functional::abs_A(int n) {
  static constexpr FunctionalKind kinds[] = {FunctionalKind::absA2, FunctionalKind::absA3,
                                             FunctionalKind::absA4, FunctionalKind::absA5};
  if (n < 2 || n > 5) throw DomainError("abs_A: n must be in 2..5");
  return {kinds[n - 2], {}, n};
}
Functional Functional::fs_inverse(Complex mu) { return {FunctionalKind::fs_inverse, mu, 0}; }
Functional Functional::hankel2_inverse() { return {FunctionalKind::hankel2_inverse, {}, 0}; }
Functional Functional::abs_an_direct(int n) {
  if (n < 2) throw DomainError("abs_an_direct: n must be >= 2");
  return {FunctionalKind::abs_an_direct, {}, n};
}
Functional Functional::fs_direct(Complex mu) { return {FunctionalKind::fs_direct, mu, 0}; }
Functional Functional::hankel2_direct() { return {FunctionalKind::hankel2_direct, {}, 0}; }
Functional Functional::a2a3_minus_a4() { return {FunctionalKind::a2a3_minus_a4, {}, 0}; }
Functional Functional::h3_direct() { return {FunctionalKind::h3_direct, {}, 0}; }

namespace {

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

Functional Functional::parse(std::string_view text) {
  std::string_view name = text;
  std::optional<std::string_view> arg;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw DomainError("malformed functional '" + std::string(text) + "'");
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
  }
  auto need_arg = [&]() {
    if (!arg) throw DomainError("functional '" + std::string(name) + "' needs an argument");
    return *arg;
  };
  if (name == "absA2") return abs_A(2);
  if (name == "absA3") return abs_A(3);
  if (name == "absA4") return abs_A(4);
  if (name == "absA5") return abs_A(5);
  if (name == "fs_inverse") return fs_inverse(parse_double(need_arg()));
  if (name == "hankel2_inverse") return hankel2_inverse();
  if (name == "abs_an_direct") return abs_an_direct(static_cast<int>(parse_double(need_arg())));
  if (name == "fs_direct") return fs_direct(parse_double(need_arg()));
  if (name == "hankel2_direct") return hankel2_direct();
  if (name == "a2a3_minus_a4") return a2a3_minus_a4();
  if (name == "h3_direct") return h3_direct();
  throw DomainError("unknown functional '" + std::string(text) + "'");
}

std::string Functional::id() const {
  switch (kind) {
    case FunctionalKind::absA2: return "absA2";
    case FunctionalKind::absA3: return "absA3";
    case FunctionalKind::absA4: return "absA4";
    case FunctionalKind::absA5: return "absA5";
    case FunctionalKind::fs_inverse: return "fs_inverse(" + fmt(mu.real()) + ")";
    case FunctionalKind::hankel2_inverse: return "hankel2_inverse";
    case FunctionalKind::abs_an_direct: return "abs_an_direct(" + std::to_string(n) + ")";
    case FunctionalKind::fs_direct: return "fs_direct(" + fmt(mu.real()) + ")";
    case FunctionalKind::hankel2_direct: return "hankel2_direct";
    case FunctionalKind::a2a3_minus_a4: return "a2a3_minus_a4";
    case FunctionalKind::h3_direct: return "h3_direct";
  }
  return "?";
}

bool Functional::needs_c4() const {
  return kind == FunctionalKind::absA5 || kind == FunctionalKind::h3_direct ||
         (kind == FunctionalKind::abs_an_direct && n >= 5);
}

bool Functional::needs_series() const { return kind == FunctionalKind::abs_an_direct && n >= 6; }

double evaluate(const Functional& f, const PhiCoefficients& b, const CaratheodoryCoeffs& c) {
  if (f.needs_series()) throw DomainError(f.id() + " needs the series route");
  if (f.needs_c4() && !c.c4) throw DomainError(f.id() + " needs c4");
  switch (f.kind) {
    case FunctionalKind::absA2:
    case FunctionalKind::absA3:
    case FunctionalKind::absA4:
    case FunctionalKind::absA5:
    case FunctionalKind::fs_inverse:
    case FunctionalKind::hankel2_inverse: {
      const InverseCoeffs A = inverse_coeffs(b, c);
      switch (f.kind) {
        case FunctionalKind::absA2: return std::abs(A.A2);
        case FunctionalKind::absA3: return std::abs(A.A3);
        case FunctionalKind::absA4: return std::abs(A.A4);
        case FunctionalKind::absA5: return std::abs(*A.A5);
        case FunctionalKind::fs_inverse: return std::abs(A.A3 - f.mu * A.A2 * A.A2);
        default: return std::abs(A.A2 * A.A4 - A.A3 * A.A3);
      }
    }
    default: break;
  }
  const DirectCoeffs a = direct_coeffs(b, c);
  switch (f.kind) {
    case FunctionalKind::abs_an_direct:
      switch (f.n) {
        case 2: return std::abs(a.a2);
        case 3: return std::abs(a.a3);
        case 4: return std::abs(a.a4);
        default: return std::abs(*a.a5);
      }
    case FunctionalKind::fs_direct: return std::abs(a.a3 - f.mu * a.a2 * a.a2);
    case FunctionalKind::hankel2_direct: return std::abs(a.a2 * a.a4 - a.a3 * a.a3);
    case FunctionalKind::a2a3_minus_a4: return std::abs(a.a2 * a.a3 - a.a4);
    case FunctionalKind::h3_direct: {
      const Complex a5 = *a.a5;
      return std::abs(a.a3 * (a.a2 * a.a4 - a.a3 * a.a3) - a.a4 * (a.a4 - a.a2 * a.a3) +
                      a5 * (a.a3 - a.a2 * a.a2));
    }
    default: break;
  }
  throw DomainError("evaluate: unhandled functional");
}

double evaluate(const Functional& f, const MindaClass& cls, const HerglotzAtoms& atoms) {
  if (f.needs_series()) {
    const int order = std::max(kDefaultOrder, f.n);
    const Series p = herglotz_series(atoms, order);
    return std::abs(function_from_caratheodory(cls, p)[f.n]);
  }
  return evaluate(f, cls.B(), herglotz_coeffs(atoms));
}

// ---- search ------------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class SubStream {
 public:
  SubStream(std::uint64_t seed, std::uint64_t index) : state_(seed) {
    std::uint64_t mix = index * 0xD1B54A32D192ED03ULL + 1;
    state_ ^= splitmix64(mix);
  }
  double uniform() { return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class StartKind { herglotz, lz };

struct StartPlan {
  StartKind kind;
  int atoms;  // for herglotz
};

std::vector<StartPlan> plans_for(const Functional& f) {
  std::vector<StartPlan> plans{{StartKind::herglotz, 1},
                               {StartKind::herglotz, 2},
                               {StartKind::herglotz, 3},
                               {StartKind::herglotz, 4}};
  if (!f.needs_c4()) plans.push_back({StartKind::lz, 0});
  return plans;
}

HerglotzAtoms decode_atoms(const std::vector<double>& x, int n) {
  std::vector<HerglotzAtom> atoms(static_cast<std::size_t>(n));
  if (n == 1) return HerglotzAtoms({{1.0, x[0]}});
  double total = 0.0;
  for (int j = 0; j < n; ++j) total += x[j] * x[j];
  for (int j = 0; j < n; ++j) {
    atoms[j].weight = total > 0.0 ? x[j] * x[j] / total : 1.0 / n;
    atoms[j].angle = x[n + j];
  }
  // Guard the sum-to-one check against rounding.
  double sum = 0.0;
  for (const auto& a : atoms) sum += a.weight;
  for (auto& a : atoms) a.weight /= sum;
  return HerglotzAtoms(std::move(atoms));
}

LzParams decode_lz(const std::vector<double>& x) {
  LzParams p;
  p.c1 = std::clamp(x[0], 0.0, 2.0);
  p.gamma = std::polar(std::clamp(x[1], 0.0, 1.0), x[2]);
  p.z = std::polar(1.0, x[3]);
  return p;
}

HerglotzAtoms canonical(const HerglotzAtoms& atoms) {
  const Complex c1 = atoms.moment(1);
  const double shift = std::abs(c1) > 1e-12 ? -std::arg(c1) : 0.0;
  std::vector<HerglotzAtom> out = atoms.atoms();
  for (auto& a : out) {
    a.angle = std::fmod(a.angle + shift, kTwoPi);
    if (a.angle < 0.0) a.angle += kTwoPi;
  }
  return HerglotzAtoms(std::move(out));
}

struct StartOutcome {
  double value = -1.0;
  std::vector<double> x;
  StartPlan plan{StartKind::herglotz, 1};
  long evaluations = 0;
};

StartOutcome run_start(const Functional& f, const MindaClass& cls, const StartPlan& plan,
                       std::uint64_t seed, int index, int iterations) {
  SubStream rng(seed, static_cast<std::uint64_t>(index));
  std::vector<double> x;
  std::vector<double> step;
  if (plan.kind == StartKind::herglotz) {
    const int n = plan.atoms;
    if (n > 1) {
      for (int j = 0; j < n; ++j) x.push_back(0.1 + rng.uniform());
    }
    for (int j = 0; j < n; ++j) x.push_back(kTwoPi * rng.uniform());
    step.assign(x.size(), 0.5);
  } else {
    x = {2.0 * rng.uniform(), rng.uniform(), kTwoPi * rng.uniform(), kTwoPi * rng.uniform()};
    step = {0.5, 0.25, 0.5, 0.5};
  }

  long evals = 0;
  auto objective = [&](const std::vector<double>& y) {
    ++evals;
    if (plan.kind == StartKind::herglotz) return evaluate(f, cls, decode_atoms(y, plan.atoms));
    const LzParams p = decode_lz(y);
    return evaluate(f, cls.B(), lz_lift(p.c1, p.gamma, p.z));
  };

  double fx = objective(x);
  for (int it = 0; it < iterations; ++it) {
    const std::vector<double> base = x;
    bool improved = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> y = x;
        y[i] += sgn * step[i];
        const double fy = objective(y);
        if (fy > fx) {
          x = std::move(y);
          fx = fy;
          improved = true;
          break;
        }
      }
    }
    if (improved) {
      // Pattern move along the sweep's displacement.
      std::vector<double> y = x;
      for (std::size_t i = 0; i < x.size(); ++i) y[i] += x[i] - base[i];
      const double fy = objective(y);
      if (fy > fx) {
        x = std::move(y);
        fx = fy;
      }
    } else {
      double biggest = 0.0;
      for (double& s : step) {
        s *= 0.5;
        biggest = std::max(biggest, s);
      }
      if (biggest < 1e-11) break;
    }
  }
  return {fx, std::move(x), plan, evals};
}

}  // namespace

OracleResult maximize(const Functional& f, const MindaClass& cls, const SearchBudget& budget) {
  if (budget.starts <= 0 || budget.iterations <= 0) {
    throw DomainError("maximize: starts and iterations must be positive");
  }
  const std::vector<StartPlan> plans = plans_for(f);
  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(budget.starts));
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int i = next++; i < budget.starts; i = next++) {
      outcomes[i] = run_start(f, cls, plans[i % plans.size()], budget.seed, i, budget.iterations);
    }
  };
  int threads = budget.threads > 0 ? budget.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, budget.starts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  OracleResult out;
  out.max = -1.0;
  for (int i = 0; i < budget.starts; ++i) {
    out.evaluations += outcomes[i].evaluations;
    if (outcomes[i].value > out.max) {
      out.max = outcomes[i].value;
      out.start_index = i;
    }
  }
  const StartOutcome& best = outcomes[out.start_index];
  if (best.plan.kind == StartKind::herglotz) {
    out.atoms = canonical(decode_atoms(best.x, best.plan.atoms));
    out.c = herglotz_coeffs(*out.atoms);
    out.start_kind = "herglotz" + std::to_string(best.plan.atoms);
  } else {
    out.lz = decode_lz(best.x);
    out.c = lz_lift(out.lz->c1, out.lz->gamma, out.lz->z);
    out.start_kind = "lz";
  }
  return out;
}

// ---- bounds and witnesses ----------------------------------------------------

std::optional<BoundReport> bound_for(const Functional& f, const MindaClass& cls) {
  const PhiCoefficients& b = cls.B();
  const std::string& id = cls.is_custom() ? std::string() : cls.id();
  auto tag = [&](BoundReport r) {
    r.class_id = cls.is_custom() ? cls.name() : cls.id();
    return r;
  };
  auto table = [&](int n) -> std::optional<BoundReport> {
    if (id != "se" && id != "sr") return std::nullopt;
    return class_inverse_bounds(id)[n - 2];
  };
  switch (f.kind) {
    case FunctionalKind::absA2: return tag(abs_a2_inverse_bound(b.B1));
    case FunctionalKind::absA3: {
      BoundReport r = fs_inverse_bound(b.B1, b.B2, 0.0);
      r.label = "|A3|";
      return tag(r);
    }
    case FunctionalKind::absA4: return table(4);
    case FunctionalKind::absA5: return table(5);
    case FunctionalKind::fs_inverse: return tag(fs_inverse_bound(b.B1, b.B2, f.mu));
    case FunctionalKind::hankel2_inverse: return tag(hankel2_inverse_bound(b.B1, b.B2, b.B3));
    default: break;
  }
  if (id != "sr") return std::nullopt;
  switch (f.kind) {
    case FunctionalKind::abs_an_direct:
      if (f.n == 2) return sr_direct_bounds(0.0)[1];
      if (f.n == 3) return sr_direct_bounds(0.0)[2];
      if (f.n <= 8) return sr_conjectures().an_bounds[f.n - 2];
      return std::nullopt;
    case FunctionalKind::fs_direct: return sr_direct_bounds(f.mu.real())[0];
    case FunctionalKind::hankel2_direct: return sr_direct_bounds(0.0)[3];
    case FunctionalKind::a2a3_minus_a4: return sr_direct_bounds(0.0)[4];
    case FunctionalKind::h3_direct: return sr_conjectures().h3_bound;
    default: return std::nullopt;
  }
}

HerglotzAtoms m_fold_atoms(int m) {
  if (m < 1) throw DomainError("m_fold_atoms: m must be >= 1");
  std::vector<HerglotzAtom> atoms;
  for (int j = 0; j < m; ++j) atoms.push_back({1.0 / m, kTwoPi * j / m});
  return HerglotzAtoms(std::move(atoms));
}

std::optional<NamedWitness> sharp_witness(const Functional& f, const MindaClass& cls) {
  const auto bound = bound_for(f, cls);
  if (!bound || !bound->sharp) return std::nullopt;
  const std::string id = cls.is_custom() ? std::string() : cls.id();
  auto named = [&](int m) -> NamedWitness {
    std::string name = "m=" + std::to_string(m);
    if (id == "se" && m == 1) name = "f0";
    if (id == "sr") name = "f" + std::to_string(m);
    return {name, m_fold_atoms(m)};
  };
  switch (f.kind) {
    case FunctionalKind::absA2: return named(1);
    case FunctionalKind::absA3:
    case FunctionalKind::fs_inverse: return named(bound->case_id == "plateau" ? 2 : 1);
    case FunctionalKind::absA4: return named(id == "sr" ? 3 : 1);
    case FunctionalKind::absA5: return named(1);
    case FunctionalKind::hankel2_direct: return named(2);
    default: return std::nullopt;
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::sound: return "SOUND";
    case Verdict::sharp_confirmed: return "SHARP-CONFIRMED";
    case Verdict::violation: return "VIOLATION";
  }
  return "?";
}

VerifyReport verify_bound(const Functional& f, const MindaClass& cls, const BoundReport& bound,
                          const SearchBudget& budget, double sharp_tol) {
  VerifyReport rep;
  rep.bound = bound;
  rep.search = maximize(f, cls, budget);
  rep.empirical = rep.search.max;
  if (const auto w = sharp_witness(f, cls); w && bound.sharp) {
    rep.witness_id = w->extremal_id;
    rep.witness_value = evaluate(f, cls, w->atoms);
    rep.witness_attains = std::abs(*rep.witness_value - bound.value) <= kSoundTol;
  }
  if (rep.empirical > bound.value + kSoundTol) {
    rep.verdict = Verdict::violation;
  } else if (bound.sharp && rep.empirical >= bound.value - sharp_tol) {
    rep.verdict = Verdict::sharp_confirmed;
  } else {
    rep.verdict = Verdict::sound;
  }
  return rep;
}

std::vector<MatrixEntry> verification_matrix() {
  std::vector<MatrixEntry> out;
  auto add = [&](const char* cls, std::initializer_list<const char*> fs) {
    for (const char* f : fs) out.push_back({Functional::parse(f), cls});
  };
  add("se", {"absA2", "absA3", "absA4", "absA5", "fs_inverse(0.5)", "fs_inverse(1.5)",
             "fs_inverse(3)", "hankel2_inverse"});
  add("sr", {"absA2", "absA3", "absA4", "absA5", "fs_inverse(0.5)", "fs_inverse(3)",
             "hankel2_inverse", "abs_an_direct(2)", "abs_an_direct(3)", "fs_direct(0.5)",
             "fs_direct(2)", "hankel2_direct", "a2a3_minus_a4"});
  for (const char* cls : {"s", "sl", "sq", "sc"}) {
    add(cls, {"absA2", "absA3", "fs_inverse(2)", "hankel2_inverse"});
  }
  return out;
}

std::vector<MatrixEntry> conjecture_matrix() {
  std::vector<MatrixEntry> out;
  for (const char* f : {"abs_an_direct(4)", "abs_an_direct(5)", "abs_an_direct(6)", "h3_direct"}) {
    out.push_back({Functional::parse(f), "sr"});
  }
  return out;
}

}  // namespace gft
