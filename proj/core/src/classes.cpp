#include "gft/classes.hpp"

#include <cmath>
#include <utility>

#include <json.hpp>

#include "gft/constants.hpp"
#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr double kUnitTol = 1e-12;

double param_or(const ClassParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double require_param(const ClassParams& params, const std::string& key, std::string_view id) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw DomainError("class '" + std::string(id) + "' requires parameter '" + key + "'");
  }
  return it->second;
}

Series one(int order) { return Series::constant(1.0, order); }
Series z_(int order) { return Series::identity(order); }

// (1 + a z) / (1 + b z)
Series mobius_series(double a, double b, int order) {
  return (one(order) + a * z_(order)) / (one(order) + b * z_(order));
}

Series sqrt_series(const Series& s) { return exp(Complex(0.5) * log(s)); }

}  // namespace

SchwarzSpec::SchwarzSpec(Complex epsilon, int power) : epsilon_(epsilon), power_(power) {
  if (power < 1) throw DomainError("Schwarz power m must be >= 1, got " + std::to_string(power));
  if (std::abs(std::abs(epsilon) - 1.0) > kUnitTol) {
    throw DomainError("Schwarz rotation epsilon must satisfy |epsilon| = 1");
  }
}

HerglotzAtoms::HerglotzAtoms(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("Herglotz measure needs at least one atom");
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.weight >= 0.0) || !std::isfinite(a.angle)) {
      throw DomainError("Herglotz atom weights must be >= 0 with finite angles");
    }
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kUnitTol) {
    throw DomainError("Herglotz atom weights must sum to 1");
  }
}

Complex HerglotzAtoms::moment(int n) const {
  Complex acc{};
  for (const auto& a : atoms_) acc += a.weight * std::polar(1.0, n * a.angle);
  return 2.0 * acc;
}

MindaClass::MindaClass(std::string id, std::string name, PhiFunction phi, Series series,
                       ClassParams params, bool bounded, bool custom)
    : id_(std::move(id)),
      name_(std::move(name)),
      phi_(std::move(phi)),
      phi_series_(std::move(series)),
      params_(std::move(params)),
      bounded_(bounded),
      custom_(custom) {
  if (phi_series_.order() < 4) throw DomainError("class series order must be >= 4");
  if (std::abs(phi_series_[0] - Complex(1.0)) > kUnitTol) {
    throw DomainError("phi(0) must equal 1");
  }
  b_ = {phi_series_[1].real(), phi_series_[2].real(), phi_series_[3].real(),
        phi_series_[4].real()};
  if (!(b_.B1 > 0.0)) throw DomainError("phi'(0) = B1 must be positive");
}

std::vector<std::string> MindaClass::builtin_ids() {
  return {"s", "s_alpha", "janowski", "se", "sr", "sl", "sq", "sc", "bs", "m_beta"};
}

MindaClass MindaClass::builtin(std::string_view id, const ClassParams& params, int order) {
  if (order < 4) throw DomainError("class series order must be >= 4");
  const Series z = z_(order);
  const Series o = one(order);

  if (id == "s") {
    return {"s", "S*", [](Complex w) { return (1.0 + w) / (1.0 - w); }, mobius_series(1, -1, order),
            {}, false, false};
  }
  if (id == "s_alpha") {
    const double alpha = require_param(params, "alpha", id);
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("S*(alpha) needs 0 <= alpha < 1");
    const double a = 1.0 - 2.0 * alpha;
    return {"s_alpha", "S*(alpha)", [a](Complex w) { return (1.0 + a * w) / (1.0 - w); },
            mobius_series(a, -1, order), {{"alpha", alpha}}, false, false};
  }
  if (id == "janowski") {
    const double A = require_param(params, "A", id);
    const double B = require_param(params, "B", id);
    if (!(-1.0 <= B && B < A && A <= 1.0)) throw DomainError("Janowski class needs -1 <= B < A <= 1");
    return {"janowski", "S*[A,B]", [A, B](Complex w) { return (1.0 + A * w) / (1.0 + B * w); },
            mobius_series(A, B, order), {{"A", A}, {"B", B}}, B > -1.0, false};
  }
  if (id == "se") {
    return {"se", "S*_e", [](Complex w) { return std::exp(w); }, exp(z), {}, true, false};
  }
  if (id == "sr") {
    const double k = kPhiR;
    Series s = o + (1.0 / k) * z * ((Complex(k) * o + z) / (Complex(k) * o - z));
    return {"sr", "S*_R", [k](Complex w) { return 1.0 + (w / k) * (k + w) / (k - w); },
            std::move(s), {}, true, false};
  }
  if (id == "sl") {
    return {"sl", "S*_L", [](Complex w) { return std::sqrt(1.0 + w); }, sqrt_series(o + z), {},
            true, false};
  }
  if (id == "sq") {
    return {"sq", "S*_q", [](Complex w) { return w + std::sqrt(1.0 + w * w); },
            z + sqrt_series(o + z * z), {}, true, false};
  }
  if (id == "sc") {
    return {"sc", "S*_C", [](Complex w) { return 1.0 + 4.0 * w / 3.0 + 2.0 * w * w / 3.0; },
            o + Complex(4.0 / 3.0) * z + Complex(2.0 / 3.0) * z * z, {}, true, false};
  }
  if (id == "bs") {
    const double alpha = require_param(params, "alpha", id);
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("BS*(alpha) needs 0 <= alpha <= 1");
    return {"bs", "BS*(alpha)", [alpha](Complex w) { return 1.0 + w / (1.0 - alpha * w * w); },
            o + z / (o - alpha * z * z), {{"alpha", alpha}}, alpha < 1.0, false};
  }
  if (id == "m_beta") {
    const double beta = require_param(params, "beta", id);
    if (!(beta > 1.0)) throw DomainError("M(beta) needs beta > 1");
    const double a = 2.0 * beta - 1.0;
    return {"m_beta", "M(beta)", [a](Complex w) { return (1.0 + a * w) / (1.0 + w); },
            mobius_series(a, 1, order), {{"beta", beta}}, false, false};
  }
  throw DomainError("unknown built-in class '" + std::string(id) + "'");
}

MindaClass MindaClass::custom(std::string name, const PhiCoefficients& b, int order) {
  if (order < 4) throw DomainError("class series order must be >= 4");
  Series s({1.0, b.B1, b.B2, b.B3, b.B4}, order);
  auto phi = [s](Complex w) { return s.evaluate(w); };
  return {"custom", std::move(name), std::move(phi), std::move(s), {}, true, true};
}

MindaClass MindaClass::from_descriptor(std::string_view json_text, int order) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("class descriptor: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("class descriptor must be a JSON object");

  std::optional<PhiCoefficients> b;
  if (doc.contains("B")) {
    const auto& arr = doc.at("B");
    if (!arr.is_array() || arr.size() != 4) throw DomainError("descriptor field B must hold 4 numbers");
    for (const auto& v : arr) {
      if (!v.is_number()) throw DomainError("descriptor field B must hold 4 numbers");
    }
    b = PhiCoefficients{arr[0].get<double>(), arr[1].get<double>(), arr[2].get<double>(),
                        arr[3].get<double>()};
  }
  ClassParams params;
  if (doc.contains("params")) {
    if (!doc.at("params").is_object()) throw DomainError("descriptor field params must be an object");
    for (const auto& [key, value] : doc.at("params").items()) {
      if (!value.is_number()) throw DomainError("descriptor params must be numeric");
      params[key] = value.get<double>();
    }
  }
  const std::string name = doc.value("name", std::string("custom"));

  if (doc.contains("builtin") && !doc.at("builtin").is_null()) {
    MindaClass cls = builtin(doc.at("builtin").get<std::string>(), params, order);
    if (b) {
      const PhiCoefficients& ref = cls.B();
      const double diff = std::max({std::abs(ref.B1 - b->B1), std::abs(ref.B2 - b->B2),
                                    std::abs(ref.B3 - b->B3), std::abs(ref.B4 - b->B4)});
      if (diff > 1e-9) throw DomainError("descriptor B does not match built-in class coefficients");
    }
    cls.name_ = name;
    return cls;
  }
  if (!b) throw DomainError("descriptor needs either 'builtin' or 'B'");
  return custom(name, *b, order);
}

Complex MindaClass::boundary(double t) const { return phi_(std::polar(1.0, t)); }

MindaClass MindaClass::with_order(int order) const {
  if (custom_) {
    MindaClass c = custom(name_, b_, order);
    return c;
  }
  MindaClass c = builtin(id_, params_, order);
  c.name_ = name_;
  return c;
}

DirectCoeffs direct_coeffs(const PhiCoefficients& b, const CaratheodoryCoeffs& c) {
  if (!(b.B1 > 0.0)) throw DomainError("direct_coeffs: B1 must be positive");
  const double B1 = b.B1, B2 = b.B2, B3 = b.B3, B4 = b.B4;
  const Complex c1 = c.c1, c2 = c.c2, c3 = c.c3;
  DirectCoeffs a;
  a.a2 = 0.5 * B1 * c1;
  a.a3 = ((B1 * B1 - B1 + B2) * c1 * c1 + 2.0 * B1 * c2) / 8.0;
  a.a4 = ((B1 * B1 * B1 - 3 * B1 * B1 + 3 * B1 * B2 + 2 * B1 - 4 * B2 + 2 * B3) * c1 * c1 * c1 +
          2.0 * (3 * B1 * B1 - 4 * B1 + 4 * B2) * c1 * c2 + 8.0 * B1 * c3) /
         48.0;
  if (c.c4) {
    const Complex c4 = *c.c4;
    const double t4 = B1 * B1 * B1 * B1 - 6 * B1 * B1 * B1 + 6 * B1 * B1 * B2 + 11 * B1 * B1 -
                      22 * B1 * B2 + 3 * B2 * B2 + 8 * B1 * B3 - 6 * B1 + 18 * B2 - 18 * B3 +
                      6 * B4;
    const double t22 = 3 * B1 * B1 * B1 - 11 * B1 * B1 + 11 * B1 * B2 + 9 * B1 - 18 * B2 + 9 * B3;
    a.a5 = (t4 * c1 * c1 * c1 * c1 + 4.0 * t22 * c1 * c1 * c2 +
            12.0 * (B1 * B1 - 2 * B1 + 2 * B2) * c2 * c2 +
            16.0 * (2 * B1 * B1 - 3 * B1 + 3 * B2) * c1 * c3 + 48.0 * B1 * c4) /
           384.0;
  }
  return a;
}

InverseCoeffs inverse_from_direct(const DirectCoeffs& a) {
  const Complex a2 = a.a2, a3 = a.a3, a4 = a.a4;
  InverseCoeffs A;
  A.A2 = -a2;
  A.A3 = 2.0 * a2 * a2 - a3;
  A.A4 = -5.0 * a2 * a2 * a2 + 5.0 * a2 * a3 - a4;
  if (a.a5) {
    A.A5 = 14.0 * a2 * a2 * a2 * a2 - 21.0 * a2 * a2 * a3 + 6.0 * a2 * a4 + 3.0 * a3 * a3 - *a.a5;
  }
  return A;
}

InverseCoeffs inverse_coeffs(const PhiCoefficients& b, const CaratheodoryCoeffs& c) {
  if (!(b.B1 > 0.0)) throw DomainError("inverse_coeffs: B1 must be positive");
  const double B1 = b.B1, B2 = b.B2, B3 = b.B3, B4 = b.B4;
  const Complex c1 = c.c1, c2 = c.c2, c3 = c.c3;
  InverseCoeffs A;
  A.A2 = -0.5 * B1 * c1;
  A.A3 = ((3 * B1 * B1 + B1 - B2) * c1 * c1 - 2.0 * B1 * c2) / 8.0;
  A.A4 = ((-8 * B1 * B1 * B1 - 6 * B1 * B1 - B1 + 2 * B2 + 6 * B1 * B2 - B3) * c1 * c1 * c1 +
          4.0 * (3 * B1 * B1 + B1 - B2) * c1 * c2 - 4.0 * B1 * c3) /
         24.0;
  if (c.c4) {
    const Complex c4 = *c.c4;
    const double t4 = 125 * B1 * B1 * B1 * B1 + 150 * B1 * B1 * B1 + 55 * B1 * B1 + 6 * B1 +
                      15 * B2 * B2 - 18 * B2 - 150 * B1 * B1 * B2 - 110 * B1 * B2 + 18 * B3 +
                      40 * B1 * B3 - 6 * B4;
    const double t22 = -75 * B1 * B1 * B1 - 55 * B1 * B1 - 9 * B1 + 18 * B2 + 55 * B1 * B2 - 9 * B3;
    A.A5 = (t4 * c1 * c1 * c1 * c1 + 4.0 * t22 * c1 * c1 * c2 +
            12.0 * (5 * B1 * B1 + 2 * B1 - 2 * B2) * c2 * c2 +
            16.0 * (10 * B1 * B1 + 3 * B1 - 3 * B2) * c1 * c3 - 48.0 * B1 * c4) /
           384.0;
  }
  return A;
}

CaratheodoryCoeffs lz_lift(double c1, Complex gamma, Complex z) {
  if (!(c1 >= 0.0 && c1 <= 2.0)) throw DomainError("lz_lift: c1 must lie in [0,2]");
  if (!(std::abs(gamma) <= 1.0 + kUnitTol)) throw DomainError("lz_lift: |gamma| must be <= 1");
  if (!(std::abs(z) <= 1.0 + kUnitTol)) throw DomainError("lz_lift: |z| must be <= 1");
  const double s = 4.0 - c1 * c1;
  const double g2 = std::norm(gamma);
  CaratheodoryCoeffs out;
  out.c1 = c1;
  out.c2 = 0.5 * (c1 * c1 + gamma * s);
  out.c3 = 0.25 * (c1 * c1 * c1 + 2.0 * c1 * s * gamma - c1 * s * gamma * gamma +
                   2.0 * s * (1.0 - g2) * z);
  return out;
}

CaratheodoryCoeffs herglotz_coeffs(const HerglotzAtoms& atoms) {
  return {atoms.moment(1), atoms.moment(2), atoms.moment(3), atoms.moment(4)};
}

Series herglotz_series(const HerglotzAtoms& atoms, int order) {
  Series p(order);
  p[0] = 1.0;
  for (int n = 1; n <= order; ++n) p[n] = atoms.moment(n);
  return p;
}

namespace {

// z * exp(int_0^z (q(t) - 1)/t dt) for q with q(0) = 1.
Series starlike_from_quotient(const Series& q) {
  const Series g = exp(integrate_pminus1_over_t(q));
  Series f(q.order());
  for (int n = 1; n <= q.order(); ++n) f[n] = g[n - 1];
  return f;
}

}  // namespace

Series generate_function(const MindaClass& phi, const SchwarzSpec& w, int order) {
  const Series inner = Series::monomial(w.epsilon(), w.power(), order);
  const Series q = compose(phi.phi_series().with_order(order), inner);
  return starlike_from_quotient(q);
}

Series function_from_caratheodory(const MindaClass& phi, const Series& p) {
  const int order = p.order();
  const Series o = Series::constant(1.0, order);
  const Series w = (p - o) / (p + o);
  const Series q = compose(phi.phi_series().with_order(order), w);
  return starlike_from_quotient(q);
}

DirectCoeffs direct_from_series(const Series& f) {
  if (f.order() < 4) throw DomainError("direct_from_series: need order >= 4");
  DirectCoeffs a{f[2], f[3], f[4], std::nullopt};
  if (f.order() >= 5) a.a5 = f[5];
  return a;
}

}  // namespace gft
