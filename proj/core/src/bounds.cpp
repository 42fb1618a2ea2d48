#include "gft/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gft/constants.hpp"
#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr double kK = kPhiR;

void require_b1(double B1, const char* what) {
  if (!(B1 > 0.0)) throw DomainError(std::string(what) + ": B1 must be positive");
}

BoundReport make_report(std::string label, double value, std::string case_id, PhiCoefficients b,
                        std::string class_id, bool sharp) {
  BoundReport r;
  r.label = std::move(label);
  r.value = value;
  r.case_id = std::move(case_id);
  r.B = b;
  r.class_id = std::move(class_id);
  r.sharp = sharp;
  return r;
}

PhiCoefficients sr_b() { return {1 / kK, 2 / (kK * kK), 2 / (kK * kK * kK), 2 / std::pow(kK, 4)}; }
PhiCoefficients se_b() { return {1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0}; }

}  // namespace

const char* to_string(BoundStatus status) {
  return status == BoundStatus::theorem ? "theorem" : "conjecture";
}

double caratheodory_fs(Complex nu) { return 2.0 * std::max(1.0, std::abs(nu - 1.0)); }

Complex fs_inverse_nu(double B1, double B2, Complex mu) {
  require_b1(B1, "fs_inverse_nu");
  return ((3.0 - 2.0 * mu) * B1 * B1 + B1 - B2) / B1;
}

BoundReport fs_inverse_bound(double B1, double B2, Complex mu) {
  const Complex nu = fs_inverse_nu(B1, B2, mu);
  const double slope = std::abs(nu - 1.0);
  BoundReport r = make_report("|A3 - mu A2^2|", 0.5 * B1 * std::max(1.0, slope),
                              slope > 1.0 ? "slope" : "plateau", {B1, B2, 0, 0}, "", true);
  r.mu = mu;
  return r;
}

BoundReport abs_a2_inverse_bound(double B1) {
  require_b1(B1, "abs_a2_inverse_bound");
  return make_report("|A2|", B1, "direct", {B1, 0, 0, 0}, "", true);
}

QuadMax quad_max_on_interval(double P, double Q, double R) {
  // Branches follow the displayed split; boundaries are shared, first match wins.
  if (Q <= 0.0 && P <= -Q / 4.0) return {R, "case1", 0.0};
  if ((Q >= 0.0 && P >= -Q / 8.0) || (Q <= 0.0 && P >= -Q / 4.0)) {
    return {16.0 * P + 4.0 * Q + R, "case2", 4.0};
  }
  // Remaining: Q > 0 and P < -Q/8 < 0, vertex inside (0, 4).
  return {(4.0 * P * R - Q * Q) / (4.0 * P), "case3", -Q / (2.0 * P)};
}

PqrTerms hankel2_pqr(double B1, double B2, double B3) {
  require_b1(B1, "hankel2_pqr");
  const double x = std::abs(5 * B1 * B1 * B1 - 3 * B2 * B2 / B1 + 4 * B3 - 6 * B1 * B2);
  const double y = std::abs(3 * B1 * B1 - B2);
  return {x - 2 * y - B1, 8 * (y - B1), 48 * B1};
}

double hankel2_case_formula(const std::string& case_id, double B1, double B2, double B3) {
  const double x = std::abs(5 * std::pow(B1, 4) - 6 * B1 * B1 * B2 - 3 * B2 * B2 + 4 * B1 * B3);
  const double y = std::abs(3 * B1 * B1 - B2);
  if (case_id == "case1") return B1 * B1 / 4.0;
  if (case_id == "case2") return x / 12.0;
  if (case_id == "case3") {
    const double num = 3 * x - 4 * B1 * y - y * y - 4 * B1 * B1;
    const double den = x - 2 * B1 * y - B1 * B1;
    return B1 * B1 / 12.0 * num / den;
  }
  throw DomainError("hankel2_case_formula: unknown case '" + case_id + "'");
}

BoundReport hankel2_inverse_bound(double B1, double B2, double B3) {
  require_b1(B1, "hankel2_inverse_bound");
  const PqrTerms t = hankel2_pqr(B1, B2, B3);
  const QuadMax q = quad_max_on_interval(t.P, t.Q, t.R);
  const double value = B1 / 192.0 * q.value;
  const double displayed = hankel2_case_formula(q.case_id, B1, B2, B3);
  if (std::abs(value - displayed) > 1e-12 * std::max(1.0, std::abs(value))) {
    throw std::logic_error("hankel2_inverse_bound: P,Q,R route and displayed " + q.case_id +
                           " formula disagree");
  }
  return make_report("|A2 A4 - A3^2|", value, q.case_id, {B1, B2, B3, 0}, "", false);
}

std::vector<BoundReport> class_inverse_bounds(const std::string& class_id) {
  if (class_id == "se") {
    const PhiCoefficients b = se_b();
    return {make_report("|A2|", 1.0, "se", b, "se", true),
            make_report("|A3|", 5.0 / 4.0, "se", b, "se", true),
            make_report("|A4|", 31.0 / 18.0, "se", b, "se", true),
            make_report("|A5|", 361.0 / 144.0, "se", b, "se", true)};
  }
  if (class_id == "sr") {
    const PhiCoefficients b = sr_b();
    const double s = std::numbers::sqrt2 - 1.0;
    return {make_report("|A2|", s, "sr", b, "sr", true),
            make_report("|A3|", s / 2.0, "sr", b, "sr", true),
            make_report("|A4|", s / 3.0, "sr", b, "sr", true),
            make_report("|A5|", 69.0 / std::numbers::sqrt2 - 387.0 / 8.0, "sr", b, "sr", false)};
  }
  throw NotImplementedError("class_inverse_bounds: no A2..A5 table for class '" + class_id + "'");
}

double sr_a2a3_a4_objective(double c) {
  const double k = kK;
  const double s = 4.0 - c * c;
  return (c * c * c + 4 * k * s * c + k * k * s * c + 2 * k * k * s) / (24 * k * k * k);
}

ScalarMax sr_a2a3_a4_numeric() {
  // G is a cubic in c: maximize over the endpoints and the roots of G'.
  const double k = kK;
  // G'(c) * 24k^3 = 3c^2 + (4k + k^2)(4 - 3c^2) - 4k^2 c
  const double a = 3.0 - 3.0 * (4 * k + k * k);
  const double b = -4.0 * k * k;
  const double cc = 4.0 * (4 * k + k * k);
  std::vector<double> candidates{0.0, 2.0};
  const double disc = b * b - 4 * a * cc;
  if (disc >= 0.0) {
    for (double sgn : {-1.0, 1.0}) {
      const double r = (-b + sgn * std::sqrt(disc)) / (2 * a);
      if (r >= 0.0 && r <= 2.0) candidates.push_back(r);
    }
  }
  ScalarMax best{0.0, -1.0};
  for (double c : candidates) {
    const double g = sr_a2a3_a4_objective(c);
    if (g > best.value) best = {c, g};
  }
  return best;
}

double sr_a2a3_a4_closed_form() {
  const double r2 = std::numbers::sqrt2;
  return (5220 + 3683 * r2 + 359 * std::sqrt(359 + 246 * r2) + 246 * std::sqrt(718 + 492 * r2)) /
         (1458 * std::pow(1 + r2, 5));
}

std::vector<BoundReport> sr_direct_bounds(double mu) {
  const double k = kK;
  const PhiCoefficients b = sr_b();
  const double slope = std::abs(2 * mu - 3) / k;
  BoundReport fs = make_report("|a3 - mu a2^2|", std::max(1.0, slope) / (2 * k),
                               slope > 1.0 ? "slope" : "plateau", b, "sr", false);
  fs.mu = mu;

  const double numeric = sr_a2a3_a4_numeric().value;
  const double printed = sr_a2a3_a4_closed_form();
  if (std::abs(numeric - printed) > 1e-6) {
    throw std::logic_error("sr_direct_bounds: |a2 a3 - a4| closed form and numeric max disagree");
  }
  return {fs,
          make_report("|a2|", 1 / k, "fekete-szego mu=0 family", b, "sr", false),
          make_report("|a3|", 3 / (2 * k * k), "fekete-szego mu=0", b, "sr", false),
          make_report("|a2 a4 - a3^2|", 1 / (4 * k * k), "hankel", b, "sr", true),
          make_report("|a2 a3 - a4|", numeric, "max G on [0,2]", b, "sr", false)};
}

double sr_conjectured_an(int n) {
  if (n < 2) throw DomainError("sr_conjectured_an: n must be >= 2");
  double sum = 0.0;
  double fact = 1.0;
  for (int p = 0; p <= n - 1; ++p) {
    if (p > 0) fact *= p;
    sum += ((p % 2 == 0) ? 1.0 : -1.0) * (n - p) / fact;
  }
  return sum / std::pow(kK, n - 1);
}

double sr_conjectured_h3() {
  const double k = kK;
  const double zeta = std::sqrt(-12 * k + 45 * k * k + 24 * k * k * k + 4 * std::pow(k, 4));
  const double eta = -1 + 4 * k + k * k;
  const double inner = 144 * std::pow(k, 4) + 16 * std::pow(k, 5) - 24 * zeta +
                       12 * k * k * (-15 + 4 * zeta) + k * k * k * (243 + 8 * zeta) +
                       9 * k * (3 + 10 * zeta);
  return (4293 + 1458 * k + 88 * inner / (eta * eta)) / (3888 * std::pow(k, 5));
}

ConjectureSet sr_conjectures() {
  ConjectureSet out;
  const PhiCoefficients b = sr_b();
  for (int n = 2; n <= 8; ++n) {
    BoundReport r = make_report("|a" + std::to_string(n) + "|", sr_conjectured_an(n),
                                "conjecture", b, "sr", false);
    r.status = BoundStatus::conjecture;
    out.an_bounds.push_back(std::move(r));
  }
  out.h3_bound = make_report("|H3(1)|", sr_conjectured_h3(), "conjecture", b, "sr", false);
  out.h3_bound.status = BoundStatus::conjecture;
  return out;
}

}  // namespace gft
