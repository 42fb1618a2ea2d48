#include "gft/radii.hpp"

#include <cmath>
#include <sstream>

#include "gft/constants.hpp"
#include "gft/errors.hpp"
#include "gft/extremal.hpp"

namespace gft {

namespace {

constexpr double kK = kPhiR;
constexpr double kSqrt2 = std::numbers::sqrt2;

double need(std::optional<double> param, const char* what) {
  if (!param) throw DomainError(std::string(what) + " needs a parameter");
  return *param;
}

// Smallest positive root of A r^2 - B r + C = 0 with B, C > 0.
double small_root(double A, double B, double C) {
  return 2.0 * C / (B + std::sqrt(B * B - 4.0 * A * C));
}

// sqrt of the smaller root in s = r^2 of 4 s^2 - 4 s + c = 0.
double quartic_small_root(double c) { return std::sqrt((1.0 - std::sqrt(1.0 - c)) / 2.0); }

double phi_r_max_modulus_shift(double r) { return (r / kK) * (kK + r) / (kK - r); }

RadiusResult make(double value, std::string equation, std::string witness,
                  std::optional<double> param = std::nullopt, std::string note = {}) {
  RadiusResult r;
  r.value = value;
  r.defining_equation = std::move(equation);
  r.method = RadiusMethod::closed_form;
  r.sharp_witness = std::move(witness);
  r.param = param;
  r.note = std::move(note);
  return r;
}

}  // namespace

const char* to_string(RadiusMethod method) {
  return method == RadiusMethod::closed_form ? "closed_form" : "bisection";
}

double thmD_a_printed(double alpha) {
  return (2.0 - alpha + std::sqrt(7.0 - 6.0 * alpha + alpha * alpha)) / (-3.0 + 2.0 * alpha);
}

double thmD_a_quadratic_root(double alpha) {
  return (-(2.0 - alpha) + std::sqrt(7.0 - 6.0 * alpha + alpha * alpha)) / (3.0 - 2.0 * alpha);
}

RadiusResult radius_thmD(char which, std::optional<double> param) {
  switch (which) {
    case 'a': {
      const double alpha = param.value_or(0.0);
      if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("thmD(a) needs 0 <= alpha < 1");
      const double A = 2.0 * kSqrt2 - 1.0 - 2.0 * alpha;
      const double value = small_root(A, 2.0 * (2.0 - alpha), 3.0 - 2.0 * kSqrt2);
      std::ostringstream note;
      note.precision(12);
      note << "printed rho0 = (2-a+sqrt(7-6a+a^2))/(-3+2a) = " << thmD_a_printed(alpha)
           << "; root of -1+2(2-a)r+(3-2a)r^2 = " << thmD_a_quadratic_root(alpha)
           << " (uses r_a = 2 - a_c, but the centre lies left of sqrt2)";
      return make(value, "(2sqrt2-1-2a) r^2 - 2(2-a) r + (3-2sqrt2) = 0, smallest positive root",
                  "cs_pair", alpha, note.str());
    }
    case 'b': {
      const double value = quartic_small_root(57.0 - 40.0 * kSqrt2);
      const double printed = (-2.0 + kSqrt2 + std::sqrt(-4.0 + 4.0 * kSqrt2)) / 2.0;
      std::ostringstream note;
      note.precision(12);
      note << "printed closed form = " << printed;
      return make(value, "4r^4 - 4r^2 + (57 - 40sqrt2) = 0, smallest positive root", "f_q",
                  std::nullopt, note.str());
    }
    case 'c': {
      const double alpha = need(param, "thmD(c)");
      if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("thmD(c) needs 0 < alpha <= 1");
      const double b = 3.0 + 2.0 * kSqrt2;
      const double value = 2.0 / (b + std::sqrt(b * b + 4.0 * alpha));
      return make(value, "alpha r^2 + (3+2sqrt2) r - 1 = 0, positive root", "f_B", alpha);
    }
    case 'd': {
      const double beta = need(param, "thmD(d)");
      if (!(beta > 1.0)) throw DomainError("thmD(d) needs beta > 1");
      if (beta >= 2.0) return make(1.0, "beta >= 2: whole disk", "h", beta);
      const double value = kK * (-beta + std::sqrt(beta * beta + 4.0 * beta - 4.0)) / 2.0;
      return make(value, "r^2 + k beta r - k^2 (beta - 1) = 0, positive root", "h", beta);
    }
    case 'e': {
      const double value =
          (kSqrt2 - 1.0) * (-4.0 - 3.0 * kSqrt2 + std::sqrt(62.0 + 44.0 * kSqrt2)) / 2.0;
      return make(value, "(r/k)(k+r)/(k-r) = sqrt2 - 1", "h");
    }
    default:
      throw DomainError(std::string("thmD: unknown branch '") + which + "'");
  }
}

RadiusResult radius_thmE(char which, std::optional<double> param) {
  switch (which) {
    case 'a':
      return make(1.0 - std::exp(-2.0), "1 - sqrt(1 - r) = 1 - 1/e", "f_L");
    case 'b': {
      const double c = std::pow((kE * kE - 1.0) / (kE * kE), 2);
      const double value = quartic_small_root(c);
      const double printed =
          (-2.0 * kE + std::sqrt(-4.0 * kE * kE + 8.0 * std::pow(kE, 4))) / (4.0 * kE * kE);
      std::ostringstream note;
      note.precision(12);
      note << "printed closed form = " << printed;
      return make(value, "4r^4 - 4r^2 + ((e^2-1)/e^2)^2 = 0, smallest positive root", "f_q",
                  std::nullopt, note.str());
    }
    case 'c': {
      const double value =
          kK * (-(2.0 * kE - 1.0) + std::sqrt(8.0 * kE * kE - 8.0 * kE + 1.0)) / (2.0 * kE);
      return make(value, "e r^2 + k(2e-1) r - k^2 (e-1) = 0, positive root", "h");
    }
    case 'd': {
      const double value = (-2.0 * kE + std::sqrt(10.0 * kE * kE - 6.0 * kE)) / (2.0 * kE);
      std::ostringstream note;
      note.precision(12);
      note << "printed sqrt(10e^2 - 4e) gives "
           << (-2.0 * kE + std::sqrt(10.0 * kE * kE - 4.0 * kE)) / (2.0 * kE);
      return make(value, "2e r^2 + 4e r - 3(e-1) = 0, positive root", "f_C", std::nullopt,
                  note.str());
    }
    case 'e': {
      const double alpha = need(param, "thmE(e)");
      if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("thmE(e) needs 0 < alpha <= 1");
      const std::string eq = "alpha(e-1) r^2 + e r - (e-1) = 0, positive root";
      if (alpha < 1e-8) return make((kE - 1.0) / kE, eq + " (alpha -> 0 limit)", "f_B", alpha);
      const double value = (-kE + std::sqrt(kE * kE + 4.0 * std::pow(kE - 1.0, 2) * alpha)) /
                           (2.0 * alpha * (kE - 1.0));
      return make(value, eq, "f_B", alpha);
    }
    default:
      throw DomainError(std::string("thmE: unknown branch '") + which + "'");
  }
}

RadiusResult radius_closed_form(char theorem, char which, std::optional<double> param) {
  if (theorem == 'D') return radius_thmD(which, param);
  if (theorem == 'E') return radius_thmE(which, param);
  throw DomainError(std::string("unknown radius theorem '") + theorem + "'");
}

ProofDisk proof_disk(char theorem, char which, std::optional<double> param) {
  const RealFn one = [](double) { return 1.0; };
  const RealFn sr_shift = phi_r_max_modulus_shift;
  const RealFn lune = [](double r) { return 1.0 + r - std::sqrt(1.0 - r * r); };
  // Validates the parameter the same way as the closed form.
  radius_closed_form(theorem, which, param);
  if (theorem == 'D') {
    switch (which) {
      case 'a': {
        const double alpha = param.value_or(0.0);
        return {[alpha](double r) { return (1.0 + (1.0 - 2.0 * alpha) * r * r) / (1.0 - r * r); },
                [alpha](double r) { return 2.0 * (2.0 - alpha) * r / (1.0 - r * r); },
                DiskLemma::phi_r};
      }
      case 'b': return {one, lune, DiskLemma::phi_r};
      case 'c': {
        const double alpha = *param;
        return {one, [alpha](double r) { return r / (1.0 - alpha * r * r); }, DiskLemma::phi_r};
      }
      case 'd': return {one, sr_shift, DiskLemma::half_plane, *param};
      case 'e': return {one, sr_shift, DiskLemma::lemniscate};
    }
  }
  switch (which) {
    case 'a': return {one, [](double r) { return 1.0 - std::sqrt(1.0 - r); }, DiskLemma::exp};
    case 'b': return {one, lune, DiskLemma::exp};
    case 'c': return {one, sr_shift, DiskLemma::exp};
    case 'd': return {one, [](double r) { return (4.0 * r + 2.0 * r * r) / 3.0; }, DiskLemma::exp};
    case 'e': {
      const double alpha = *param;
      return {one, [alpha](double r) { return r / (1.0 - alpha * r * r); }, DiskLemma::exp};
    }
  }
  throw DomainError("proof_disk: unknown branch");
}

RadiusResult radius_bisect(const RealFn& centre, const RealFn& radius, DiskLemma lemma,
                           double beta) {
  const auto [lo_c, hi_c] = disk_centre_range(lemma, beta);
  auto fits = [&](double r) {
    const double a = centre(r);
    if (!(a > lo_c && a < hi_c)) return false;
    return radius(r) <= disk_radius(lemma, a, beta);
  };
  RadiusResult out;
  out.method = RadiusMethod::bisection;
  out.defining_equation = std::string("radius(r) = r_a(centre(r)), lemma ") + to_string(lemma);
  if (fits(1.0 - 1e-12)) {
    out.value = 1.0;
    return out;
  }
  if (!fits(1e-12)) throw NoRadiusError("radius_bisect: containment fails for every r");
  double lo = 1e-12;
  double hi = 1.0 - 1e-12;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (fits(mid) ? lo : hi) = mid;
  }
  out.value = lo;
  return out;
}

RadiusResult radius_bisect(const ProofDisk& disk) {
  return radius_bisect(disk.centre, disk.radius, disk.lemma, disk.beta);
}

Witness radius_witness(char theorem, char which, std::optional<double> param) {
  const RadiusResult closed = radius_closed_form(theorem, which, param);
  const std::string& id = closed.sharp_witness;
  const ExtremalFunction f = extremal_catalog(id, closed.param);
  Region region = Region::exp_domain();
  if (theorem == 'D') {
    if (which == 'd') {
      region = Region::half_plane(*param);
    } else if (which == 'e') {
      region = Region::lemniscate();
    } else {
      region = Region::phi_r_domain();
    }
  }
  return {id, closed.param, f.zfp_over_f, std::move(region)};
}

namespace {

bool inside(const Region& region, Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
  return contains(region, w).inside;
}

bool quick_inside(const Region& region, Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
  if (auto fast = region.fast_membership(w)) return *fast;
  return contains(region, w).inside;
}

}  // namespace

double witness_exit_radius(const std::function<Complex(Complex)>& zfp_over_f,
                           const Region& region, int probes) {
  auto circle_inside = [&](double r) {
    for (int j = 0; j < probes; ++j) {
      if (!quick_inside(region, zfp_over_f(std::polar(r, kTwoPi * j / probes)))) return false;
    }
    return true;
  };
  if (circle_inside(1.0 - 1e-9)) return 1.0;
  double lo = 0.0;
  double hi = 1.0 - 1e-9;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (circle_inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

SharpnessReport sharpness_check(const std::function<Complex(Complex)>& zfp_over_f,
                                const Region& region, double R, double delta, int probes) {
  if (!(R > 0.0) || !(delta > 0.0) || probes < 8) {
    throw DomainError("sharpness_check: need R > 0, delta > 0, probes >= 8");
  }
  const bool whole_disk = std::abs(R - 1.0) < 1e-15;
  if (!whole_disk && !(R * (1.0 + delta) < 1.0)) {
    throw DomainError("sharpness_check: R(1 + delta) must be < 1");
  }
  SharpnessReport rep;
  rep.radius = R;
  rep.delta = delta;
  rep.probes = probes;
  rep.outer_checked = !whole_disk;

  rep.inner_inside = true;
  const double r_in = R * (1.0 - delta);
  for (int j = 0; j < probes; ++j) {
    const Complex z = std::polar(r_in, kTwoPi * j / probes);
    const Complex w = zfp_over_f(z);
    if (!inside(region, w)) {
      rep.inner_inside = false;
      rep.violating_z = z;
      rep.violating_w = w;
      break;
    }
  }
  if (rep.outer_checked) {
    const double r_out = R * (1.0 + delta);
    for (int j = 0; j < probes; ++j) {
      const Complex z = std::polar(r_out, kTwoPi * j / probes);
      const Complex w = zfp_over_f(z);
      if (!inside(region, w)) {
        rep.outer_exits = true;
        rep.exit_z = z;
        rep.exit_w = w;
        break;
      }
    }
  }
  rep.witness_exit_radius = witness_exit_radius(zfp_over_f, region, probes);
  rep.pass = rep.inner_inside && (rep.outer_exits || !rep.outer_checked);

  std::ostringstream msg;
  msg.precision(12);
  if (!rep.inner_inside) {
    msg << "VIOLATION: witness leaves " << region.name() << " inside radius " << R;
  } else if (rep.outer_checked && !rep.outer_exits) {
    msg << "not sharp: witness stays in " << region.name() << " past radius " << R;
  } else if (!rep.outer_checked) {
    msg << "radius 1: inner circle inside, no outer probe";
  } else {
    msg << "sharp: boundary touched at radius " << R;
  }
  msg << "; witness exit radius " << rep.witness_exit_radius;
  rep.message = msg.str();
  return rep;
}

SharpnessReport sharpness_check(const Series& f, const Region& region, double R, double delta,
                                int probes) {
  const Series fp = f.derivative();
  auto q = [f, fp](Complex z) { return z * fp.evaluate(z) / f.evaluate(z); };
  SharpnessReport rep = sharpness_check(q, region, R, delta, probes);
  const double rho = std::min(1.0, R * (1.0 + delta));
  const int n = f.order();
  if (std::abs(f[n]) * std::pow(rho, n) > 1e-8) {
    rep.precision_warning = true;
    rep.message += "; series truncation may be insufficient at this radius";
  }
  return rep;
}

}  // namespace gft
