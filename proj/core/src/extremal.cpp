#include "gft/extremal.hpp"

#include <cmath>

#include "gft/classes.hpp"
#include "gft/constants.hpp"
#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr double kK = kPhiR;

Complex phi_r(Complex z) { return 1.0 + (z / kK) * (kK + z) / (kK - z); }

Series from_class(std::string_view id, const ClassParams& params, int power, int order) {
  return generate_function(MindaClass::builtin(id, params, order), SchwarzSpec(1.0, power), order);
}

// z * e^{g} for a series g with g(0) = 0.
Series z_times_exp(const Series& g) {
  const Series e = exp(g);
  Series f(g.order());
  for (int n = 1; n <= g.order(); ++n) f[n] = e[n - 1];
  return f;
}

double require_alpha(std::optional<double> param, std::string_view id, bool allow_one) {
  if (!param) throw DomainError(std::string(id) + " needs alpha");
  const double a = *param;
  if (!(a >= 0.0 && (allow_one ? a <= 1.0 : a < 1.0))) {
    throw DomainError(std::string(id) + ": alpha out of range");
  }
  return a;
}

}  // namespace

std::vector<std::string> extremal_ids() {
  return {"f0", "f1", "f2", "f3", "h", "f_q", "f_B", "f_C", "f_L", "cs_pair"};
}

ExtremalFunction extremal_catalog(std::string_view id, std::optional<double> param, int order) {
  if (order < 5) throw DomainError("extremal_catalog: order must be >= 5");
  const Series z = Series::identity(order);
  const Series one = Series::constant(1.0, order);
  const double k = kK;
  ExtremalFunction out;
  out.id = std::string(id);

  if (id == "f0") {
    out.series = from_class("se", {}, 1, order);
    // Ein(z) = sum z^n / (n n!)
    Series ein(order);
    double fact = 1.0;
    for (int n = 1; n <= order; ++n) {
      fact *= n;
      ein[n] = 1.0 / (n * fact);
    }
    out.closed_series = z_times_exp(ein);
    out.golden = {1.0, 1.0, 3.0 / 4.0, 17.0 / 36.0, 19.0 / 72.0};
    out.zfp_over_f = [](Complex w) { return std::exp(w); };
    out.description = "zf'/f = e^z";
    return out;
  }
  if (id == "f1" || id == "h") {
    out.series = from_class("sr", {}, 1, order);
    // k^2 z (k - z)^{-2} e^{-z/k} = z (1 - z/k)^{-2} e^{-z/k}
    const Series g = Complex(-2.0) * log(one - Complex(1.0 / k) * z) - Complex(1.0 / k) * z;
    out.closed_series = z_times_exp(g);
    out.golden = {1.0, 1.0 / k, 3.0 / (2 * k * k), 11.0 / (6 * k * k * k),
                  53.0 / (24 * std::pow(k, 4))};
    out.zfp_over_f = phi_r;
    out.description = "zf'/f = phi_R(z)";
    return out;
  }
  if (id == "f2") {
    out.series = from_class("sr", {}, 2, order);
    out.golden = {1.0, 0.0, 1.0 / (2 * k), 0.0, 5.0 / (8 * k * k)};
    out.zfp_over_f = [](Complex w) { return phi_r(w * w); };
    out.description = "zf'/f = phi_R(z^2)";
    return out;
  }
  if (id == "f3") {
    out.series = from_class("sr", {}, 3, order);
    out.golden = {1.0, 0.0, 0.0, 1.0 / (3 * k), 0.0, 0.0, 7.0 / (18 * k * k)};
    out.zfp_over_f = [](Complex w) { return phi_r(w * w * w); };
    out.description = "zf'/f = phi_R(z^3)";
    return out;
  }
  if (id == "f_q") {
    out.series = from_class("sq", {}, 1, order);
    const Series q = z + exp(Complex(0.5) * log(one + z * z));
    // q - log(1 - z + q) + log 2 - 1 = (q - 1) - log((1 - z + q)/2)
    out.closed_series = z_times_exp((q - one) - log(Complex(0.5) * (one - z + q)));
    out.zfp_over_f = [](Complex w) { return w + std::sqrt(1.0 + w * w); };
    out.description = "zf'/f = z + sqrt(1 + z^2)";
    return out;
  }
  if (id == "f_B") {
    const double alpha = require_alpha(param, id, true);
    out.param = alpha;
    out.series = from_class("bs", {{"alpha", alpha}}, 1, order);
    if (alpha == 0.0) {
      out.closed_series = z_times_exp(z);
    } else {
      // atanh(sqrt(a) z)/sqrt(a) = (log(1 + s z) - log(1 - s z)) / (2 s)
      const double s = std::sqrt(alpha);
      out.closed_series = z_times_exp(
          Complex(0.5 / s) * (log(one + Complex(s) * z) - log(one - Complex(s) * z)));
    }
    out.zfp_over_f = [alpha](Complex w) { return 1.0 + w / (1.0 - alpha * w * w); };
    out.description = "zf'/f = 1 + z/(1 - alpha z^2)";
    return out;
  }
  if (id == "f_C") {
    out.series = from_class("sc", {}, 1, order);
    out.closed_series = z_times_exp(Complex(4.0 / 3.0) * z + Complex(1.0 / 3.0) * z * z);
    out.zfp_over_f = [](Complex w) { return 1.0 + 4.0 * w / 3.0 + 2.0 * w * w / 3.0; };
    out.description = "zf'/f = 1 + 4z/3 + 2z^2/3";
    return out;
  }
  if (id == "f_L") {
    out.series = from_class("sl", {}, 1, order);
    out.zfp_over_f = [](Complex w) { return std::sqrt(1.0 + w); };
    out.description = "zf'/f = sqrt(1 + z)";
    return out;
  }
  if (id == "cs_pair") {
    const double alpha = require_alpha(param, id, false);
    out.param = alpha;
    // z (1 + z) (1 - z)^{-(3 - 2 alpha)}
    const Series g = log(one + z) - Complex(3.0 - 2.0 * alpha) * log(one - z);
    out.series = z_times_exp(g);
    out.closed_series = out.series;
    out.zfp_over_f = [alpha](Complex w) {
      return 1.0 + w / (1.0 + w) + (3.0 - 2.0 * alpha) * w / (1.0 - w);
    };
    out.description = "f = z(1+z)/(1-z)^{3-2alpha}";
    return out;
  }
  throw DomainError("unknown extremal function '" + std::string(id) + "'");
}

}  // namespace gft
