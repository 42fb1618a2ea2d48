#pragma once

// Ma-Minda classes S*(phi) and the maps from Caratheodory data to the Taylor
// coefficients of f and of its local inverse.

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/series.hpp"

namespace gft {

// First four non-constant Taylor coefficients of phi.
struct PhiCoefficients {
  double B1 = 0.0;
  double B2 = 0.0;
  double B3 = 0.0;
  double B4 = 0.0;
};

// c_1..c_4 of p(z) = 1 + c_1 z + ... in the Caratheodory class. c_4 is absent
// when the coefficients come from the three-term Libera-Zlotkiewicz lift.
struct CaratheodoryCoeffs {
  Complex c1{};
  Complex c2{};
  Complex c3{};
  std::optional<Complex> c4;
};

struct DirectCoeffs {
  Complex a2{};
  Complex a3{};
  Complex a4{};
  std::optional<Complex> a5;
};

struct InverseCoeffs {
  Complex A2{};
  Complex A3{};
  Complex A4{};
  std::optional<Complex> A5;
};

// Schwarz function w(z) = epsilon * z^power, |epsilon| = 1.
class SchwarzSpec {
 public:
  SchwarzSpec(Complex epsilon, int power);

  Complex epsilon() const { return epsilon_; }
  int power() const { return power_; }

 private:
  Complex epsilon_;
  int power_;
};

struct HerglotzAtom {
  double weight = 0.0;
  double angle = 0.0;
};

// Finite Herglotz measure sum_j weight_j * delta(angle_j); weights >= 0, sum 1.
class HerglotzAtoms {
 public:
  explicit HerglotzAtoms(std::vector<HerglotzAtom> atoms);

  const std::vector<HerglotzAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  // Moment c_n = 2 sum_j weight_j e^{i n angle_j}.
  Complex moment(int n) const;

 private:
  std::vector<HerglotzAtom> atoms_;
};

using ClassParams = std::map<std::string, double>;

class MindaClass {
 public:
  using PhiFunction = std::function<Complex(Complex)>;

  // Built-in ids: s (starlike), s_alpha, janowski, se, sr, sl, sq (lune),
  // sc (cardioid), bs (G_alpha), m_beta. Throws DomainError for unknown ids
  // and invalid parameters.
  static MindaClass builtin(std::string_view id, const ClassParams& params = {},
                            int order = kDefaultOrder);

  // Custom phi from its first four coefficients; phi is taken to be the
  // polynomial 1 + B1 z + ... + B4 z^4.
  static MindaClass custom(std::string name, const PhiCoefficients& b, int order = kDefaultOrder);

  // Descriptor {"name", "B": [B1..B4], "builtin"?, "params"?} as JSON text.
  static MindaClass from_descriptor(std::string_view json_text, int order = kDefaultOrder);

  static std::vector<std::string> builtin_ids();

  const std::string& id() const { return id_; }
  const std::string& name() const { return name_; }
  const PhiCoefficients& B() const { return b_; }
  const Series& phi_series() const { return phi_series_; }
  const ClassParams& params() const { return params_; }
  bool is_custom() const { return custom_; }

  // Closed-form phi where known, otherwise the phi_series polynomial.
  Complex phi(Complex z) const { return phi_(z); }
  // phi(e^{it}).
  Complex boundary(double t) const;
  // True when phi extends continuously to the closed disk.
  bool bounded_image() const { return bounded_; }

  // A copy of this class with phi_series re-expanded at another order.
  MindaClass with_order(int order) const;

 private:
  MindaClass(std::string id, std::string name, PhiFunction phi, Series series, ClassParams params,
             bool bounded, bool custom);

  std::string id_;
  std::string name_;
  PhiFunction phi_;
  Series phi_series_;
  PhiCoefficients b_;
  ClassParams params_;
  bool bounded_ = true;
  bool custom_ = false;
};

// a_2..a_5 of f in S*(phi) from (B, c); a_5 only when c_4 is present.
DirectCoeffs direct_coeffs(const PhiCoefficients& b, const CaratheodoryCoeffs& c);

// A_2..A_5 of f^{-1} from a_2..a_5 (reversion identities).
InverseCoeffs inverse_from_direct(const DirectCoeffs& a);

// A_2..A_5 directly from (B, c).
InverseCoeffs inverse_coeffs(const PhiCoefficients& b, const CaratheodoryCoeffs& c);

// Libera-Zlotkiewicz lift: c1 in [0,2], |gamma| <= 1, |z| <= 1.
CaratheodoryCoeffs lz_lift(double c1, Complex gamma, Complex z);

CaratheodoryCoeffs herglotz_coeffs(const HerglotzAtoms& atoms);

// p(z) = 1 + sum_n c_n z^n for the Herglotz measure, to `order`.
Series herglotz_series(const HerglotzAtoms& atoms, int order = kDefaultOrder);

// f(z) = z exp(int_0^z (phi(eps t^m) - 1)/t dt); satisfies zf'/f = phi(eps z^m).
Series generate_function(const MindaClass& phi, const SchwarzSpec& w, int order = kDefaultOrder);

// f with zf'/f = phi(w(z)) for w = (p - 1)/(p + 1). Series route used to
// check the closed forms and to reach a_n past n = 5.
Series function_from_caratheodory(const MindaClass& phi, const Series& p);

// a_n = f[n] for n = 2..5 packed as DirectCoeffs (a_5 present if order >= 5).
DirectCoeffs direct_from_series(const Series& f);

}  // namespace gft
