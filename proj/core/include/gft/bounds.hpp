#pragma once

// Closed-form coefficient-functional bounds with the branch that produced them.

#include <optional>
#include <string>
#include <vector>

#include "gft/classes.hpp"

namespace gft {

enum class BoundStatus { theorem, conjecture };

struct BoundReport {
  std::string label;    // e.g. "|A3 - mu A2^2|"
  double value = 0.0;   // >= 0
  std::string case_id;  // branch of the producing formula
  PhiCoefficients B;    // inputs echo
  std::optional<Complex> mu;
  std::string class_id;
  bool sharp = false;
  BoundStatus status = BoundStatus::theorem;
};

const char* to_string(BoundStatus status);

// 2 max{1, |nu - 1|}: the Caratheodory-class bound on |c2 - (nu/2) c1^2|.
double caratheodory_fs(Complex nu);

// nu = ((3 - 2 mu) B1^2 + B1 - B2) / B1.
Complex fs_inverse_nu(double B1, double B2, Complex mu);

// |A3 - mu A2^2| <= (B1/2) max{1, |nu - 1|}; case_id "plateau" or "slope".
BoundReport fs_inverse_bound(double B1, double B2, Complex mu);

// |A2| <= B1.
BoundReport abs_a2_inverse_bound(double B1);

struct QuadMax {
  double value = 0.0;
  std::string case_id;  // "case1", "case2", "case3"
  double argmax = 0.0;  // t in [0,4]
};

// max_{0 <= t <= 4} (P t^2 + Q t + R) with the three-way case split.
QuadMax quad_max_on_interval(double P, double Q, double R);

struct PqrTerms {
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
};

PqrTerms hankel2_pqr(double B1, double B2, double B3);

// Value of the displayed case formula (case1/case2/case3) in terms of B only.
double hankel2_case_formula(const std::string& case_id, double B1, double B2, double B3);

// |A2 A4 - A3^2| <= (B1/192) max_t (P t^2 + Q t + R). Cross-checks the result
// against the displayed case formula and throws std::logic_error on mismatch.
BoundReport hankel2_inverse_bound(double B1, double B2, double B3);

// (|A2|, |A3|, |A4|, |A5|) for se and sr; NotImplementedError otherwise.
std::vector<BoundReport> class_inverse_bounds(const std::string& class_id);

// G(c) of the |a2 a3 - a4| estimate on S*_R.
double sr_a2a3_a4_objective(double c);

struct ScalarMax {
  double argmax = 0.0;
  double value = 0.0;
};

// Numeric maximum of sr_a2a3_a4_objective over [0,2].
ScalarMax sr_a2a3_a4_numeric();

// The printed radical expression for max G.
double sr_a2a3_a4_closed_form();

// Entries: [0] |a3 - mu a2^2|, [1] |a2|, [2] |a3|, [3] |a2 a4 - a3^2|, [4] |a2 a3 - a4|.
std::vector<BoundReport> sr_direct_bounds(double mu);

// (1/k^{n-1}) sum_{p=0}^{n-1} (-1)^p (n-p)/p!, conjectured bound on |a_n| for S*_R.
double sr_conjectured_an(int n);

// The assembled conjectural bound on |H3(1)| for S*_R.
double sr_conjectured_h3();

struct ConjectureSet {
  std::vector<BoundReport> an_bounds;  // n = 2..8
  BoundReport h3_bound;
};

ConjectureSet sr_conjectures();

}  // namespace gft
