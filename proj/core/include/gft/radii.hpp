#pragma once

// Radius constants for S*_R and S*_e, a bisection verifier driven by the
// disk lemmas, and a boundary-touch sharpness checker.

#include <functional>
#include <optional>
#include <string>

#include "gft/regions.hpp"

namespace gft {

enum class RadiusMethod { closed_form, bisection };

const char* to_string(RadiusMethod method);

struct RadiusResult {
  double value = 0.0;  // in (0, 1]
  std::string defining_equation;
  RadiusMethod method = RadiusMethod::closed_form;
  std::string sharp_witness;  // extremal_catalog id
  std::optional<double> param;
  std::string note;
};

// Theorem D: S*_R-radii of CS*(alpha) (a), S*_q (b), BS*(alpha) (c), the
// M(beta)-radius of S*_R (d) and the S*_L-radius of S*_R (e).
RadiusResult radius_thmD(char which, std::optional<double> param = std::nullopt);

// Theorem E: S*_e-radii of S*_L (a), S*_q (b), S*_R (c), S*_C (d), BS*(alpha) (e).
RadiusResult radius_thmE(char which, std::optional<double> param = std::nullopt);

// Dispatch on theorem letter 'D' or 'E'.
RadiusResult radius_closed_form(char theorem, char which, std::optional<double> param);

// The (2 - alpha + sqrt(7 - 6 alpha + alpha^2))/(-3 + 2 alpha) expression and the
// positive root of (3 - 2 alpha) r^2 + 2 (2 - alpha) r - 1 = 0, kept for reference.
double thmD_a_printed(double alpha);
double thmD_a_quadratic_root(double alpha);

using RealFn = std::function<double(double)>;

struct ProofDisk {
  RealFn centre;
  RealFn radius;
  DiskLemma lemma = DiskLemma::phi_r;
  double beta = 0.0;
};

// Disk data the proof of each branch feeds into its lemma.
ProofDisk proof_disk(char theorem, char which, std::optional<double> param);

// Largest r in (0,1) with radius(r) <= r_a(centre(r)); 1 if it never fails.
// Throws NoRadiusError if containment fails for every r.
RadiusResult radius_bisect(const RealFn& centre, const RealFn& radius, DiskLemma lemma,
                           double beta = 0.0);
RadiusResult radius_bisect(const ProofDisk& disk);

struct Witness {
  std::string id;
  std::optional<double> param;
  std::function<Complex(Complex)> zfp_over_f;
  Region region;
};

// The named extremal function of a branch and the target region.
Witness radius_witness(char theorem, char which, std::optional<double> param);

struct SharpnessReport {
  bool pass = false;
  bool inner_inside = false;   // all samples on |z| = R(1 - delta) inside
  bool outer_exits = false;    // some sample on |z| = R(1 + delta) outside
  bool outer_checked = false;  // false when R = 1
  double radius = 0.0;
  double delta = 0.0;
  int probes = 0;
  std::optional<Complex> violating_z;  // inner sample outside the region
  std::optional<Complex> violating_w;
  std::optional<Complex> exit_z;       // outer sample outside the region
  std::optional<Complex> exit_w;
  double witness_exit_radius = 0.0;    // sup r with the circle image inside
  bool precision_warning = false;
  std::string message;
};

inline constexpr int kDefaultProbes = 720;

// Requires 0 < R(1 + delta) < 1, or R = 1 (inner circle only).
SharpnessReport sharpness_check(const std::function<Complex(Complex)>& zfp_over_f,
                                const Region& region, double R, double delta = 1e-4,
                                int probes = kDefaultProbes);

// Series form: zf'/f = z f'(z) / f(z) from the truncated series. Flags a
// precision warning when the tail term at |z| = R(1 + delta) exceeds 1e-8.
SharpnessReport sharpness_check(const Series& f, const Region& region, double R,
                                double delta = 1e-4, int probes = kDefaultProbes);

// Largest r < 1 for which every sampled point of zf'/f on |z| = r is inside.
double witness_exit_radius(const std::function<Complex(Complex)>& zfp_over_f,
                           const Region& region, int probes = kDefaultProbes);

}  // namespace gft
