#pragma once

// Image domains phi(D) and the disk-in-domain lemmas used by the radius proofs.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gft/classes.hpp"

namespace gft {

inline constexpr int kDefaultSamples = 4096;
inline constexpr double kBoundaryEps = 1e-9;

struct Membership;

class Region {
 public:
  using Sampler = std::function<Complex(double)>;
  using Predicate = std::function<bool(Complex)>;

  // Image of a Ma-Minda class. Bounded images get a boundary sampler; the
  // closed-form predicate is attached for every built-in id that has one.
  static Region from_class(const MindaClass& cls);

  static Region exp_domain();    // {|log w| < 1}
  static Region phi_r_domain();  // phi_R(D)
  static Region lemniscate();    // {|w^2 - 1| < 1, Re w > 0}
  static Region half_plane(double beta);  // {Re w < beta}, predicate only

  const std::string& name() const { return name_; }
  bool has_boundary() const { return static_cast<bool>(boundary_); }
  bool has_predicate() const { return static_cast<bool>(fast_); }

  // t -> phi(e^{it}); throws DomainError when the region has no sampler.
  Complex boundary(double t) const;
  std::optional<bool> fast_membership(Complex w) const;

  // Samples t_j = 2 pi j / n, j = 0..n-1.
  std::vector<Complex> sample_boundary(int n) const;

 private:
  using Distance = std::function<double(Complex)>;

  Region(std::string name, Sampler boundary, Predicate fast, Distance distance = {});

  std::string name_;
  Sampler boundary_;
  Predicate fast_;
  // 2 * kDefaultSamples points; the even ones are the default sampling.
  std::shared_ptr<const std::vector<Complex>> cache_;
  Distance distance_;  // exact boundary distance for predicate-only regions

  friend Membership contains(const Region& region, Complex w, int samples);
};

struct Membership {
  bool inside = false;
  bool ambiguous = false;        // w within kBoundaryEps of the sampled boundary
  std::optional<bool> fast;      // closed-form predicate, when available
  std::optional<int> winding;    // winding number, when a boundary exists
  bool disagreement = false;     // winding and predicate differ
  double boundary_distance = 0.0;
  int samples_used = 0;
  std::string diagnostic;
};

// Winding-number membership with adaptive doubling of the sample count until
// two successive estimates agree; the predicate is also evaluated when present.
Membership contains(const Region& region, Complex w, int samples = kDefaultSamples);

// Winding number of the sampled boundary about w.
int winding_number(const std::vector<Complex>& curve, Complex w);

// Distance from w to the closed polygon through the samples.
double polygon_distance(const std::vector<Complex>& curve, Complex w);

enum class DiskLemma { phi_r, exp, lemniscate, half_plane };

const char* to_string(DiskLemma lemma);

// Largest r with {|w - a| < r} inside phi_R(D), 2(sqrt2 - 1) < a < 2.
double disk_radius_phi_r(double a);
// Largest r with {|w - a| < r} inside the exp-domain, 1/e < a < e.
double disk_radius_exp(double a);
// Largest r with {|w - a| < r} inside the lemniscate domain, 0 < a < sqrt2.
double disk_radius_lemniscate(double a);
// beta - a for a < beta.
double disk_radius_half_plane(double a, double beta);

// Dispatch; `beta` only used for the half-plane.
double disk_radius(DiskLemma lemma, double a, double beta = 0.0);
// Open interval of admissible centres.
std::pair<double, double> disk_centre_range(DiskLemma lemma, double beta = 0.0);
Region lemma_region(DiskLemma lemma, double beta = 0.0);

// |w + (w^2 + 4w - 4)^{1/2}| < 2/k with the principal square root.
bool phi_r_printed_predicate(Complex w);

}  // namespace gft
