#include "gft/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gft/constants.hpp"
#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr int kMaxSamples = 1 << 22;

// Some root of a z^2 + b z + c = 0 inside the open unit disk.
bool quadratic_root_in_disk(Complex a, Complex b, Complex c) {
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) < 1e-300) return false;
    return std::abs(-c / b) < 1.0;
  }
  const Complex d = std::sqrt(b * b - 4.0 * a * c);
  const Complex r1 = (-b + d) / (2.0 * a);
  const Complex r2 = (-b - d) / (2.0 * a);
  return std::min(std::abs(r1), std::abs(r2)) < 1.0;
}

bool exp_predicate(Complex w) {
  if (w.real() <= 0.0 && w.imag() == 0.0) return false;
  return std::abs(std::log(w)) < 1.0;
}

bool phi_r_predicate(Complex w) {
  const double k = kPhiR;
  return quadratic_root_in_disk(1.0, k * w, -k * k * (w - 1.0));
}

bool lemniscate_predicate(Complex w) { return w.real() > 0.0 && std::abs(w * w - 1.0) < 1.0; }

Region::Predicate predicate_for(const MindaClass& cls) {
  if (cls.is_custom()) return {};
  const std::string& id = cls.id();
  const ClassParams& p = cls.params();
  if (id == "s") return [](Complex w) { return w.real() > 0.0; };
  if (id == "s_alpha") {
    const double alpha = p.at("alpha");
    return [alpha](Complex w) { return w.real() > alpha; };
  }
  if (id == "janowski") {
    const double A = p.at("A"), B = p.at("B");
    return [A, B](Complex w) {
      const Complex den = A - B * w;
      if (std::abs(den) < 1e-300) return false;
      return std::abs((w - 1.0) / den) < 1.0;
    };
  }
  if (id == "se") return exp_predicate;
  if (id == "sr") return phi_r_predicate;
  if (id == "sl") return lemniscate_predicate;
  if (id == "sq") {
    return [](Complex w) { return w.real() > 0.0 && std::abs(w * w - 1.0) < 2.0 * std::abs(w); };
  }
  if (id == "sc") {
    return [](Complex w) { return quadratic_root_in_disk(2.0 / 3.0, 4.0 / 3.0, 1.0 - w); };
  }
  if (id == "bs") {
    const double alpha = p.at("alpha");
    return [alpha](Complex w) { return quadratic_root_in_disk(alpha * (w - 1.0), 1.0, 1.0 - w); };
  }
  if (id == "m_beta") {
    const double beta = p.at("beta");
    return [beta](Complex w) { return w.real() < beta; };
  }
  return {};
}

double segment_distance(Complex a, Complex b, Complex w) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(w - a);
  const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

int winding_strided(const std::vector<Complex>& curve, std::size_t stride, Complex w) {
  const std::size_t n = curve.size() / stride;
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex a = curve[j * stride] - w;
    const Complex b = curve[((j + 1) % n) * stride] - w;
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double distance_strided(const std::vector<Complex>& curve, std::size_t stride, Complex w) {
  const std::size_t n = curve.size() / stride;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    best = std::min(best, segment_distance(curve[j * stride], curve[((j + 1) % n) * stride], w));
  }
  return best;
}

void require_open(double a, double lo, double hi, const char* what) {
  if (!(a > lo && a < hi)) {
    throw DomainError(std::string(what) + ": centre " + std::to_string(a) + " outside (" +
                      std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
}

}  // namespace

Region::Region(std::string name, Sampler boundary, Predicate fast, Distance distance)
    : name_(std::move(name)),
      boundary_(std::move(boundary)),
      fast_(std::move(fast)),
      distance_(std::move(distance)) {
  if (boundary_) {
    cache_ = std::make_shared<const std::vector<Complex>>(sample_boundary(2 * kDefaultSamples));
  }
}

Region Region::from_class(const MindaClass& cls) {
  Sampler sampler;
  if (cls.bounded_image()) {
    sampler = [cls](double t) { return cls.boundary(t); };
  }
  Distance distance;
  const std::string& id = cls.id();
  if (!cls.is_custom()) {
    if (id == "s") distance = [](Complex w) { return std::abs(w.real()); };
    if (id == "s_alpha") {
      const double alpha = cls.params().at("alpha");
      distance = [alpha](Complex w) { return std::abs(w.real() - alpha); };
    }
    if (id == "m_beta") {
      const double beta = cls.params().at("beta");
      distance = [beta](Complex w) { return std::abs(w.real() - beta); };
    }
  }
  return Region(cls.is_custom() ? cls.name() : id, std::move(sampler), predicate_for(cls),
                std::move(distance));
}

Region Region::exp_domain() { return from_class(MindaClass::builtin("se")); }
Region Region::phi_r_domain() { return from_class(MindaClass::builtin("sr")); }
Region Region::lemniscate() { return from_class(MindaClass::builtin("sl")); }

Region Region::half_plane(double beta) {
  return Region("half_plane(" + std::to_string(beta) + ")", {},
                [beta](Complex w) { return w.real() < beta; },
                [beta](Complex w) { return std::abs(w.real() - beta); });
}

Complex Region::boundary(double t) const {
  if (!boundary_) throw DomainError("Region '" + name_ + "' has no bounded boundary curve");
  return boundary_(t);
}

std::optional<bool> Region::fast_membership(Complex w) const {
  if (!fast_) return std::nullopt;
  return fast_(w);
}

std::vector<Complex> Region::sample_boundary(int n) const {
  if (n < 3) throw DomainError("sample_boundary: need at least 3 samples");
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out[j] = boundary(kTwoPi * j / n);
  return out;
}

int winding_number(const std::vector<Complex>& curve, Complex w) {
  return winding_strided(curve, 1, w);
}

double polygon_distance(const std::vector<Complex>& curve, Complex w) {
  return distance_strided(curve, 1, w);
}

Membership contains(const Region& region, Complex w, int samples) {
  Membership m;
  m.fast = region.fast_membership(w);
  if (!region.has_boundary()) {
    if (!m.fast) throw DomainError("contains: region '" + region.name() + "' has no test");
    m.inside = *m.fast;
    if (region.distance_) {
      m.boundary_distance = region.distance_(w);
      m.ambiguous = m.boundary_distance < kBoundaryEps;
    } else {
      m.boundary_distance = std::numeric_limits<double>::quiet_NaN();
    }
    return m;
  }

  int n = std::max(samples, 16);
  const bool cached = (n == kDefaultSamples) && region.cache_;
  std::vector<Complex> coarse;
  std::vector<Complex> fine;
  int w1 = 0;
  int w2 = 0;
  if (cached) {
    w1 = winding_strided(*region.cache_, 2, w);
    w2 = winding_strided(*region.cache_, 1, w);
  } else {
    coarse = region.sample_boundary(n);
    fine = region.sample_boundary(2 * n);
    w1 = winding_strided(coarse, 1, w);
    w2 = winding_strided(fine, 1, w);
  }
  const std::vector<Complex>* last = cached ? region.cache_.get() : &fine;
  n *= 2;
  while (w1 != w2 && n < kMaxSamples) {
    n *= 2;
    fine = region.sample_boundary(n);
    last = &fine;
    w1 = w2;
    w2 = winding_strided(fine, 1, w);
  }
  if (w1 != w2) m.diagnostic = "winding estimate did not stabilise";
  m.samples_used = n;
  m.winding = w2;
  m.boundary_distance = distance_strided(*last, 1, w);
  m.ambiguous = m.boundary_distance < kBoundaryEps;
  m.inside = (w2 == 1);
  if (m.fast && *m.fast != m.inside) {
    m.disagreement = true;
    if (m.boundary_distance > 1e-7) {
      m.diagnostic = "winding number and closed-form predicate disagree away from the boundary";
    }
  }
  return m;
}

const char* to_string(DiskLemma lemma) {
  switch (lemma) {
    case DiskLemma::phi_r: return "phiR";
    case DiskLemma::exp: return "exp";
    case DiskLemma::lemniscate: return "lemniscate";
    case DiskLemma::half_plane: return "half_plane";
  }
  return "?";
}

double disk_radius_phi_r(double a) {
  const double left = 2.0 * (std::numbers::sqrt2 - 1.0);
  require_open(a, left, 2.0, "disk_radius_phi_r");
  return a <= std::numbers::sqrt2 ? a - left : 2.0 - a;
}

double disk_radius_exp(double a) {
  require_open(a, 1.0 / kE, kE, "disk_radius_exp");
  return a <= (kE + 1.0 / kE) / 2.0 ? a - 1.0 / kE : kE - a;
}

double disk_radius_lemniscate(double a) {
  require_open(a, 0.0, std::numbers::sqrt2, "disk_radius_lemniscate");
  if (a >= 2.0 * std::numbers::sqrt2 / 3.0) return std::numbers::sqrt2 - a;
  const double s = 1.0 - a * a;
  return std::sqrt(std::sqrt(s) - s);
}

double disk_radius_half_plane(double a, double beta) {
  if (!(a < beta)) throw DomainError("disk_radius_half_plane: centre must lie left of beta");
  return beta - a;
}

double disk_radius(DiskLemma lemma, double a, double beta) {
  switch (lemma) {
    case DiskLemma::phi_r: return disk_radius_phi_r(a);
    case DiskLemma::exp: return disk_radius_exp(a);
    case DiskLemma::lemniscate: return disk_radius_lemniscate(a);
    case DiskLemma::half_plane: return disk_radius_half_plane(a, beta);
  }
  throw DomainError("disk_radius: unknown lemma");
}

std::pair<double, double> disk_centre_range(DiskLemma lemma, double beta) {
  switch (lemma) {
    case DiskLemma::phi_r: return {2.0 * (std::numbers::sqrt2 - 1.0), 2.0};
    case DiskLemma::exp: return {1.0 / kE, kE};
    case DiskLemma::lemniscate: return {0.0, std::numbers::sqrt2};
    case DiskLemma::half_plane: return {-std::numeric_limits<double>::infinity(), beta};
  }
  throw DomainError("disk_centre_range: unknown lemma");
}

Region lemma_region(DiskLemma lemma, double beta) {
  switch (lemma) {
    case DiskLemma::phi_r: return Region::phi_r_domain();
    case DiskLemma::exp: return Region::exp_domain();
    case DiskLemma::lemniscate: return Region::lemniscate();
    case DiskLemma::half_plane: return Region::half_plane(beta);
  }
  throw DomainError("lemma_region: unknown lemma");
}

bool phi_r_printed_predicate(Complex w) {
  return std::abs(w + std::sqrt(w * w + 4.0 * w - 4.0)) < 2.0 / kPhiR;
}

}  // namespace gft
