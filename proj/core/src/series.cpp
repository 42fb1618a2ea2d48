#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gft/errors.hpp"

namespace gft {

namespace {

constexpr double kUnitTol = 1e-12;

void require_order(int order) {
  if (order < 1) {
    throw DomainError("series order must be >= 1, got " + std::to_string(order));
  }
}

void require_same_order(const Series& a, const Series& b, const char* what) {
  if (a.order() != b.order()) {
    throw DomainError(std::string(what) + ": truncation orders differ (" +
                      std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
}

Series cauchy(const Series& a, const Series& b) {
  const int n = a.order();
  Series out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == Complex{}) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series divide(const Series& a, const Series& b) {
  if (std::abs(b[0]) == 0.0) {
    throw SingularSeriesError("series division: divisor has zero constant term");
  }
  const int n = a.order();
  Series q(n);
  for (int k = 0; k <= n; ++k) {
    Complex acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

}  // namespace

Series::Series(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  require_order(static_cast<int>(coeffs_.size()) - 1);
}

Series::Series(std::initializer_list<Complex> coeffs, int order) : Series(order) {
  int n = 0;
  for (const Complex& c : coeffs) {
    if (n > order) break;
    coeffs_[n++] = c;
  }
}

Series Series::constant(Complex value, int order) {
  Series s(order);
  s[0] = value;
  return s;
}

Series Series::identity(int order) { return monomial(1.0, 1, order); }

Series Series::monomial(Complex scale, int power, int order) {
  if (power < 0) throw DomainError("monomial power must be >= 0");
  Series s(order);
  if (power <= order) s[power] = scale;
  return s;
}

Series Series::with_order(int order) const {
  Series s(order);
  const int n = std::min(order, this->order());
  std::copy_n(coeffs_.begin(), n + 1, s.coeffs_.begin());
  return s;
}

Complex Series::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Series Series::derivative() const {
  Series d(order());
  for (int n = 1; n <= order(); ++n) d[n - 1] = static_cast<double>(n) * coeffs_[n];
  return d;
}

Series& Series::operator+=(const Series& other) {
  require_same_order(*this, other, "add");
  for (int n = 0; n <= order(); ++n) coeffs_[n] += other[n];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_order(*this, other, "sub");
  for (int n = 0; n <= order(); ++n) coeffs_[n] -= other[n];
  return *this;
}

Series& Series::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

Series arithmetic(const Series& a, const Series& b, ArithmeticKind kind) {
  require_same_order(a, b, "arithmetic");
  switch (kind) {
    case ArithmeticKind::add: {
      Series r = a;
      return r += b;
    }
    case ArithmeticKind::sub: {
      Series r = a;
      return r -= b;
    }
    case ArithmeticKind::mul:
      return cauchy(a, b);
    case ArithmeticKind::div:
      return divide(a, b);
    case ArithmeticKind::scale: {
      for (int n = 1; n <= b.order(); ++n) {
        if (b[n] != Complex{}) throw DomainError("scale: second operand must be a constant series");
      }
      Series r = a;
      return r *= b[0];
    }
  }
  throw DomainError("arithmetic: unknown kind");
}

Series operator+(const Series& a, const Series& b) { return arithmetic(a, b, ArithmeticKind::add); }
Series operator-(const Series& a, const Series& b) { return arithmetic(a, b, ArithmeticKind::sub); }
Series operator*(const Series& a, const Series& b) { return arithmetic(a, b, ArithmeticKind::mul); }
Series operator/(const Series& a, const Series& b) { return arithmetic(a, b, ArithmeticKind::div); }

Series operator*(Complex scale, const Series& a) {
  Series r = a;
  return r *= scale;
}

Series operator*(const Series& a, Complex scale) { return scale * a; }

Series operator-(const Series& a) { return Complex(-1.0) * a; }

Series compose(const Series& outer, const Series& inner) {
  require_same_order(outer, inner, "compose");
  if (inner[0] != Complex{}) {
    throw DomainError("compose: inner series must have zero constant term");
  }
  const int n = outer.order();
  // Horner in the series ring: ((c_N * g + c_{N-1}) * g + ...) + c_0.
  Series acc = Series::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = cauchy(acc, inner);
    acc[0] += outer[k];
  }
  return acc;
}

Series exp_log(const Series& a, ExpLogKind kind) {
  const int n = a.order();
  if (kind == ExpLogKind::exp) {
    if (std::abs(a[0]) > kUnitTol) throw DomainError("exp: argument must have zero constant term");
    // r' = a' r  =>  n r_n = sum_{j=1}^{n} j a_j r_{n-j}
    Series r(n);
    r[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
      Complex acc{};
      for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * r[k - j];
      r[k] = acc / static_cast<double>(k);
    }
    return r;
  }
  if (std::abs(a[0] - Complex(1.0)) > kUnitTol) {
    throw DomainError("log: argument must have constant term 1");
  }
  // a l' = a'  =>  k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}
  Series l(n);
  for (int k = 1; k <= n; ++k) {
    Complex acc = static_cast<double>(k) * a[k];
    for (int j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * a[k - j];
    l[k] = acc / static_cast<double>(k);
  }
  return l;
}

Series exp(const Series& a) { return exp_log(a, ExpLogKind::exp); }
Series log(const Series& a) { return exp_log(a, ExpLogKind::log); }

Series integrate_pminus1_over_t(const Series& p) {
  if (std::abs(p[0] - Complex(1.0)) > kUnitTol) {
    throw DomainError("integrate_pminus1_over_t: constant term must be 1");
  }
  Series out(p.order());
  for (int n = 1; n <= p.order(); ++n) out[n] = p[n] / static_cast<double>(n);
  return out;
}

Series revert(const Series& f) {
  if (f[0] != Complex{}) throw DomainError("revert: series must have zero constant term");
  if (std::abs(f[1]) == 0.0) throw NotInvertibleError("revert: zero linear coefficient");
  const int n = f.order();
  Series g(n);
  g[1] = 1.0 / f[1];
  // [f(g)]_k is linear in g_k with slope f_1; everything else depends on g_1..g_{k-1}.
  for (int k = 2; k <= n; ++k) {
    const Series fg = compose(f, g);
    g[k] = -fg[k] / f[1];
  }
  return g;
}

double max_abs_diff(const Series& a, const Series& b) {
  require_same_order(a, b, "max_abs_diff");
  double m = 0.0;
  for (int n = 0; n <= a.order(); ++n) m = std::max(m, std::abs(a[n] - b[n]));
  return m;
}

}  // namespace gft
