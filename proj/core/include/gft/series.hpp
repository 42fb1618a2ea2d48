#pragma once

// Truncated power series over the complex numbers.
//
// A Series of order N holds c_0..c_N. Every operation keeps the order of its
// inputs; terms past N are dropped, never extrapolated.

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace gft {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 8;

class Series {
 public:
  // Zero series of the given order (order >= 1).
  explicit Series(int order = kDefaultOrder);
  // Takes ownership of c_0..c_N; N = coeffs.size() - 1 must be >= 1.
  explicit Series(std::vector<Complex> coeffs);
  // Coefficients c_0, c_1, ... padded with zeros (or truncated) to `order`.
  Series(std::initializer_list<Complex> coeffs, int order);

  static Series constant(Complex value, int order = kDefaultOrder);
  // The series z.
  static Series identity(int order = kDefaultOrder);
  // The series scale * z^power.
  static Series monomial(Complex scale, int power, int order = kDefaultOrder);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Complex& operator[](int n) const { return coeffs_[n]; }
  Complex& operator[](int n) { return coeffs_[n]; }

  std::span<const Complex> coeffs() const { return coeffs_; }

  // Same coefficients at a different truncation order.
  Series with_order(int order) const;

  // Horner evaluation of the truncated polynomial.
  Complex evaluate(Complex z) const;

  // Formal derivative; the top coefficient of the result is zero.
  Series derivative() const;

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(Complex scale);

 private:
  std::vector<Complex> coeffs_;
};

enum class ArithmeticKind { add, sub, mul, div, scale };

// Coefficientwise / Cauchy-product arithmetic at the common truncation order.
// For `scale`, b must be a constant series and a is multiplied by b[0].
// Throws DomainError on order mismatch, SingularSeriesError for div by b with b[0] == 0.
Series arithmetic(const Series& a, const Series& b, ArithmeticKind kind);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);
Series operator/(const Series& a, const Series& b);
Series operator*(Complex scale, const Series& a);
Series operator*(const Series& a, Complex scale);
Series operator-(const Series& a);

// outer(inner(z)) through the common order; inner[0] must be 0.
Series compose(const Series& outer, const Series& inner);

enum class ExpLogKind { exp, log };

// exp needs a[0] == 0, log needs a[0] == 1 (within 1e-12).
Series exp_log(const Series& a, ExpLogKind kind);
Series exp(const Series& a);
Series log(const Series& a);

// Series of \int_0^z (p(t) - 1) / t dt: c_n -> c_n / n, constant term 0.
Series integrate_pminus1_over_t(const Series& p);

// Compositional inverse g with f(g(w)) = w through the order of f.
// Requires f[0] == 0 and f[1] != 0.
Series revert(const Series& f);

double max_abs_diff(const Series& a, const Series& b);

}  // namespace gft
