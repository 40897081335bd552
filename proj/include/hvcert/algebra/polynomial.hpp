#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hvcert/algebra/rational.hpp"

namespace hvcert::algebra {

/// Univariate polynomial in the dimension indeterminate n with rational
/// coefficients. Coefficient i multiplies n^i; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  /// The indeterminate n.
  static Polynomial n();
  /// a*n + b.
  static Polynomial linear(const Rational& a, const Rational& b);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& x) const;
  double evaluate(double x) const;
  long double evaluate(long double x) const;

  Polynomial derivative() const;
  /// p(x0 + m) as a polynomial in m.
  Polynomial shifted(const Rational& x0) const;
  /// p(q(n)).
  Polynomial compose(const Polynomial& q) const;
  Polynomial monic() const;

  /// (content, primitive): primitive has coprime integer coefficients and a
  /// positive leading coefficient, and *this == content * primitive.
  std::pair<Rational, Polynomial> content_primitive() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  Polynomial pow(unsigned exponent) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form such as "4n^3+53n^2+10n+128".
  std::string str(char var = 'n') const;
  /// Content-factored form such as "4(4n^3+53n^2+10n+128)".
  std::string str_factored(char var = 'n') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Polynomial in an outer variable X whose coefficients are polynomials in n.
/// Used for the two-variable identities of the spectral module.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<Polynomial> coefficients);
  BivariatePolynomial(const Polynomial& constant);  // NOLINT(google-explicit-constructor)

  /// The outer variable X.
  static BivariatePolynomial x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Polynomial>& coefficients() const { return c_; }
  Polynomial coeff(int i) const;

  /// Substitute X = q(n).
  Polynomial substitute(const Polynomial& q) const;
  /// Evaluate at integer-valued (n, X).
  Rational operator()(const Rational& n, const Rational& x) const;
  BivariatePolynomial derivative() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }
  friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a *= b;
  }
  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  void trim();
  std::vector<Polynomial> c_;
};

}  // namespace hvcert::algebra
