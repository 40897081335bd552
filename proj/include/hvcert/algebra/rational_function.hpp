#pragma once

#include <string>

#include "hvcert/algebra/polynomial.hpp"

namespace hvcert::algebra {

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(int c) : RationalFunction(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// Throws degenerate_parameters if x is a pole.
  Rational operator()(const Rational& x) const;
  double evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }
  long double evaluate(long double x) const { return num_.evaluate(x) / den_.evaluate(x); }

  RationalFunction inverse() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num/(den)" with content pulled out of both sides, e.g.
  /// "(n^2-49n+36)/(8(n^2-4))" style; polynomials print without a slash.
  std::string str(char var = 'n') const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace hvcert::algebra
