#pragma once

#include <map>
#include <string>

#include "hvcert/algebra/rational.hpp"

namespace hvcert::algebra {

/// lower <= sqrt(radicand) <= upper, both rational.
struct SqrtEnclosure {
  Rational lower;
  Rational upper;
  Rational radicand;
};

/// Throws negative_radicand for x < 0 and degenerate_parameters for width <= 0.
/// Perfect squares come back with lower == upper.
SqrtEnclosure sqrt_enclosure(const Rational& x, const Rational& width);

/// Closed rational interval.
struct Interval {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

enum class Comparison { less, equal, greater, undecided };

/// rational + sum of coeff*sqrt(radicand) with distinct, positive,
/// non-square radicands. Closed under +, - and *.
class SurdExpression {
 public:
  SurdExpression() = default;
  SurdExpression(const Rational& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  SurdExpression(long c) : constant_(c) {}              // NOLINT(google-explicit-constructor)
  /// coeff*sqrt(radicand).
  static SurdExpression sqrt_term(const Rational& coeff, const Rational& radicand);

  const Rational& constant() const { return constant_; }
  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }

  /// Enclosure of width at most `width` (each square root is enclosed to a
  /// width scaled by the coefficient sizes).
  Interval enclose(const Rational& width) const;
  double to_double() const;

  /// Sign decided by refining enclosures by 2^-64 per round until zero is
  /// excluded or the width would drop below `cap`.
  Comparison sign(const Rational& cap) const;

  SurdExpression& operator+=(const SurdExpression& o);
  SurdExpression& operator-=(const SurdExpression& o);
  SurdExpression& operator*=(const SurdExpression& o);
  friend SurdExpression operator+(SurdExpression a, const SurdExpression& b) { return a += b; }
  friend SurdExpression operator-(SurdExpression a, const SurdExpression& b) { return a -= b; }
  friend SurdExpression operator*(SurdExpression a, const SurdExpression& b) { return a *= b; }
  SurdExpression operator-() const;

  /// e.g. "7/2-3/5*sqrt(41/3)".
  std::string str() const;

 private:
  void add_term(const Rational& coeff, const Rational& radicand);
  Rational constant_;
  std::map<Rational, Rational> terms_;  // radicand -> coefficient
};

/// Default refinement cap, 1e-200.
const Rational& default_comparison_cap();

/// Compares a and b; `undecided` means the two agree to within the cap.
Comparison compare(const SurdExpression& a, const SurdExpression& b,
                   const Rational& cap = default_comparison_cap());

}  // namespace hvcert::algebra
