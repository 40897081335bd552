#include "hvcert/algebra/surd.hpp"

#include <cmath>
#include <sstream>

#include "hvcert/error.hpp"

namespace hvcert::algebra {

namespace {

bool is_square(const mpz_class& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

/// sqrt(x) if x is the square of a rational.
bool exact_sqrt(const Rational& x, Rational& out) {
  const mpz_class p = x.numerator(), q = x.denominator();
  if (!is_square(p) || !is_square(q)) return false;
  out = Rational(sqrt(p), sqrt(q));
  return true;
}

}  // namespace

SqrtEnclosure sqrt_enclosure(const Rational& x, const Rational& width) {
  if (x.sign() < 0) throw Error(ErrorCode::negative_radicand, "sqrt of " + x.str());
  if (width.sign() <= 0) throw Error(ErrorCode::degenerate_parameters, "nonpositive enclosure width");
  Rational r;
  if (exact_sqrt(x, r)) return {r, r, x};
  // sqrt(p/q) = sqrt(p*q)/q; scale by 2^k so that 1/(q*2^k) <= width.
  const mpz_class p = x.numerator(), q = x.denominator();
  const Rational need = (width * Rational(q)).inverse();  // 2^k >= need
  unsigned long k = 0;
  mpz_class two_k = 1;
  while (Rational(two_k) < need) {
    two_k <<= 1;
    ++k;
  }
  const mpz_class scaled = p * q * two_k * two_k;
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  const mpz_class den = q * two_k;
  return {Rational(s, den), Rational(s + 1, den), x};
}

const Rational& default_comparison_cap() {
  static const Rational cap = [] {
    mpz_class ten = 10, p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), 200);
    return Rational(mpz_class(1), p);
  }();
  return cap;
}

SurdExpression SurdExpression::sqrt_term(const Rational& coeff, const Rational& radicand) {
  SurdExpression e;
  e.add_term(coeff, radicand);
  return e;
}

void SurdExpression::add_term(const Rational& coeff, const Rational& radicand) {
  if (radicand.sign() < 0) throw Error(ErrorCode::negative_radicand, "sqrt of " + radicand.str());
  if (coeff.is_zero() || radicand.is_zero()) return;
  Rational root;
  if (exact_sqrt(radicand, root)) {
    constant_ += coeff * root;
    return;
  }
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Interval SurdExpression::enclose(const Rational& width) const {
  Interval out{constant_, constant_};
  if (terms_.empty()) return out;
  Rational coeff_sum;
  for (const auto& [rad, c] : terms_) coeff_sum += c.abs();
  const Rational per_term = width / coeff_sum;
  for (const auto& [rad, c] : terms_) {
    const SqrtEnclosure s = sqrt_enclosure(rad, per_term);
    if (c.sign() > 0) {
      out.lo += c * s.lower;
      out.hi += c * s.upper;
    } else {
      out.lo += c * s.upper;
      out.hi += c * s.lower;
    }
  }
  return out;
}

double SurdExpression::to_double() const {
  double v = constant_.to_double();
  for (const auto& [rad, c] : terms_) v += c.to_double() * std::sqrt(rad.to_double());
  return v;
}

Comparison SurdExpression::sign(const Rational& cap) const {
  if (terms_.empty()) {
    const int s = constant_.sign();
    return s < 0 ? Comparison::less : (s > 0 ? Comparison::greater : Comparison::equal);
  }
  // Scale widths relative to the size of the expression's pieces.
  Rational scale = constant_.abs();
  for (const auto& [rad, c] : terms_) scale += c.abs() * Rational(mpz_class(sqrt(rad.floor()) + 1));
  for (unsigned long bits = 64;; bits += 64) {
    const Rational w = scale * power_of_two_inverse(bits);
    const Interval iv = enclose(w);
    if (iv.lo.sign() > 0) return Comparison::greater;
    if (iv.hi.sign() < 0) return Comparison::less;
    if (w < cap) return Comparison::undecided;
  }
}

SurdExpression& SurdExpression::operator+=(const SurdExpression& o) {
  constant_ += o.constant_;
  for (const auto& [rad, c] : o.terms_) add_term(c, rad);
  return *this;
}

SurdExpression SurdExpression::operator-() const {
  SurdExpression e;
  e.constant_ = -constant_;
  for (const auto& [rad, c] : terms_) e.terms_.emplace(rad, -c);
  return e;
}

SurdExpression& SurdExpression::operator-=(const SurdExpression& o) { return *this += -o; }

SurdExpression& SurdExpression::operator*=(const SurdExpression& o) {
  SurdExpression r;
  r.constant_ = constant_ * o.constant_;
  for (const auto& [rad, c] : o.terms_) r.add_term(constant_ * c, rad);
  for (const auto& [rad, c] : terms_) r.add_term(o.constant_ * c, rad);
  for (const auto& [ra, ca] : terms_)
    for (const auto& [rb, cb] : o.terms_) {
      if (ra == rb) r.constant_ += ca * cb * ra;
      else r.add_term(ca * cb, ra * rb);
    }
  *this = std::move(r);
  return *this;
}

std::string SurdExpression::str() const {
  std::ostringstream os;
  bool first = true;
  if (!constant_.is_zero() || terms_.empty()) {
    os << constant_.str();
    first = false;
  }
  for (const auto& [rad, c] : terms_) {
    if (c.sign() < 0) os << "-";
    else if (!first) os << "+";
    if (c.abs() != Rational(1)) os << c.abs().str() << "*";
    os << "sqrt(" << rad.str() << ")";
    first = false;
  }
  return os.str();
}

Comparison compare(const SurdExpression& a, const SurdExpression& b, const Rational& cap) {
  return (a - b).sign(cap);
}

}  // namespace hvcert::algebra
