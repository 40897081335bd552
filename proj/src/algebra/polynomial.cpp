#include "hvcert/algebra/polynomial.hpp"

#include <sstream>

#include "hvcert/error.hpp"

namespace hvcert::algebra {

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

Polynomial Polynomial::n() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial{b, a}; }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

long double Polynomial::evaluate(long double x) const {
  long double acc = 0.0L;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_long_double();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(const Rational& x0) const {
  // Horner with polynomial accumulator: p(x0 + m).
  const Polynomial step = Polynomial{x0, Rational(1)};
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= step;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * leading().inverse();
}

std::pair<Rational, Polynomial> Polynomial::content_primitive() const {
  if (is_zero()) return {Rational(0), Polynomial()};
  mpz_class den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  mpz_class num_gcd = 0;
  for (const auto& c : c_) {
    const Rational scaled = c * Rational(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.numerator().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  if (leading().sign() < 0) content = -content;
  return {content, *this * content.inverse()};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial Polynomial::operator-() const { return *this * Rational(-1); }

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string Polynomial::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational a = c.abs();
    if (c.sign() < 0) os << "-";
    else if (!first) os << "+";
    const bool unit = a == Rational(1);
    if (i == 0 || !unit) os << a.str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::string Polynomial::str_factored(char var) const {
  if (is_zero()) return "0";
  auto [content, prim] = content_primitive();
  if (prim.degree() == 0) return content.str();
  const std::string inner = prim.str(var);
  if (content == Rational(1)) return inner;
  if (content == Rational(-1)) return "-(" + inner + ")";
  return content.str() + "(" + inner + ")";
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::degenerate_parameters, "polynomial division by zero");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  const Rational lb_inv = b.leading().inverse();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (int i = a.degree(); i >= db; --i) {
    const Rational f = r[static_cast<std::size_t>(i)] * lb_inv;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    // Keep coefficient growth in check.
    x = std::move(y);
    y = r.is_zero() ? r : r.content_primitive().second;
  }
  return x.monic();
}

// --- BivariatePolynomial --------------------------------------------------

BivariatePolynomial::BivariatePolynomial(std::vector<Polynomial> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

BivariatePolynomial::BivariatePolynomial(const Polynomial& constant) {
  if (!constant.is_zero()) c_.push_back(constant);
}

BivariatePolynomial BivariatePolynomial::x() {
  return BivariatePolynomial(std::vector<Polynomial>{Polynomial(), Polynomial(1)});
}

void BivariatePolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial BivariatePolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(i)];
}

Polynomial BivariatePolynomial::substitute(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

Rational BivariatePolynomial::operator()(const Rational& n, const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + (*it)(n);
  return acc;
}

BivariatePolynomial BivariatePolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Polynomial> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return BivariatePolynomial(std::move(d));
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Polynomial> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

}  // namespace hvcert::algebra
