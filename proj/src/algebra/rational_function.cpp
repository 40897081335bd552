#include "hvcert/algebra/rational_function.hpp"

#include "hvcert/error.hpp"

namespace hvcert::algebra {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw Error(ErrorCode::degenerate_parameters, "zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    num_ *= lead.inverse();
    den_ *= lead.inverse();
  }
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d.is_zero()) throw Error(ErrorCode::degenerate_parameters, "evaluation at a pole");
  return num_(x) / d;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::degenerate_parameters, "inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::str(char var) const {
  if (is_polynomial()) return num_.str_factored(var);
  auto [cn, pn] = num_.content_primitive();
  auto [cd, pd] = den_.content_primitive();
  const Rational c = cn / cd;
  // c = p/q goes as p on top and q below.
  const Rational top(c.numerator());
  const Rational bottom(c.denominator());
  std::string s;
  const bool top_unit = top.abs() == Rational(1);
  if (top.sign() < 0) s += "-";
  if (pn.degree() == 0) s += top.abs().str();
  else if (top_unit) s += "(" + pn.str(var) + ")";
  else s += top.abs().str() + "(" + pn.str(var) + ")";
  s += "/";
  if (bottom == Rational(1)) s += "(" + pd.str(var) + ")";
  else s += "(" + bottom.str() + "(" + pd.str(var) + "))";
  return s;
}

}  // namespace hvcert::algebra
