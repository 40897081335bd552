#include "hvcert/algebra/rational.hpp"

#include <cmath>
#include <ostream>

#include "hvcert/error.hpp"

namespace hvcert::algebra {

Rational::Rational(long numerator, long denominator) : v_(numerator, denominator) {
  if (denominator == 0) throw Error(ErrorCode::degenerate_parameters, "zero denominator");
  v_.canonicalize();
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
    : v_(numerator, denominator) {
  if (denominator == 0) throw Error(ErrorCode::degenerate_parameters, "zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::invalid_config, "not a rational: '" + s + "'");
  }
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::degenerate_parameters, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

long double Rational::to_long_double() const {
  if (is_zero()) return 0.0L;
  mpz_class num = ::abs(v_.get_num());
  const mpz_class& den = v_.get_den();
  // Scale so the integer quotient has at most 64 bits (and at least 62).
  const long shift = 63 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
  mpz_class scaled_den = den;
  if (shift >= 0) num <<= static_cast<unsigned long>(shift);
  else scaled_den <<= static_cast<unsigned long>(-shift);
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), scaled_den.get_mpz_t());
  std::uint64_t bits = 0;
  mpz_export(&bits, nullptr, -1, sizeof(bits), 0, 0, q.get_mpz_t());
  const long double mag = std::ldexp(static_cast<long double>(bits), static_cast<int>(-shift));
  return sign() < 0 ? -mag : mag;
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
  if (digits < 1) digits = 1;
  if (is_zero()) return "0";
  mpq_class a = ::abs(v_);
  // Find e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto ten_pow = [](long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
    return p;
  };
  auto scaled_by = [&](long k) {  // a * 10^k
    mpq_class r = a;
    if (k >= 0) r *= mpq_class(ten_pow(k));
    else r /= mpq_class(ten_pow(k));
    return r;
  };
  while (scaled_by(-e) >= 10) ++e;
  while (scaled_by(-e) < 1) --e;
  mpq_class s = scaled_by(digits - 1 - e);
  mpz_class m;
  mpz_tdiv_q(m.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  std::string d = m.get_str();
  std::string out = sign() < 0 ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) {
    // Strip trailing zeros of the mantissa.
    std::string frac = d.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  }
  if (e != 0) out += "e" + std::to_string(e);
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::degenerate_parameters, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational power_of_two_inverse(unsigned long bits) {
  mpz_class d = 1;
  d <<= bits;
  return Rational(mpz_class(1), d);
}

}  // namespace hvcert::algebra
