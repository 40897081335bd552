#include "hvcert/sphere/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <tuple>

#include "hvcert/error.hpp"

namespace hvcert::sphere {

CartesianPolynomial CartesianPolynomial::monomial(int px, int py, int pz, double c) {
  CartesianPolynomial p;
  p.add(px, py, pz, c);
  return p;
}

int CartesianPolynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.px + t.py + t.pz);
  return d;
}

void CartesianPolynomial::add(int px, int py, int pz, double c) {
  if (c == 0.0) return;
  auto key = [](const Term& t) { return std::make_tuple(t.px, t.py, t.pz); };
  const Term probe{px, py, pz, 0.0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe,
                             [&](const Term& a, const Term& b) { return key(a) < key(b); });
  if (it != terms_.end() && key(*it) == key(probe)) {
    it->c += c;
    if (it->c == 0.0) terms_.erase(it);
  } else {
    terms_.insert(it, Term{px, py, pz, c});
  }
}

CartesianPolynomial CartesianPolynomial::derivative(int axis) const {
  CartesianPolynomial d;
  for (const auto& t : terms_) {
    const int e[3] = {t.px, t.py, t.pz};
    if (e[axis] == 0) continue;
    int f[3] = {t.px, t.py, t.pz};
    --f[axis];
    d.add(f[0], f[1], f[2], t.c * e[axis]);
  }
  return d;
}

CartesianPolynomial& CartesianPolynomial::operator+=(const CartesianPolynomial& o) {
  for (const auto& t : o.terms_) add(t.px, t.py, t.pz, t.c);
  return *this;
}

CartesianPolynomial operator*(const CartesianPolynomial& a, const CartesianPolynomial& b) {
  CartesianPolynomial p;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) p.add(s.px + t.px, s.py + t.py, s.pz + t.pz, s.c * t.c);
  return p;
}

CartesianPolynomial operator*(double s, CartesianPolynomial a) {
  if (s == 0.0) return {};
  for (auto& t : a.terms_) t.c *= s;
  return a;
}

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Legendre P_l coefficients in t (index = power), by the explicit sum.
std::vector<double> legendre(int l) {
  std::vector<double> a(static_cast<std::size_t>(l + 1), 0.0);
  for (int k = 0; k <= l / 2; ++k) {
    const double c = ((k % 2) ? -1.0 : 1.0) * factorial(2 * l - 2 * k) /
                     (std::pow(2.0, l) * factorial(k) * factorial(l - k) * factorial(l - 2 * k));
    a[static_cast<std::size_t>(l - 2 * k)] = c;
  }
  return a;
}

CartesianPolynomial r2_power(int j) {
  CartesianPolynomial r2 = CartesianPolynomial::monomial(2, 0, 0) + CartesianPolynomial::monomial(0, 2, 0) +
                           CartesianPolynomial::monomial(0, 0, 2);
  CartesianPolynomial p = CartesianPolynomial::constant(1.0);
  for (int i = 0; i < j; ++i) p = p * r2;
  return p;
}

}  // namespace

CartesianPolynomial harmonic_polynomial(const HarmonicSpec& spec) {
  const int l = spec.l, m = std::abs(spec.m);
  if (l < 0 || m > l) throw Error(ErrorCode::out_of_range, "no harmonic " + spec.str());
  // r^{l-m} P_l^{(m)}(z/r): sum over powers k of t with l-k even.
  const auto a = legendre(l);
  CartesianPolynomial zpart;
  for (int k = m; k <= l; ++k) {
    const double c = a[static_cast<std::size_t>(k)];
    if (c == 0.0) continue;
    const double dk = c * factorial(k) / factorial(k - m);
    zpart += dk * (CartesianPolynomial::monomial(0, 0, k - m) * r2_power((l - k) / 2));
  }
  // Re or Im of (x + i y)^m.
  CartesianPolynomial xy;
  for (int j = 0; j <= m; ++j) {
    // term C(m,j) x^{m-j} (i y)^j; i^j real for even j, imaginary for odd j.
    const bool real_part = j % 2 == 0;
    if (real_part != (spec.m >= 0)) continue;
    const double sign = ((j / 2) % 2) ? -1.0 : 1.0;
    xy += (sign * binomial(m, j)) * CartesianPolynomial::monomial(m - j, j, 0);
  }
  double norm = std::sqrt((2.0 * l + 1.0) * factorial(l - m) / factorial(l + m));
  if (m != 0) norm *= std::sqrt(2.0);
  return norm * (xy * zpart);
}

std::vector<HarmonicSpec> harmonic_basis(int l_lo, int l_hi) {
  std::vector<HarmonicSpec> out;
  for (int l = l_lo; l <= l_hi; ++l)
    for (int m = -l; m <= l; ++m) out.push_back({l, m});
  return out;
}

}  // namespace hvcert::sphere
