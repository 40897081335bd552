#pragma once

#include <string>
#include <vector>

#include "hvcert/sphere/jet.hpp"

namespace hvcert::sphere {

/// Polynomial in the Cartesian coordinates x, y, z with double coefficients.
class CartesianPolynomial {
 public:
  struct Term {
    int px, py, pz;
    double c;
  };

  CartesianPolynomial() = default;
  static CartesianPolynomial monomial(int px, int py, int pz, double c = 1.0);
  static CartesianPolynomial constant(double c) { return monomial(0, 0, 0, c); }

  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;

  CartesianPolynomial derivative(int axis) const;
  CartesianPolynomial& operator+=(const CartesianPolynomial& o);
  friend CartesianPolynomial operator+(CartesianPolynomial a, const CartesianPolynomial& b) { return a += b; }
  friend CartesianPolynomial operator*(const CartesianPolynomial& a, const CartesianPolynomial& b);
  friend CartesianPolynomial operator*(double s, CartesianPolynomial a);

  template <class T>
  T operator()(const Vec3<T>& x) const {
    if (terms_.empty()) return T(0.0);
    const int deg = degree();
    std::vector<T> pw[3];
    for (int a = 0; a < 3; ++a) {
      pw[a].resize(static_cast<std::size_t>(deg + 1));
      pw[a][0] = T(1.0);
      for (int k = 1; k <= deg; ++k) pw[a][k] = pw[a][k - 1] * x[a];
    }
    T s(0.0);
    for (const auto& t : terms_) s += T(t.c) * pw[0][t.px] * pw[1][t.py] * pw[2][t.pz];
    return s;
  }

 private:
  void add(int px, int py, int pz, double c);
  std::vector<Term> terms_;  // sorted by exponents, no zero coefficients
};

/// Real spherical harmonic of degree l and order m (cosine for m >= 0, sine
/// of |m| for m < 0), scaled so the mean of its square over S^2 is 1.
struct HarmonicSpec {
  int l = 2;
  int m = 0;
  double eigenvalue() const { return static_cast<double>(l) * (l + 1); }
  std::string str() const { return "Y(" + std::to_string(l) + "," + std::to_string(m) + ")"; }
};

/// Homogeneous harmonic polynomial of degree l restricting to the harmonic.
/// Throws out_of_range for |m| > l or l < 0.
CartesianPolynomial harmonic_polynomial(const HarmonicSpec& spec);

/// All specs with l in [l_lo, l_hi], m = -l..l.
std::vector<HarmonicSpec> harmonic_basis(int l_lo, int l_hi);

}  // namespace hvcert::sphere
