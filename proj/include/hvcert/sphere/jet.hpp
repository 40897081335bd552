#pragma once

#include <array>
#include <cmath>

namespace hvcert::sphere {

/// First-order forward-mode jet in three variables. Nesting Jet<Jet<double>>
/// carries second derivatives, Jet<Jet<Jet<double>>> third.
template <class T>
struct Jet {
  T v{};
  std::array<T, 3> d{};

  Jet() = default;
  Jet(double c) : v(c) {}  // NOLINT(google-explicit-constructor)
  Jet(const T& value, const std::array<T, 3>& grad) : v(value), d(grad) {}

  friend Jet operator+(const Jet& a, const Jet& b) {
    return {a.v + b.v, {a.d[0] + b.d[0], a.d[1] + b.d[1], a.d[2] + b.d[2]}};
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    return {a.v - b.v, {a.d[0] - b.d[0], a.d[1] - b.d[1], a.d[2] - b.d[2]}};
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    return {a.v * b.v,
            {a.d[0] * b.v + a.v * b.d[0], a.d[1] * b.v + a.v * b.d[1], a.d[2] * b.v + a.v * b.d[2]}};
  }
  friend Jet operator/(const Jet& a, const Jet& b) {
    const T inv = T(1.0) / b.v;
    const T q = a.v * inv;
    return {q, {(a.d[0] - q * b.d[0]) * inv, (a.d[1] - q * b.d[1]) * inv, (a.d[2] - q * b.d[2]) * inv}};
  }
  Jet operator-() const { return {-v, {-d[0], -d[1], -d[2]}}; }
  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
};

template <class T>
Jet<T> sqrt(const Jet<T>& a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  const T h = T(0.5) / s;
  return {s, {a.d[0] * h, a.d[1] * h, a.d[2] * h}};
}

template <class T>
Jet<T> pow(const Jet<T>& a, double p) {
  using std::pow;
  const T slope = T(p) * pow(a.v, p - 1.0);
  return {pow(a.v, p), {a.d[0] * slope, a.d[1] * slope, a.d[2] * slope}};
}

template <class T>
using Vec3 = std::array<T, 3>;
template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

using J1 = Jet<double>;
using J2 = Jet<J1>;
using J3 = Jet<J2>;

/// The point x as independent variables of each jet flavour.
inline Vec3<J1> seed1(const Vec3<double>& x) {
  Vec3<J1> s;
  for (int i = 0; i < 3; ++i) {
    s[i] = J1(x[i]);
    s[i].d[i] = 1.0;
  }
  return s;
}

inline Vec3<J2> seed2(const Vec3<double>& x) {
  const Vec3<J1> inner = seed1(x);
  Vec3<J2> s;
  for (int i = 0; i < 3; ++i) {
    s[i].v = inner[i];
    s[i].d[i] = J1(1.0);
  }
  return s;
}

inline Vec3<J3> seed3(const Vec3<double>& x) {
  const Vec3<J2> inner = seed2(x);
  Vec3<J3> s;
  for (int i = 0; i < 3; ++i) {
    s[i].v = inner[i];
    s[i].d[i] = J2(1.0);
  }
  return s;
}

/// u = x/|x| and P = I - u u^T, for any scalar flavour.
template <class T>
Vec3<T> unit(const Vec3<T>& x) {
  using std::sqrt;
  const T r = sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  return {x[0] / r, x[1] / r, x[2] / r};
}

template <class T>
Mat3<T> tangent_projector(const Vec3<T>& u) {
  Mat3<T> p;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) p[a][b] = T(a == b ? 1.0 : 0.0) - u[a] * u[b];
  return p;
}

template <class T>
Mat3<T> matmul(const Mat3<T>& a, const Mat3<T>& b) {
  Mat3<T> c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      T s(0.0);
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

}  // namespace hvcert::sphere
