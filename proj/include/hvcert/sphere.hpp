#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvcert/sphere/harmonics.hpp"
#include "hvcert/sphere/jet.hpp"

namespace hvcert::sphere {

enum class Execution { serial, parallel };

/// Product grid on S^2: Gauss-Legendre in cos(theta), uniform in phi.
class SphereGrid {
 public:
  struct Node {
    double theta, phi, weight;  // weights sum to 1
    Vec3<double> x, e_theta, e_phi;
  };

  /// n_phi = 0 picks 2*n_theta.
  explicit SphereGrid(int n_theta, int n_phi = 0);
  /// Smallest grid integrating every polynomial of degree <= degree exactly.
  static SphereGrid for_degree(int degree);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Weighted mean with a fixed pairwise summation tree.
  double mean(const std::vector<double>& values) const;

  /// f evaluated at every node, in node order.
  template <class R, class F>
  std::vector<R> map(F&& f, Execution how = Execution::serial) const {
    std::vector<R> out(nodes_.size());
    const long count = static_cast<long>(nodes_.size());
    if (how == Execution::parallel) {
#pragma omp parallel for schedule(static)
      for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(nodes_[static_cast<std::size_t>(i)]);
    } else {
      for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(nodes_[static_cast<std::size_t>(i)]);
    }
    return out;
  }

 private:
  int n_theta_, n_phi_;
  std::vector<Node> nodes_;
};

/// Pairwise sum of w_i v_i in index order.
double pairwise_weighted_sum(const std::vector<double>& w, const std::vector<double>& v);

struct ScalarField {
  const SphereGrid* grid = nullptr;
  std::vector<double> values;

  static ScalarField sample(const SphereGrid& grid, const std::function<double(const Vec3<double>&)>& f);
  double mean() const { return grid->mean(values); }
};

enum class IndexPosition { lower, upper };

/// Rank-2 tensor in the coordinate frame (d_theta, d_phi) of the round metric
/// s = diag(1, sin^2 theta); comps = {T_tt, T_tp, T_pt, T_pp}.
struct TensorField2 {
  const SphereGrid* grid = nullptr;
  std::vector<std::array<double, 4>> comps;
  IndexPosition position = IndexPosition::lower;

  /// From ambient 3x3 tangent tensors (covariant reading).
  static TensorField2 from_ambient(const SphereGrid& grid, const std::vector<Mat3<double>>& t);
  std::vector<Mat3<double>> to_ambient() const;
  TensorField2 raised() const;
  TensorField2 lowered() const;
  /// s^{ij} T_ij (or s_ij T^ij).
  ScalarField trace() const;
  double max_asymmetry() const;
};

/// Function on S^2 given by a polynomial F on R^3, read on the unit sphere.
/// Derivatives are taken through the ambient space.
class SphereFunction {
 public:
  SphereFunction() = default;
  explicit SphereFunction(CartesianPolynomial F);
  static SphereFunction harmonic(const HarmonicSpec& spec, double coeff = 1.0);

  const CartesianPolynomial& polynomial() const { return F_; }

  /// At u = x/|x|, for any scalar flavour.
  template <class T>
  T value(const Vec3<T>& x) const {
    return F_(unit(x));
  }
  /// Tangential gradient P grad F at u = x/|x|.
  template <class T>
  Vec3<T> gradient(const Vec3<T>& x) const {
    const Vec3<T> u = unit(x);
    const Mat3<T> P = tangent_projector(u);
    Vec3<T> g;
    Vec3<T> raw{DF_[0](u), DF_[1](u), DF_[2](u)};
    for (int a = 0; a < 3; ++a) g[a] = P[a][0] * raw[0] + P[a][1] * raw[1] + P[a][2] * raw[2];
    return g;
  }
  /// Covariant Hessian P D^2F P - (u . grad F) P at u = x/|x|.
  template <class T>
  Mat3<T> hessian(const Vec3<T>& x) const {
    const Vec3<T> u = unit(x);
    const Mat3<T> P = tangent_projector(u);
    Mat3<T> H;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) H[a][b] = D2F_[a][b](u);
    const T radial = u[0] * DF_[0](u) + u[1] * DF_[1](u) + u[2] * DF_[2](u);
    Mat3<T> out = matmul(matmul(P, H), P);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) out[a][b] = out[a][b] - radial * P[a][b];
    return out;
  }

 private:
  CartesianPolynomial F_;
  std::array<CartesianPolynomial, 3> DF_;
  std::array<std::array<CartesianPolynomial, 3>, 3> D2F_;
};

/// Slot-projected ambient derivative of a tangent-tensor-valued function
/// A(x) (read at x/|x|): out[m][a][b] = P_mm' P_aa' P_bb' d_m' A_a'b'.
/// On the unit sphere this is the Levi-Civita derivative nabla_m A_ab.
template <class T, class F>
std::array<Mat3<T>, 3> covariant_derivative(F&& fn, const Vec3<T>& x) {
  Vec3<Jet<T>> seeded;
  for (int i = 0; i < 3; ++i) {
    seeded[i].v = x[i];
    seeded[i].d[i] = T(1.0);
  }
  const Mat3<Jet<T>> A = fn(seeded);
  const Mat3<T> P = tangent_projector(unit(x));
  std::array<Mat3<T>, 3> raw, out;
  for (int m = 0; m < 3; ++m)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) raw[m][a][b] = A[a][b].d[m];
  for (int m = 0; m < 3; ++m)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        T s(0.0);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += P[m][i] * P[a][j] * P[b][k] * raw[i][j][k];
        out[m][a][b] = s;
      }
  return out;
}

struct HessianResult {
  TensorField2 field;
  /// False when the input had to be projected and the projection residual
  /// exceeded the tolerance.
  bool accurate = true;
  std::string warning;
};

HessianResult covariant_hessian(const SphereFunction& f, const SphereGrid& grid);

struct SpectralProjection {
  SphereFunction function;
  std::vector<std::pair<HarmonicSpec, double>> coefficients;
  double max_residual = 0.0;  // max |f - projection| over the nodes
};

/// Least-squares fit by harmonics of degree <= l_max using the grid
/// quadrature (exact when the grid resolves degree 2 l_max).
SpectralProjection spectral_projection(const ScalarField& f, int l_max);

/// Samples a field, projects it, then takes the analytic Hessian.
HessianResult covariant_hessian(const ScalarField& f, int l_max, double residual_tol = 1e-10);

/// b = sum_k c_k/((n-2)(nu_k+1-n)) [(n-1) Hess(phi_k) + nu_k phi_k s].
class BTensor {
 public:
  struct Component {
    double coeff;
    HarmonicSpec spec;
    SphereFunction phi;
  };

  /// Throws excluded_eigenvalue when nu = n - 1 for some component and
  /// degenerate_parameters when n = 2.
  BTensor(std::vector<std::pair<double, HarmonicSpec>> mix, double n = 3.0);

  double n() const { return n_; }
  const std::vector<Component>& components() const { return comps_; }

  template <class T>
  T phi(const Vec3<T>& x) const {
    T s(0.0);
    for (const auto& c : comps_) s += T(c.coeff) * c.phi.value(x);
    return s;
  }

  template <class T>
  Mat3<T> eval(const Vec3<T>& x) const {
    const Mat3<T> P = tangent_projector(unit(x));
    Mat3<T> b;
    for (auto& row : b) row.fill(T(0.0));
    for (const auto& c : comps_) {
      const double nu = c.spec.eigenvalue();
      const double kappa = c.coeff / ((n_ - 2.0) * (nu + 1.0 - n_));
      const Mat3<T> H = c.phi.hessian(x);
      const T f = c.phi.value(x);
      for (int a = 0; a < 3; ++a)
        for (int d = 0; d < 3; ++d)
          b[a][d] = b[a][d] + T(kappa) * (T(n_ - 1.0) * H[a][d] + T(nu) * f * P[a][d]);
    }
    return b;
  }

  /// nabla^i b_ij as an ambient tangent vector.
  template <class T>
  Vec3<T> divergence(const Vec3<T>& x) const {
    const auto G = covariant_derivative([this](const auto& y) { return eval(y); }, x);
    Vec3<T> v;
    for (int j = 0; j < 3; ++j) {
      T s(0.0);
      for (int m = 0; m < 3; ++m) s += G[m][m][j];
      v[j] = s;
    }
    return v;
  }

  /// nabla^j nabla^i b_ij.
  double double_divergence(const Vec3<double>& x) const;

 private:
  double n_;
  std::vector<Component> comps_;
};

/// Single harmonic with unit coefficient.
BTensor b_tensor(const HarmonicSpec& spec, double n = 3.0);

struct QbcForms {
  double Q = 0.0, B = 0.0, C = 0.0;              // closed forms
  double Q_quad = 0.0, B_quad = 0.0, C_quad = 0.0;  // grid means
  double max_rel_deviation = 0.0;
};

/// Q = mean b_ij b^ij, B = mean nabla^i b^jk nabla_j b_ik,
/// C = mean nabla_i b_jk nabla^i b^jk for one unit harmonic, closed form and
/// quadrature.
QbcForms qbc_closed_forms(const HarmonicSpec& spec, double n = 3.0);

/// Quadrature of Q, B, C for an arbitrary mix.
std::array<double, 3> qbc_quadrature(const BTensor& b, const SphereGrid& grid,
                                     Execution how = Execution::serial);

/// Mean of 4(n-1)(n-2)|grad f|^2 - [4n(n-2)^2 - 4(w+2)^2(n^2+n+2)] f^2 - 2(n-2)^2 f rbar.
/// Throws nonzero_mean if |mean f| exceeds mean_tol.
double i_s_functional(const SphereFunction& f, const ScalarField& rbar, double n, int omega,
                      double mean_tol = 1e-10);
/// Same for a sampled f, projected on degrees <= l_max first.
double i_s_functional(const ScalarField& f, const ScalarField& rbar, double n, int omega, int l_max,
                      double mean_tol = 1e-10);

/// Cartesian metric delta + t r^{w+2} B(x/r) + t^2 r^{2w+4} B^2/2 on R^3 minus
/// the origin, where B is the ambient form of the angular perturbation.
struct AnnulusMetric {
  const BTensor* b;
  int omega;
  double t;

  template <class T>
  Mat3<T> operator()(const Vec3<T>& X) const {
    using std::pow;
    using std::sqrt;
    const T r = sqrt(X[0] * X[0] + X[1] * X[1] + X[2] * X[2]);
    const Mat3<T> B = b->eval(X);
    const Mat3<T> B2 = matmul(B, B);
    const T first = T(t) * pow(r, omega + 2.0);
    const T second = T(0.5 * t * t) * pow(r, 2.0 * omega + 4.0);
    Mat3<T> g;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = T(i == j ? 1.0 : 0.0) + first * B[i][j] + second * B2[i][j];
    return g;
  }
};

/// Scalar curvature of a metric given by a callable templated on the scalar
/// type, from exact first and second derivatives (nested jets).
template <class Metric>
double scalar_curvature(const Metric& metric, const Vec3<double>& X);

struct AnnulusSample {
  double r = 0.0;
  double mean_curvature = 0.0;              // mean of R over S(r), round measure
  std::optional<double> normalized;         // mean / (t^2 r^{2w+2}), t > 0
  std::optional<double> rel_deviation;      // against the bracket
};

struct AnnulusReport {
  double Q = 0.0, B = 0.0, C = 0.0;
  double bracket = 0.0;  // B/2 - C/4 - (1+w/2)^2 Q
  std::vector<AnnulusSample> samples;
  double max_rel_deviation = 0.0;
  double worst_r = 0.0;
};

struct RadialWindow {
  double r_lo = 0.5;
  double r_hi = 1.0;
  int count = 3;
};

/// Throws degenerate_parameters if b is not trace-free (n != 3) and
/// accuracy_failure naming the worst r when a refined grid moves a
/// normalized mean by more than resolution_tol (relative).
AnnulusReport annulus_curvature_check(const BTensor& b, int omega, double t, const RadialWindow& window,
                                      const SphereGrid& grid, Execution how = Execution::parallel,
                                      double resolution_tol = 1e-6);

// --- implementation of the curvature template -----------------------------

template <class Metric>
double scalar_curvature(const Metric& metric, const Vec3<double>& X) {
  const Mat3<J2> gj = metric(seed2(X));
  double g[3][3], dg[3][3][3], ddg[3][3][3][3];  // dg[m][i][j] = d_m g_ij
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      g[i][j] = gj[i][j].v.v;
      for (int m = 0; m < 3; ++m) {
        dg[m][i][j] = gj[i][j].d[m].v;
        for (int p = 0; p < 3; ++p) ddg[p][m][i][j] = gj[i][j].d[m].d[p];
      }
    }
  // Inverse by cofactors.
  double gi[3][3];
  const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      gi[i][j] = (g[i1][j1] * g[i2][j2] - g[i1][j2] * g[i2][j1]) / det;
    }
  // d_m g^{ij} = -g^{ia} d_m g_ab g^{bj}.
  double dgi[3][3][3];
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) s -= gi[i][a] * dg[m][a][b] * gi[b][j];
        dgi[m][i][j] = s;
      }
  // Gamma_{l,ij} and its derivatives, then Gamma^k_ij.
  double G1[3][3][3], dG1[3][3][3][3], Gam[3][3][3], dGam[3][3][3][3];
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        G1[l][i][j] = 0.5 * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        for (int m = 0; m < 3; ++m)
          dG1[m][l][i][j] = 0.5 * (ddg[m][i][j][l] + ddg[m][j][i][l] - ddg[m][l][i][j]);
      }
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) s += gi[k][l] * G1[l][i][j];
        Gam[k][i][j] = s;
        for (int m = 0; m < 3; ++m) {
          double ds = 0.0;
          for (int l = 0; l < 3; ++l) ds += dgi[m][k][l] * G1[l][i][j] + gi[k][l] * dG1[m][l][i][j];
          dGam[m][k][i][j] = ds;
        }
      }
  double R = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double ric = 0.0;
      for (int k = 0; k < 3; ++k) {
        ric += dGam[k][k][i][j] - dGam[j][k][i][k];
        for (int l = 0; l < 3; ++l) ric += Gam[k][k][l] * Gam[l][i][j] - Gam[k][j][l] * Gam[l][i][k];
      }
      R += gi[i][j] * ric;
    }
  return R;
}

}  // namespace hvcert::sphere
