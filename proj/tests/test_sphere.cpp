#include <doctest.h>

#include <cmath>

#include "support/generators.hpp"
#include "hvcert/error.hpp"
#include "hvcert/spectral.hpp"
#include "hvcert/sphere.hpp"

using namespace hvcert;
using namespace hvcert::sphere;

namespace {

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no hvcert::Error thrown");
  return ErrorCode::internal_consistency;
}

double fro(const Mat3<double>& a) {
  double s = 0.0;
  for (const auto& row : a)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

// Scalar curvature of e^{2u} delta on R^3: -e^{-2u}(4 lap u + 2 |grad u|^2).
template <class T>
Mat3<T> conformal(const Vec3<T>& X, double a) {
  using std::pow;
  const T rr = X[0] * X[0] + X[1] * X[1] + X[2] * X[2];
  const T e = pow(T(1.0) + T(a) * rr, -2.0) * T(4.0);  // e^{2u}, u = log 2 - log(1 + a r^2)
  Mat3<T> g;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g[i][j] = i == j ? e : T(0.0);
  return g;
}

}  // namespace

TEST_CASE("harmonics are orthonormal under the grid mean") {
  const auto basis = harmonic_basis(0, 6);
  const auto grid = SphereGrid::for_degree(12);
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto fi = SphereFunction::harmonic(basis[i]);
    for (std::size_t j = i; j < basis.size(); ++j) {
      const auto fj = SphereFunction::harmonic(basis[j]);
      const auto prod = grid.map<double>([&](const SphereGrid::Node& nd) { return fi.value(nd.x) * fj.value(nd.x); });
      worst = std::max(worst, std::fabs(grid.mean(prod) - (i == j ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-10);
  CHECK_THROWS_AS(harmonic_polynomial({2, 3}), Error);
}

TEST_CASE("grid basics") {
  const SphereGrid g(5);
  CHECK(g.n_phi() == 10);
  CHECK(g.size() == 50u);
  double w = 0.0;
  for (const auto& nd : g.nodes()) w += nd.weight;
  CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
  const auto ones = std::vector<double>(g.size(), 1.0);
  CHECK(g.mean(ones) == doctest::Approx(1.0).epsilon(1e-14));
  const auto z2 = g.map<double>([](const SphereGrid::Node& nd) { return nd.x[2] * nd.x[2]; });
  CHECK(g.mean(z2) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  const auto par = g.map<double>([](const SphereGrid::Node& nd) { return nd.x[2] * nd.x[2]; }, Execution::parallel);
  CHECK(par == z2);
}

TEST_CASE("covariant Hessian") {
  const auto grid = SphereGrid::for_degree(8);
  const SphereFunction one(CartesianPolynomial::constant(2.5));
  double worst = 0.0;
  for (const auto& nd : grid.nodes()) worst = std::max(worst, fro(one.hessian(nd.x)));
  CHECK(worst <= 1e-14);

  // Trace of Hess Y equals -l(l+1) Y.
  for (int l = 1; l <= 5; ++l) {
    const auto y = SphereFunction::harmonic({l, l / 2});
    const auto h = covariant_hessian(y, grid);
    CHECK(h.accurate);
    const auto tr = h.field.trace();
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      err = std::max(err, std::fabs(tr.values[i] + l * (l + 1.0) * y.value(grid.node(i).x)));
    CHECK(err <= 1e-10);
    CHECK(h.field.max_asymmetry() <= 1e-12);
  }

  // Sampled input goes through the projection and agrees with the analytic path.
  const auto y = SphereFunction::harmonic({3, -2});
  const auto sampled = ScalarField::sample(grid, [&](const Vec3<double>& x) { return y.value(x); });
  const auto a = covariant_hessian(y, grid).field;
  const auto b = covariant_hessian(sampled, 4);
  CHECK(b.accurate);
  double d = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (int c = 0; c < 4; ++c) d = std::max(d, std::fabs(a.comps[i][c] - b.field.comps[i][c]));
  CHECK(d <= 1e-10);

  // A degree 7 field cannot be represented up to degree 4.
  const auto y7 = SphereFunction::harmonic({7, 1});
  const auto big = SphereGrid::for_degree(16);
  const auto s7 = ScalarField::sample(big, [&](const Vec3<double>& x) { return y7.value(x); });
  const auto bad = covariant_hessian(s7, 4);
  CHECK_FALSE(bad.accurate);
  CHECK_FALSE(bad.warning.empty());
}

TEST_CASE("third derivatives commute up to curvature") {
  // nabla_m H_ab - nabla_a H_mb = s_mb f_a - s_ab f_m on the unit sphere.
  testgen::SplitMix64 rng(71);
  const auto f = SphereFunction(harmonic_polynomial({3, 1}) + 0.4 * harmonic_polynomial({4, -3}));
  for (int trial = 0; trial < 30; ++trial) {
    Vec3<double> x{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    x = unit(x);
    const auto G = covariant_derivative([&](const auto& y) { return f.hessian(y); }, x);
    const auto P = tangent_projector(x);
    const auto g = f.gradient(x);
    double worst = 0.0;
    for (int m = 0; m < 3; ++m)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          worst = std::max(worst, std::fabs(G[m][a][b] - G[a][m][b] - (P[m][b] * g[a] - P[a][b] * g[m])));
    CHECK(worst <= 1e-11);

    // Finite difference of the Hessian along a tangent direction.
    Vec3<double> v{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    Vec3<double> tv;
    for (int i = 0; i < 3; ++i) tv[i] = P[i][0] * v[0] + P[i][1] * v[1] + P[i][2] * v[2];
    const double h = 1e-5;
    Vec3<double> xp, xm;
    for (int i = 0; i < 3; ++i) {
      xp[i] = x[i] + h * tv[i];
      xm[i] = x[i] - h * tv[i];
    }
    const auto Hp = f.hessian(xp), Hm = f.hessian(xm);
    double fd_err = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        double fd = 0.0, an = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            fd += P[a][i] * P[b][j] * (Hp[i][j] - Hm[i][j]) / (2 * h);
          }
        for (int m = 0; m < 3; ++m) an += tv[m] * G[m][a][b];
        fd_err = std::max(fd_err, std::fabs(fd - an));
      }
    CHECK(fd_err <= 1e-6);
  }
}

TEST_CASE("b tensor identities") {
  const auto grid = SphereGrid::for_degree(14);
  for (int l = 2; l <= 5; ++l)
    for (int m : {0, l, -1}) {
      const auto b = b_tensor({l, m});
      const double nu = l * (l + 1.0);
      double tr = 0.0, dv = 0.0, dd = 0.0;
      for (const auto& nd : grid.nodes()) {
        const auto B = b.eval(nd.x);
        tr = std::max(tr, std::fabs(B[0][0] + B[1][1] + B[2][2]));
        const auto div = b.divergence(nd.x);
        const auto gphi = b.components()[0].phi.gradient(nd.x);
        for (int j = 0; j < 3; ++j) dv = std::max(dv, std::fabs(div[j] + gphi[j]));
        dd = std::max(dd, std::fabs(b.double_divergence(nd.x) - nu * b.phi(nd.x)));
      }
      CHECK(tr <= 1e-10);
      CHECK(dv <= 1e-9);
      CHECK(dd <= 1e-8);
    }
  CHECK(code_of([] { b_tensor({2, 0}, 2.0); }) == ErrorCode::degenerate_parameters);
  CHECK(code_of([] { b_tensor({1, 0}, 3.0); }) == ErrorCode::excluded_eigenvalue);
  // nu = n - 1 also excludes l = 3 at n = 13.
  CHECK(code_of([] { b_tensor({3, 0}, 13.0); }) == ErrorCode::excluded_eigenvalue);
}

TEST_CASE("Q, B, C closed forms") {
  for (int l = 2; l <= 5; ++l)
    for (int m : {0, l}) {
      const auto f = qbc_closed_forms({l, m});
      CHECK(f.max_rel_deviation <= 1e-8);
      const double nu = l * (l + 1.0);
      CHECK(f.Q == doctest::Approx(2.0 * nu / (nu - 2.0)));
    }
  const auto l2 = qbc_closed_forms({2, 0});
  CHECK(l2.Q == doctest::Approx(3.0));
  CHECK(std::fabs(l2.B) <= 1e-12);
  CHECK(std::fabs(l2.B_quad) <= 1e-9);
  CHECK(l2.C == doctest::Approx(6.0));
  const auto l3 = qbc_closed_forms({3, 1});
  CHECK(l3.Q == doctest::Approx(12.0 / 5));
  CHECK(l3.B == doctest::Approx(7.2));
  CHECK(l3.C == doctest::Approx(19.2));

  // Serial and parallel quadrature agree bit for bit.
  const BTensor mix({{0.7, {2, 1}}, {-0.2, {4, 0}}});
  const auto grid = SphereGrid::for_degree(16);
  CHECK(qbc_quadrature(mix, grid, Execution::serial) == qbc_quadrature(mix, grid, Execution::parallel));
}

TEST_CASE("bracket matches u_k at n = 3") {
  // n = 3, omega = 2, k = 1 gives nu = 6, i.e. l = 2.
  const auto row = spectral::spectral_row(2, 1);
  const double u = row.u().evaluate(3.0);
  CHECK(u == doctest::Approx(-13.5));
  const auto f = qbc_closed_forms({2, 0});
  const double h = 2.0;  // 1 + omega/2
  CHECK(f.B / 2 - f.C / 4 - h * h * f.Q == doctest::Approx(u).epsilon(1e-12));
}

TEST_CASE("I_S functional") {
  const int omega = 2;
  const double n = 3.0;
  const auto grid = SphereGrid::for_degree(12);
  const double nu = 6.0;
  const double W = omega + 2.0;
  const double d = 4.0 * ((n - 1) * (n - 2) * nu - n * (n - 2) * (n - 2) + W * W * (n * n + n + 2));
  const auto phi = SphereFunction::harmonic({2, 1});
  const auto rbar = ScalarField::sample(grid, [&](const Vec3<double>& x) { return nu * phi.value(x); });
  const double c = (n - 2) * (n - 2) / d;
  const double best = -std::pow(n - 2, 4) * nu * nu / d;
  const auto at = [&](double s) { return i_s_functional(SphereFunction::harmonic({2, 1}, s * nu), rbar, n, omega); };
  CHECK(rel(at(c), best) <= 1e-10);
  CHECK(at(0.5 * c) > at(c));
  CHECK(at(1.5 * c) > at(c));

  // Additivity over orthogonal degrees.
  const auto f1 = SphereFunction::harmonic({2, 1}, 0.3);
  const auto f2 = SphereFunction::harmonic({3, -2}, -0.8);
  const SphereFunction sum(f1.polynomial() + f2.polynomial());
  const auto r0 = ScalarField::sample(grid, [](const Vec3<double>&) { return 0.0; });
  CHECK(rel(i_s_functional(sum, r0, n, omega), i_s_functional(f1, r0, n, omega) + i_s_functional(f2, r0, n, omega)) <=
        1e-12);
  // Sampled input gives the same value.
  const auto sampled = ScalarField::sample(grid, [&](const Vec3<double>& x) { return sum.value(x); });
  CHECK(rel(i_s_functional(sampled, r0, n, omega, 4), i_s_functional(sum, r0, n, omega)) <= 1e-10);

  CHECK(code_of([&] { i_s_functional(SphereFunction(CartesianPolynomial::constant(1.0)), r0, n, omega); }) ==
        ErrorCode::nonzero_mean);
}

TEST_CASE("scalar curvature of conformally flat metrics") {
  // 4/(1 + r^2)^2 delta is the round 3-sphere (R = 6); a = -1 gives hyperbolic space (R = -6).
  testgen::SplitMix64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vec3<double> X{rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    CHECK(scalar_curvature([](const auto& y) { return conformal(y, 1.0); }, X) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(scalar_curvature([](const auto& y) { return conformal(y, -1.0); }, X) ==
          doctest::Approx(-6.0).epsilon(1e-12));
  }
}

TEST_CASE("scalar curvature against finite differences") {
  // Independent oracle: Christoffel symbols from central differences of the
  // metric, Ricci from central differences of those.
  const auto b = b_tensor({2, 0});
  const AnnulusMetric metric{&b, 2, 0.3};
  const auto christoffel = [&](const Vec3<double>& X, double h, double (&Gam)[3][3][3]) {
    double dg[3][3][3];
    for (int m = 0; m < 3; ++m) {
      Vec3<double> p = X, q = X;
      p[m] += h;
      q[m] -= h;
      const auto gp = metric(p), gq = metric(q);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dg[m][i][j] = (gp[i][j] - gq[i][j]) / (2 * h);
    }
    const auto g = metric(X);
    const double det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                       g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                       g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    double gi[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
        gi[i][j] = (g[i1][j1] * g[i2][j2] - g[i1][j2] * g[i2][j1]) / det;
      }
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          double s = 0.0;
          for (int l = 0; l < 3; ++l) s += 0.5 * gi[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
          Gam[k][i][j] = s;
        }
    return std::array<std::array<double, 3>, 3>{
        {{gi[0][0], gi[0][1], gi[0][2]}, {gi[1][0], gi[1][1], gi[1][2]}, {gi[2][0], gi[2][1], gi[2][2]}}};
  };
  for (const Vec3<double> X : {Vec3<double>{0.3, -0.5, 0.6}, Vec3<double>{0.8, 0.1, 0.2}}) {
    const double h1 = 1e-4, h2 = 1e-3;
    double Gam[3][3][3], dGam[3][3][3][3];
    const auto gi = christoffel(X, h1, Gam);
    for (int m = 0; m < 3; ++m) {
      Vec3<double> p = X, q = X;
      p[m] += h2;
      q[m] -= h2;
      double Gp[3][3][3], Gq[3][3][3];
      christoffel(p, h1, Gp);
      christoffel(q, h1, Gq);
      for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) dGam[m][k][i][j] = (Gp[k][i][j] - Gq[k][i][j]) / (2 * h2);
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
    CHECK(scalar_curvature(metric, X) == doctest::Approx(R).epsilon(1e-5));
  }
}

TEST_CASE("annulus curvature") {
  const int omega = 2;
  const auto b = b_tensor({2, 0});
  const auto grid = SphereGrid::for_degree(12);

  const auto flat = annulus_curvature_check(b, omega, 0.0, RadialWindow{}, grid);
  for (const auto& s : flat.samples) {
    CHECK(std::fabs(s.mean_curvature) <= 1e-12);
    CHECK_FALSE(s.normalized.has_value());
  }

  // The t -> 0 limit of mean R / (t^2 r^{2w+2}) is -(1+w/2)^2 Q, with an O(t) remainder.
  const double limit = -4.0 * 3.0;
  double prev = INFINITY;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    const auto rep = annulus_curvature_check(b, omega, t, RadialWindow{}, grid);
    CHECK(rep.samples.size() == 3u);
    double worst = 0.0;
    for (const auto& s : rep.samples) worst = std::max(worst, std::fabs(*s.normalized - limit));
    CHECK(worst < 0.2 * prev);
    prev = worst;
  }
  CHECK(prev <= 1e-4);

  // The bracket B/2 - C/4 - (1+w/2)^2 Q is -13.5 here; the limit above sits Q/2 away from it.
  const auto rep = annulus_curvature_check(b, omega, 1e-4, RadialWindow{}, grid);
  CHECK(rep.bracket == doctest::Approx(-13.5).epsilon(1e-10));
  CHECK(rep.max_rel_deviation == doctest::Approx(1.0 / 9).epsilon(1e-4));
  CHECK(rep.bracket - limit == doctest::Approx(-rep.Q / 2).epsilon(1e-10));

  const auto b4 = b_tensor({2, 0}, 4.0);
  CHECK(code_of([&] { annulus_curvature_check(b4, omega, 1e-3, RadialWindow{}, grid); }) ==
        ErrorCode::degenerate_parameters);
  // A grid too coarse for the degree of R trips the resolution check.
  CHECK(code_of([&] { annulus_curvature_check(b, omega, 0.3, RadialWindow{}, SphereGrid(2)); }) ==
        ErrorCode::accuracy_failure);
}

TEST_CASE("tensor field conversions round trip") {
  const auto grid = SphereGrid::for_degree(8);
  const auto b = b_tensor({3, 2});
  std::vector<Mat3<double>> amb;
  for (const auto& nd : grid.nodes()) amb.push_back(b.eval(nd.x));
  const auto t = TensorField2::from_ambient(grid, amb);
  const auto back = t.to_ambient();
  double err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) err = std::max(err, std::fabs(back[i][a][c] - amb[i][a][c]));
  CHECK(err <= 1e-12);
  const auto up = t.raised();
  CHECK(up.position == IndexPosition::upper);
  const auto down = up.lowered();
  double e2 = 0.0, e3 = 0.0;
  const auto tr_lo = t.trace(), tr_up = up.trace();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (int c = 0; c < 4; ++c) e2 = std::max(e2, std::fabs(down.comps[i][c] - t.comps[i][c]));
    e3 = std::max(e3, std::fabs(tr_lo.values[i] - tr_up.values[i]));
  }
  CHECK(e2 <= 1e-10);
  CHECK(e3 <= 1e-10);
}
