#include "hvcert/sphere.hpp"

#include <cmath>
#include <string>

#include "hvcert/error.hpp"
#include "hvcert/quadrature.hpp"

namespace hvcert::sphere {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double pairwise(const std::vector<double>& w, const std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += w[i] * v[i];
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise(w, v, lo, mid) + pairwise(w, v, mid, hi);
}

double contract(const Mat3<double>& a, const Mat3<double>& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a[i][j] * b[i][j];
  return s;
}

}  // namespace

double pairwise_weighted_sum(const std::vector<double>& w, const std::vector<double>& v) {
  if (w.size() != v.size()) throw Error(ErrorCode::degenerate_parameters, "size mismatch in quadrature sum");
  return w.empty() ? 0.0 : pairwise(w, v, 0, w.size());
}

SphereGrid::SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi > 0 ? n_phi : 2 * n_theta) {
  if (n_theta_ < 1) throw Error(ErrorCode::degenerate_parameters, "sphere grid needs n_theta >= 1");
  std::vector<double> t, w;
  quadrature::gauss_legendre(n_theta_, t, w);
  nodes_.reserve(static_cast<std::size_t>(n_theta_ * n_phi_));
  for (int i = 0; i < n_theta_; ++i) {
    const double ct = t[static_cast<std::size_t>(i)];
    const double theta = std::acos(ct), st = std::sin(theta);
    for (int j = 0; j < n_phi_; ++j) {
      const double phi = 2.0 * kPi * j / n_phi_;
      const double cp = std::cos(phi), sp = std::sin(phi);
      Node nd;
      nd.theta = theta;
      nd.phi = phi;
      nd.weight = 0.5 * w[static_cast<std::size_t>(i)] / n_phi_;
      nd.x = {st * cp, st * sp, ct};
      nd.e_theta = {ct * cp, ct * sp, -st};
      nd.e_phi = {-sp, cp, 0.0};
      nodes_.push_back(nd);
    }
  }
}

SphereGrid SphereGrid::for_degree(int degree) {
  const int nt = std::max(1, degree / 2 + 1);
  return SphereGrid(nt, degree + 1);
}

double SphereGrid::mean(const std::vector<double>& values) const {
  std::vector<double> w(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) w[i] = nodes_[i].weight;
  return pairwise_weighted_sum(w, values);
}

ScalarField ScalarField::sample(const SphereGrid& grid, const std::function<double(const Vec3<double>&)>& f) {
  ScalarField s;
  s.grid = &grid;
  s.values = grid.map<double>([&](const SphereGrid::Node& nd) { return f(nd.x); });
  return s;
}

// --- TensorField2 -----------------------------------------------------------

TensorField2 TensorField2::from_ambient(const SphereGrid& grid, const std::vector<Mat3<double>>& t) {
  TensorField2 f;
  f.grid = &grid;
  f.comps.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& nd = grid.node(i);
    const double st = std::sin(nd.theta);
    Vec3<double> d[2] = {nd.e_theta, {st * nd.e_phi[0], st * nd.e_phi[1], st * nd.e_phi[2]}};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        double s = 0.0;
        for (int p = 0; p < 3; ++p)
          for (int q = 0; q < 3; ++q) s += d[a][p] * t[i][p][q] * d[b][q];
        f.comps[i][static_cast<std::size_t>(2 * a + b)] = s;
      }
  }
  return f;
}

std::vector<Mat3<double>> TensorField2::to_ambient() const {
  const TensorField2 up = position == IndexPosition::upper ? *this : raised();
  std::vector<Mat3<double>> out(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& nd = grid->node(i);
    const double st = std::sin(nd.theta);
    Vec3<double> d[2] = {nd.e_theta, {st * nd.e_phi[0], st * nd.e_phi[1], st * nd.e_phi[2]}};
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q) {
        double s = 0.0;
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) s += up.comps[i][static_cast<std::size_t>(2 * a + b)] * d[a][p] * d[b][q];
        out[i][p][q] = s;
      }
  }
  return out;
}

namespace {

TensorField2 rescaled(const TensorField2& f, bool raise) {
  TensorField2 out = f;
  for (std::size_t i = 0; i < f.comps.size(); ++i) {
    const double s2 = std::pow(std::sin(f.grid->node(i).theta), 2);
    const double k = raise ? 1.0 / s2 : s2;
    out.comps[i][1] *= k;
    out.comps[i][2] *= k;
    out.comps[i][3] *= k * k;
  }
  out.position = raise ? IndexPosition::upper : IndexPosition::lower;
  return out;
}

}  // namespace

TensorField2 TensorField2::raised() const {
  if (position == IndexPosition::upper) return *this;
  return rescaled(*this, true);
}

TensorField2 TensorField2::lowered() const {
  if (position == IndexPosition::lower) return *this;
  return rescaled(*this, false);
}

ScalarField TensorField2::trace() const {
  ScalarField s;
  s.grid = grid;
  s.values.resize(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const double s2 = std::pow(std::sin(grid->node(i).theta), 2);
    s.values[i] = position == IndexPosition::lower ? comps[i][0] + comps[i][3] / s2
                                                   : comps[i][0] + comps[i][3] * s2;
  }
  return s;
}

double TensorField2::max_asymmetry() const {
  double m = 0.0;
  for (const auto& c : comps) m = std::max(m, std::fabs(c[1] - c[2]));
  return m;
}

// --- SphereFunction -----------------------------------------------------------

SphereFunction::SphereFunction(CartesianPolynomial F) : F_(std::move(F)) {
  for (int a = 0; a < 3; ++a) DF_[static_cast<std::size_t>(a)] = F_.derivative(a);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      D2F_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = DF_[static_cast<std::size_t>(a)].derivative(b);
}

SphereFunction SphereFunction::harmonic(const HarmonicSpec& spec, double coeff) {
  return SphereFunction(coeff * harmonic_polynomial(spec));
}

HessianResult covariant_hessian(const SphereFunction& f, const SphereGrid& grid) {
  const auto H = grid.map<Mat3<double>>([&](const SphereGrid::Node& nd) { return f.hessian(nd.x); });
  return {TensorField2::from_ambient(grid, H), true, ""};
}

SpectralProjection spectral_projection(const ScalarField& f, int l_max) {
  SpectralProjection p;
  CartesianPolynomial sum;
  for (const auto& spec : harmonic_basis(0, l_max)) {
    const CartesianPolynomial Y = harmonic_polynomial(spec);
    std::vector<double> prod(f.values.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = f.values[i] * Y(f.grid->node(i).x);
    const double c = f.grid->mean(prod);
    p.coefficients.emplace_back(spec, c);
    sum += c * Y;
  }
  p.function = SphereFunction(sum);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    p.max_residual = std::max(p.max_residual, std::fabs(f.values[i] - p.function.value(f.grid->node(i).x)));
  return p;
}

HessianResult covariant_hessian(const ScalarField& f, int l_max, double residual_tol) {
  const SpectralProjection p = spectral_projection(f, l_max);
  HessianResult r = covariant_hessian(p.function, *f.grid);
  if (p.max_residual > residual_tol) {
    r.accurate = false;
    r.warning = "field not resolved by degree " + std::to_string(l_max) + " harmonics (residual " +
                std::to_string(p.max_residual) + ")";
  }
  return r;
}

// --- BTensor --------------------------------------------------------------------

BTensor::BTensor(std::vector<std::pair<double, HarmonicSpec>> mix, double n) : n_(n) {
  if (n == 2.0) throw Error(ErrorCode::degenerate_parameters, "b tensor needs n != 2");
  for (const auto& [c, spec] : mix) {
    if (spec.eigenvalue() == n - 1.0)
      throw Error(ErrorCode::excluded_eigenvalue, spec.str() + " has eigenvalue n-1");
    comps_.push_back({c, spec, SphereFunction::harmonic(spec)});
  }
}

double BTensor::double_divergence(const Vec3<double>& x) const {
  const Vec3<J1> y = seed1(x);
  const Vec3<J1> V = divergence(y);
  const Mat3<double> P = tangent_projector(unit(x));
  double s = 0.0;
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 3; ++m)
      for (int k = 0; k < 3; ++k) s += P[j][m] * V[k].d[m] * P[k][j];
  return s;
}

BTensor b_tensor(const HarmonicSpec& spec, double n) { return BTensor({{1.0, spec}}, n); }

std::array<double, 3> qbc_quadrature(const BTensor& b, const SphereGrid& grid, Execution how) {
  struct Local {
    double q, bb, cc;
  };
  const auto vals = grid.map<Local>(
      [&](const SphereGrid::Node& nd) {
        const Mat3<double> bv = b.eval(nd.x);
        const auto G = covariant_derivative([&](const auto& y) { return b.eval(y); }, nd.x);
        double bb = 0.0, cc = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
              bb += G[i][j][k] * G[j][i][k];
              cc += G[i][j][k] * G[i][j][k];
            }
        return Local{contract(bv, bv), bb, cc};
      },
      how);
  std::vector<double> q(vals.size()), bb(vals.size()), cc(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    q[i] = vals[i].q;
    bb[i] = vals[i].bb;
    cc[i] = vals[i].cc;
  }
  return {grid.mean(q), grid.mean(bb), grid.mean(cc)};
}

QbcForms qbc_closed_forms(const HarmonicSpec& spec, double n) {
  const BTensor b = b_tensor(spec, n);
  const double nu = spec.eigenvalue();
  QbcForms f;
  f.Q = (n - 1.0) / (n - 2.0) * nu / (nu - n + 1.0);
  f.B = -(n - 1.0) * f.Q + nu;
  f.C = -(n - 1.0) * f.Q + (n - 1.0) / (n - 2.0) * nu;
  const auto quad = qbc_quadrature(b, SphereGrid::for_degree(2 * spec.l + 8));
  f.Q_quad = quad[0];
  f.B_quad = quad[1];
  f.C_quad = quad[2];
  auto rel = [](double a, double b) {
    const double scale = std::max(std::fabs(a), 1.0);
    return std::fabs(a - b) / scale;
  };
  f.max_rel_deviation = std::max({rel(f.Q, f.Q_quad), rel(f.B, f.B_quad), rel(f.C, f.C_quad)});
  return f;
}

double i_s_functional(const SphereFunction& f, const ScalarField& rbar, double n, int omega, double mean_tol) {
  const SphereGrid& grid = *rbar.grid;
  const auto fv = grid.map<double>([&](const SphereGrid::Node& nd) { return f.value(nd.x); });
  const double m = grid.mean(fv);
  if (std::fabs(m) > mean_tol)
    throw Error(ErrorCode::nonzero_mean, "mean of f is " + std::to_string(m));
  const double X = omega + 2.0;
  const double a = 4.0 * (n - 1.0) * (n - 2.0);
  const double b = 4.0 * n * (n - 2.0) * (n - 2.0) - 4.0 * X * X * (n * n + n + 2.0);
  const double c = 2.0 * (n - 2.0) * (n - 2.0);
  std::vector<double> integrand(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto g = f.gradient(grid.node(i).x);
    const double g2 = g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
    integrand[i] = a * g2 - b * fv[i] * fv[i] - c * fv[i] * rbar.values[i];
  }
  return grid.mean(integrand);
}

double i_s_functional(const ScalarField& f, const ScalarField& rbar, double n, int omega, int l_max,
                      double mean_tol) {
  return i_s_functional(spectral_projection(f, l_max).function, rbar, n, omega, mean_tol);
}

namespace {

std::vector<double> curvature_means(const BTensor& b, int omega, double t, const std::vector<double>& radii,
                                    const SphereGrid& grid, Execution how) {
  const AnnulusMetric metric{&b, omega, t};
  std::vector<double> means;
  for (double r : radii) {
    const auto R = grid.map<double>(
        [&](const SphereGrid::Node& nd) {
          return scalar_curvature(metric, Vec3<double>{r * nd.x[0], r * nd.x[1], r * nd.x[2]});
        },
        how);
    means.push_back(grid.mean(R));
  }
  return means;
}

}  // namespace

AnnulusReport annulus_curvature_check(const BTensor& b, int omega, double t, const RadialWindow& window,
                                      const SphereGrid& grid, Execution how, double resolution_tol) {
  if (b.n() != 3.0)
    throw Error(ErrorCode::degenerate_parameters, "annulus check needs the trace-free case n = 3");
  if (window.count < 1 || !(window.r_lo > 0.0) || window.r_hi < window.r_lo)
    throw Error(ErrorCode::degenerate_parameters, "bad radial window");
  AnnulusReport rep;
  const auto qbc = qbc_quadrature(b, grid, how);
  rep.Q = qbc[0];
  rep.B = qbc[1];
  rep.C = qbc[2];
  const double h = 1.0 + 0.5 * omega;
  rep.bracket = rep.B / 2.0 - rep.C / 4.0 - h * h * rep.Q;

  std::vector<double> radii;
  for (int i = 0; i < window.count; ++i)
    radii.push_back(window.count == 1 ? window.r_lo
                                      : window.r_lo + (window.r_hi - window.r_lo) * i / (window.count - 1));
  const auto coarse = curvature_means(b, omega, t, radii, grid, how);
  const SphereGrid fine(grid.n_theta() + 6, grid.n_phi() + 12);
  const auto refined = curvature_means(b, omega, t, radii, fine, how);

  double worst_resolution = 0.0, worst_resolution_r = radii.front();
  for (std::size_t i = 0; i < radii.size(); ++i) {
    AnnulusSample s;
    s.r = radii[i];
    s.mean_curvature = refined[i];
    const double scale = t > 0.0 ? t * t * std::pow(radii[i], 2.0 * omega + 2.0) : 1.0;
    const double drift = std::fabs(refined[i] - coarse[i]) / scale /
                         std::max(1.0, std::fabs(t > 0.0 ? refined[i] / scale : 0.0));
    if (drift > worst_resolution) {
      worst_resolution = drift;
      worst_resolution_r = radii[i];
    }
    if (t > 0.0) {
      s.normalized = refined[i] / scale;
      s.rel_deviation = std::fabs(*s.normalized - rep.bracket) / std::fabs(rep.bracket);
      if (*s.rel_deviation >= rep.max_rel_deviation) {
        rep.max_rel_deviation = *s.rel_deviation;
        rep.worst_r = radii[i];
      }
    }
    rep.samples.push_back(s);
  }
  if (worst_resolution > resolution_tol)
    throw Error(ErrorCode::accuracy_failure,
                "grid refinement moves the curvature mean by " + std::to_string(worst_resolution) +
                    " at r=" + std::to_string(worst_resolution_r));
  return rep;
}

}  // namespace hvcert::sphere
