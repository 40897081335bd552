#include "hvcert/integrals.hpp"

#include <cmath>
#include <string>

#include "hvcert/error.hpp"

namespace hvcert::integrals {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double rel_dev(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)); }

// B(p,q) through tgamma while it stays finite, else lgamma.
double beta(double p, double q) {
  if (p + q < 160.0) return std::tgamma(p) * std::tgamma(q) / std::tgamma(p + q);
  return std::exp(std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q));
}

}  // namespace

double I_closed(double a, double b) {
  if (!(2.0 * a - b > 1.0) || !(b > -1.0))
    throw Error(ErrorCode::divergent_integral, "I_a^b with a=" + fmt(a) + ", b=" + fmt(b));
  const double p = 0.5 * (b + 1.0);
  return 0.5 * beta(p, a - p);
}

quadrature::Result I_quadrature(double a, double b, const quadrature::Options& opts) {
  if (!(2.0 * a - b > 1.0) || !(b > -1.0))
    throw Error(ErrorCode::divergent_integral, "I_a^b with a=" + fmt(a) + ", b=" + fmt(b));
  const double tail_power = 2.0 * a - b - 2.0;
  auto head = [=](double t) { return std::pow(t, b) / std::pow(1.0 + t * t, a); };
  auto tail = [=](double s) { return std::pow(s, tail_power) / std::pow(1.0 + s * s, a); };
  quadrature::Options half = opts;
  half.abs_tol = 0.5 * opts.abs_tol;
  const auto r1 = quadrature::integrate(head, 0.0, 1.0, half);
  const auto r2 = quadrature::integrate(tail, 0.0, 1.0, half);
  quadrature::Result r;
  r.value = r1.value + r2.value;
  r.abs_error = r1.abs_error + r2.abs_error;
  r.evaluations = r1.evaluations + r2.evaluations;
  r.intervals = r1.intervals + r2.intervals;
  r.converged = r1.converged && r2.converged;
  return r;
}

long double gamma_half_integer(int twice_x) {
  if (twice_x < 1) throw Error(ErrorCode::out_of_range, "gamma_half_integer needs x >= 1/2");
  long double g;
  if (twice_x % 2 == 0) {
    g = 1.0L;  // (x-1)!
    for (int k = 2; k < twice_x / 2; ++k) g *= k;
  } else {
    g = std::sqrt(static_cast<long double>(kPi));  // Gamma(1/2)
    for (int j = 1; j < twice_x; j += 2) g *= j / 2.0L;
  }
  return g;
}

RecurrenceReport recurrence_check(double a, double b, double tol) {
  if (b < 2.0) throw Error(ErrorCode::out_of_range, "recurrence needs b >= 2, got b=" + fmt(b));
  if (!(2.0 * a - b > 3.0))
    throw Error(ErrorCode::divergent_integral,
                "I_{a-1}^b diverges for a=" + fmt(a) + ", b=" + fmt(b));
  RecurrenceReport r;
  r.value = I_closed(a, b);
  r.via_same_a = (b - 1.0) / (2.0 * a - b - 1.0) * I_closed(a, b - 2.0);
  r.via_both = (b - 1.0) / (2.0 * a - 2.0) * I_closed(a - 1.0, b - 2.0);
  r.via_lower_a = (2.0 * a - b - 3.0) / (2.0 * a - 2.0) * I_closed(a - 1.0, b);
  r.max_rel_deviation = std::max({rel_dev(r.value, r.via_same_a), rel_dev(r.value, r.via_both),
                                  rel_dev(r.value, r.via_lower_a)});
  r.holds = r.max_rel_deviation <= tol;
  return r;
}

double truncation_order(double a, double b, double delta, double epsilon) {
  if (!(epsilon > 0.0) || epsilon > delta)
    throw Error(ErrorCode::degenerate_parameters, "need 0 < eps <= delta");
  const double upper = delta / epsilon;
  auto head = [=](double t) { return std::pow(t, b) / std::pow(1.0 + t * t, a); };
  quadrature::Options opts;
  if (upper <= 1.0) return quadrature::integrate(head, 0.0, upper, opts).value;
  const double tail_power = 2.0 * a - b - 2.0;
  auto tail = [=](double s) { return std::pow(s, tail_power) / std::pow(1.0 + s * s, a); };
  const double lo = 1.0 / upper;
  return quadrature::integrate(head, 0.0, 1.0, opts).value +
         quadrature::integrate(tail, lo, 1.0, opts, quadrature::geometric_breakpoints(lo, 1.0, lo)).value;
}

double truncation_bound(double a, double b, double delta, double epsilon) {
  const double e = 2.0 * a - b - 1.0;
  if (!(e > 0.0)) throw Error(ErrorCode::divergent_integral, "bound needs 2a - b > 1");
  return std::pow(epsilon, e) / (e * std::pow(delta, e));
}

double sphere_volume(int n) {
  if (n < 1) throw Error(ErrorCode::out_of_range, "sphere_volume needs n >= 1");
  const double h = 0.5 * (n + 1);
  return 2.0 * std::pow(kPi, h) / std::tgamma(h);
}

double best_constant(int n, double p) {
  if (p == 1.0 && n >= 2) return std::pow(n / sphere_volume(n - 1), 1.0 / n) / n;
  if (!(p > 1.0) || !(p < n))
    throw Error(ErrorCode::out_of_range, "best_constant needs 1 < p < n (p=" + fmt(p) + ")");
  const double np = n / p;
  const double bracket = std::tgamma(n + 1.0) /
                         (std::tgamma(np) * std::tgamma(n + 1.0 - np) * sphere_volume(n - 1));
  return (p - 1.0) / (n - p) * std::pow((n - p) / (n * (p - 1.0)), 1.0 / p) * std::pow(bracket, 1.0 / n);
}

double k2_inverse_square(int n) {
  if (n < 3) throw Error(ErrorCode::out_of_range, "k2_inverse_square needs n >= 3");
  return 0.25 * n * (n - 2.0) * std::pow(sphere_volume(n), 2.0 / n);
}

double hardy_constant(int n, double q) {
  if (!(q >= 1.0) || !(q < n)) throw Error(ErrorCode::out_of_range, "hardy_constant needs 1 <= q < n");
  return q / (n - q);
}

IdentityReport inte_identity_check(int n, double tol, bool use_quadrature) {
  if (n < 3) throw Error(ErrorCode::out_of_range, "identity needs n >= 3");
  auto I = [&](double a, double b) { return use_quadrature ? I_quadrature(a, b).value : I_closed(a, b); };
  const double w = sphere_volume(n - 1);
  IdentityReport r;
  r.lhs = (n - 2.0) * (n - 2.0) * w * I(n, n + 1.0) * std::pow(w * I(n, n - 1.0), -(n - 2.0) / n);
  r.rhs = k2_inverse_square(n);
  r.rel_deviation = rel_dev(r.lhs, r.rhs);
  r.holds = r.rel_deviation <= tol;
  return r;
}

IdentityReport rela_shorthand_check(int n, double tol) {
  if (n < 3) throw Error(ErrorCode::out_of_range, "identity needs n >= 3");
  IdentityReport r;
  r.lhs = 4.0 * (n - 2.0) * I_closed(n, n + 1.0) / std::pow(I_closed(n, n - 2.0), (n - 2.0) / n);
  r.rhs = n;
  r.rel_deviation = rel_dev(r.lhs, r.rhs);
  r.holds = r.rel_deviation <= tol;
  return r;
}

RadialYamabeResult radial_yamabe(const RadialProfile& p) {
  if (p.n < 3) throw Error(ErrorCode::degenerate_parameters, "radial_yamabe needs n >= 3");
  if (!(p.epsilon > 0.0) || !(p.epsilon <= p.delta) || !(p.delta > 0.0))
    throw Error(ErrorCode::degenerate_parameters, "need 0 < eps <= delta");
  const double n = p.n, e = p.epsilon;
  const double half = 0.5 * (n - 2.0);
  const double N = 2.0 * n / (n - 2.0);
  const double cutoff = std::pow(e / (p.delta * p.delta + e * e), half);
  const double amp = (n - 2.0) * std::pow(e, half);
  auto grad2 = [&](double r) {
    const double g = amp * r / std::pow(r * r + e * e, 0.5 * n);
    return g * g * std::pow(r, n - 1.0);
  };
  auto unorm = [&](double r) {
    const double u = std::pow(e / (r * r + e * e), half) - cutoff;
    return std::pow(std::max(u, 0.0), N) * std::pow(r, n - 1.0);
  };
  quadrature::Options opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-11;
  const auto bps = quadrature::geometric_breakpoints(0.0, p.delta, e);
  const auto G = quadrature::integrate(grad2, 0.0, p.delta, opts, bps);
  const auto U = quadrature::integrate(unorm, 0.0, p.delta, opts, bps);
  if (!G.converged || !U.converged)
    throw Error(ErrorCode::quadrature_not_converged,
                "achieved relative errors " + fmt(G.abs_error / G.value) + ", " + fmt(U.abs_error / U.value));
  const double w = sphere_volume(p.n - 1);
  RadialYamabeResult r;
  r.gradient = G.value;
  r.norm = U.value;
  r.value = w * G.value / std::pow(w * U.value, 2.0 / N);
  r.abs_error = r.value * (G.abs_error / G.value + (2.0 / N) * U.abs_error / U.value);
  return r;
}

NormF2Report norm_f2_check(int n, int omega, double tol) {
  if (n <= 2 * omega + 6)
    throw Error(ErrorCode::hypothesis_violated, "norm_f2_check needs n > 2 omega + 6");
  const double nn = n, w = omega, X = omega + 2.0;
  const double N = 2.0 * nn / (nn - 2.0);
  const double i5 = I_closed(nn, 2 * w + nn + 5), i3 = I_closed(nn, 2 * w + nn + 3),
               i1 = I_closed(nn, 2 * w + nn + 1);
  NormF2Report r;
  r.lhs = (w - nn + 4) * (w - nn + 4) * i5 + 2.0 * X * (w - nn + 4) * i3 + X * X * i1 -
          (N - 1.0) * (nn - 2) * (nn - 2) * i3 * I_closed(nn, nn + 1) / I_closed(nn, nn - 1);
  const double p2 = 4.0 * X * X * (nn * nn + nn + 2) - 4.0 * nn * (nn - 2) * (nn - 2);
  r.rhs = p2 / (4.0 * (nn - 1) * (nn - 2)) * I_closed(nn - 2, nn + 2 * w + 1);
  r.rhs_negated = -r.rhs;
  r.rel_deviation = rel_dev(r.lhs, r.rhs);
  r.rel_deviation_negated = rel_dev(r.lhs, r.rhs_negated);
  r.holds = r.rel_deviation <= tol;
  return r;
}

ExpansionBracket expansion_bracket(int n, int omega, const ExpansionStats& s) {
  if (n < 2 * omega + 6)
    throw Error(ErrorCode::hypothesis_violated, "expansion needs n >= 2 omega + 6");
  const double nn = n, X = omega + 2.0;
  ExpansionBracket b;
  b.n = n;
  b.omega = omega;
  b.stats = s;
  b.log_branch = n == 2 * omega + 6;
  b.i_s = 4.0 * (nn - 1) * (nn - 2) * s.f_h1 -
          (4.0 * nn * (nn - 2) * (nn - 2) - 4.0 * X * X * (nn * nn + nn + 2)) * s.f_l2 -
          2.0 * (nn - 2) * (nn - 2) * s.f_rbar;
  b.value = (nn - 2) * (nn - 2) * s.curvature_mean + b.i_s;
  return b;
}

double expansion_prefactor(int n, int omega, double epsilon) {
  if (n < 2 * omega + 6)
    throw Error(ErrorCode::hypothesis_violated, "expansion needs n >= 2 omega + 6");
  const double nn = n;
  const double N = 2.0 * nn / (nn - 2.0);
  const double base = std::pow(sphere_volume(n - 1), 2.0 / nn) * std::pow(epsilon, 2.0 * omega + 4) /
                      (4.0 * (nn - 1) * (nn - 2) * std::pow(I_closed(nn, nn - 1), 2.0 / N));
  // On the log branch I_{n-2}^{n+2w+1} diverges; its log(1/eps) growth is what
  // survives.
  if (n == 2 * omega + 6) return base * std::log(1.0 / epsilon);
  return base * I_closed(nn - 2, nn + 2.0 * omega + 1);
}

}  // namespace hvcert::integrals
