#include <doctest.h>

#include <cmath>

#include "hvcert/error.hpp"
#include "hvcert/integrals.hpp"
#include "hvcert/quadrature.hpp"
#include "hvcert/sphere.hpp"

using namespace hvcert;
using namespace hvcert::integrals;

namespace {

const double kPi = 3.14159265358979323846;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("Gauss-Legendre rules") {
  std::vector<double> x, w;
  for (int m : {1, 2, 5, 16, 40}) {
    quadrature::gauss_legendre(m, x, w);
    double sum = 0.0;
    for (double v : w) sum += v;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    // Exact through degree 2m - 1.
    double mono = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) mono += w[i] * std::pow(x[i], 2 * m - 2);
    CHECK(mono == doctest::Approx(2.0 / (2 * m - 1)).epsilon(1e-13));
  }
}

TEST_CASE("adaptive quadrature") {
  const auto s = quadrature::integrate([](double t) { return std::sin(t); }, 0.0, kPi);
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-14));
  const double eps = 1e-6;
  const auto peak = quadrature::integrate([&](double t) { return eps / (t * t + eps * eps); }, 0.0, 1.0, {},
                                          quadrature::geometric_breakpoints(0.0, 1.0, eps));
  CHECK(peak.converged);
  CHECK(rel(peak.value, std::atan(1.0 / eps)) < 1e-12);
  const auto starved = quadrature::integrate([](double t) { return std::sqrt(t); }, 0.0, 1.0, {1e-16, 1e-16, 2});
  CHECK_FALSE(starved.converged);
}

TEST_CASE("bubble integrals, closed form") {
  CHECK(I_closed(1, 0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(I_closed(3, 1) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(I_closed(4, 3) == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK_THROWS_AS(I_closed(1, 1), Error);
  CHECK_THROWS_AS(I_closed(3, -1), Error);
  // Large arguments go through lgamma.
  CHECK(std::isfinite(I_closed(200, 150)));
  CHECK(I_closed(200, 150) > 0.0);
}

TEST_CASE("Gamma at half integers") {
  for (int t = 1; t <= 40; ++t)
    CHECK(rel(static_cast<double>(gamma_half_integer(t)), std::tgamma(t / 2.0)) < 1e-14);
  CHECK_THROWS(gamma_half_integer(0));
}

TEST_CASE("closed form against quadrature on the (a, b) grid") {
  double worst = 0.0;
  for (int a = 2; a <= 12; ++a)
    for (int b = 0; b <= 2 * a - 2; ++b) {
      const auto q = I_quadrature(a, b);
      CHECK(q.converged);
      worst = std::max(worst, rel(q.value, I_closed(a, b)));
    }
  CHECK(worst <= 1e-10);
}

TEST_CASE("recurrences") {
  const auto r43 = recurrence_check(4, 3);
  CHECK(r43.value == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(I_closed(4, 1) * 2 / 4 == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(I_closed(3, 1) * 2 / 6 == doctest::Approx(1.0 / 12).epsilon(1e-15));
  CHECK(r43.holds);
  for (int n = 5; n <= 10; ++n) CHECK(recurrence_check(n, n + 1).holds);
  for (double a = 2.5; a <= 12; a += 0.5)
    for (double b = 2; 2 * a - b > 3; ++b) CHECK(recurrence_check(a, b).max_rel_deviation <= 1e-12);
  try {
    recurrence_check(2, 0);
    FAIL("b < 2 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::out_of_range);
  }
  try {
    recurrence_check(3, 3);
    FAIL("divergent member accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::divergent_integral);
  }
}

TEST_CASE("truncated integrals") {
  CHECK(truncation_order(1, 0, 1, 0.01) == doctest::Approx(std::atan(100.0)).epsilon(1e-12));
  CHECK(std::fabs(truncation_order(1, 0, 1, 0.01) - I_closed(1, 0)) <= 0.01);
  CHECK(truncation_bound(1, 0, 1, 0.01) >= std::fabs(truncation_order(1, 0, 1, 0.01) - I_closed(1, 0)));
  CHECK(truncation_order(3, 1, 1, 1) == doctest::Approx(0.1875).epsilon(1e-12));  // int_0^1 t/(1+t^2)^3
  // Log growth on the critical line b = 2a - 1.
  double prev = 0.0;
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const double ratio = truncation_order(5, 9, 1, eps) / std::log(1 / eps);
    CHECK(ratio > prev);
    prev = ratio;
  }
  CHECK(std::fabs(prev - 1.0) < 0.1);
}

TEST_CASE("sphere volumes and constants") {
  CHECK(sphere_volume(1) == doctest::Approx(2 * kPi));
  CHECK(sphere_volume(2) == doctest::Approx(4 * kPi));
  CHECK(sphere_volume(3) == doctest::Approx(2 * kPi * kPi));
  CHECK(k2_inverse_square(4) == doctest::Approx(2 * std::sqrt(8 * kPi * kPi / 3)).epsilon(1e-15));
  CHECK(k2_inverse_square(4) == doctest::Approx(10.2603986413).epsilon(1e-10));
  for (int n = 3; n <= 10; ++n) {
    CHECK(best_constant(n, 1) == doctest::Approx(std::pow(n / sphere_volume(n - 1), 1.0 / n) / n));
    CHECK(std::pow(best_constant(n, 2), -2) == doctest::Approx(k2_inverse_square(n)).epsilon(1e-13));
    CHECK(hardy_constant(n, 2) == doctest::Approx(2.0 / (n - 2)));
  }
  CHECK_THROWS_AS(best_constant(3, 3), Error);
}

TEST_CASE("bubble identity") {
  for (int n = 3; n <= 12; ++n) CHECK(inte_identity_check(n).holds);
  const auto q = inte_identity_check(6, 1e-10, true);
  const auto c = inte_identity_check(6, 1e-10, false);
  CHECK(q.holds);
  CHECK(rel(q.lhs, c.lhs) < 1e-10);
  CHECK(inte_identity_check(4).lhs == doctest::Approx(10.2603986413).epsilon(1e-10));
  for (int n = 3; n <= 12; ++n) CHECK_FALSE(rela_shorthand_check(n).holds);
}

TEST_CASE("radial Yamabe quotient approaches the sharp constant") {
  for (int n = 4; n <= 8; ++n) {
    const double k2 = k2_inverse_square(n);
    CHECK(rel(radial_yamabe({n, 1e-3, 1.0}).value, k2) < 0.02);
    double prev = INFINITY;
    for (double eps : {3e-1, 1e-1, 3e-2, 1e-2, 3e-3, 1e-3}) {
      const double gap = radial_yamabe({n, eps, 1.0}).value - k2;
      CHECK(gap > 0.0);
      CHECK(gap < prev);
      prev = gap;
    }
    CHECK(radial_yamabe({n, 1.0, 1.0}).value > k2);
  }
  CHECK(std::fabs(radial_yamabe({6, 1e-3, 1.0}).value - k2_inverse_square(6)) <
        std::fabs(radial_yamabe({6, 1e-2, 1.0}).value - k2_inverse_square(6)));
  CHECK_THROWS_AS(radial_yamabe({2, 1e-3, 1.0}), Error);
  CHECK_THROWS_AS(radial_yamabe({4, 2.0, 1.0}), Error);
}

TEST_CASE("f^2 coefficient of the norm") {
  for (auto [n, w] : {std::pair{16, 3}, std::pair{20, 5}, std::pair{30, 9}}) {
    const auto r = norm_f2_check(n, w);
    CHECK(r.holds);
    CHECK(r.rel_deviation <= 1e-10);
    CHECK(r.rel_deviation_negated > 1.0);
  }
  CHECK_THROWS_AS(norm_f2_check(12, 3), Error);
}

TEST_CASE("expansion bracket") {
  const auto zero = expansion_bracket(14, 4, {});
  CHECK(zero.value == 0.0);
  CHECK(zero.i_s == 0.0);
  CHECK_THROWS_AS(expansion_bracket(13, 4, {}), Error);
  CHECK(expansion_bracket(14, 4, {}).log_branch);

  // f = c_k nu_k phi_k with mean phi^2 = 1: the minimum of the quadratic form.
  const int n = 14, w = 4;
  const double nu = 4.0 * (n + 2);  // k = 1
  const double d = 4.0 * ((n - 1) * (n - 2) * nu - n * (n - 2.0) * (n - 2) + 36.0 * (n * n + n + 2));
  const double c = (n - 2.0) * (n - 2) / d;
  ExpansionStats st;
  st.f_l2 = c * c * nu * nu;
  st.f_h1 = c * c * nu * nu * nu;
  st.f_rbar = c * nu * nu;
  CHECK(rel(expansion_bracket(n, w, st).i_s, -std::pow(n - 2.0, 4) * nu * nu / d) < 1e-13);

  CHECK(expansion_prefactor(16, 3, 1e-2) > 0.0);
  CHECK(expansion_prefactor(14, 4, 1e-2) > 0.0);
}

TEST_CASE("expansion statistics from sphere quadrature") {
  // Mixed harmonics on S^2, with n = 14 and omega = 4 as parameters.
  using namespace hvcert::sphere;
  const auto grid = SphereGrid::for_degree(12);
  const SphereFunction f(0.3 * harmonic_polynomial({2, 1}) + harmonic_polynomial({3, -1}) +
                         (-0.7) * harmonic_polynomial({4, 2}));
  const auto rbar = ScalarField::sample(grid, [](const Vec3<double>& x) {
    return 6.0 * SphereFunction::harmonic({2, 0}).value(x) + 12.0 * SphereFunction::harmonic({3, -1}).value(x);
  });
  std::vector<double> l2, h1, fr;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& x = grid.node(i).x;
    const double v = f.value(x);
    const auto g = f.gradient(x);
    l2.push_back(v * v);
    h1.push_back(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    fr.push_back(v * rbar.values[i]);
  }
  ExpansionStats st;
  st.f_l2 = grid.mean(l2);
  st.f_h1 = grid.mean(h1);
  st.f_rbar = grid.mean(fr);
  CHECK(rel(expansion_bracket(14, 4, st).i_s, i_s_functional(f, rbar, 14, 4)) < 1e-8);
}
