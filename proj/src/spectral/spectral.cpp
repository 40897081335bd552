#include "hvcert/spectral.hpp"

#include <string>

#include "hvcert/error.hpp"

namespace hvcert::spectral {

namespace {

const Polynomial kN = Polynomial::n();

Polynomial lin(long a, long b) { return Polynomial::linear(Rational(a), Rational(b)); }

}  // namespace

std::vector<Polynomial> SpectralRow::delta_factors() const {
  return {lin(1, -2), nu - kN + Polynomial(1), lin(1, omega - 2 * k)};
}

PartialFractionExpansion SpectralRow::delta_expansion() const {
  return algebra::partial_fractions(delta, delta_factors());
}

SpectralRow spectral_row(int omega, int k) {
  if (omega < 2 || k < 1 || k > omega / 2)
    throw Error(ErrorCode::out_of_range,
                "k=" + std::to_string(k) + " outside [1, floor(omega/2)] for omega=" +
                    std::to_string(omega));
  SpectralRow r;
  r.omega = omega;
  r.k = k;
  const Polynomial nm2 = lin(1, -2);
  const Polynomial nm1 = lin(1, -1);
  const Rational w2 = Rational(omega + 2).pow(2);
  r.nu = Polynomial(Rational(omega - 2 * k + 2)) * lin(1, omega - 2 * k);
  r.d = Rational(4) * (nm1 * nm2 * r.nu - kN * nm2 * nm2 + w2 * Polynomial{2, 1, 1});
  r.c = RationalFunction(nm2 * nm2, r.d);
  const RationalFunction first(lin(1, -3), Rational(4) * nm2);
  const Polynomial pole = r.nu - nm1;
  const RationalFunction second(nm1 * nm1 + w2 * nm1, Rational(4) * nm2 * pole);
  r.u_over_nu = first - second;
  r.delta = RationalFunction(nm2 * nm2) - RationalFunction(r.d) * r.u_over_nu / RationalFunction(r.nu);
  return r;
}

std::vector<SpectralRow> spectral_family(int omega) {
  std::vector<SpectralRow> rows;
  for (int k = 1; k <= omega / 2; ++k) rows.push_back(spectral_row(omega, k));
  return rows;
}

LemmaPolynomial lemma_polynomial(int omega) {
  const BivariatePolynomial x = BivariatePolynomial::x();
  const Polynomial nm1 = lin(1, -1), nm2 = lin(1, -2), nm3 = lin(1, -3);
  const Rational w2 = Rational(omega + 2).pow(2);
  const BivariatePolynomial A =
      BivariatePolynomial(nm1 * nm2) * x +
      BivariatePolynomial(w2 * Polynomial{2, 1, 1} - kN * nm2 * nm2);
  const BivariatePolynomial B =
      BivariatePolynomial(nm3) * (x - BivariatePolynomial(nm1)) -
      BivariatePolynomial(nm1 * nm1 + w2 * nm1);
  const BivariatePolynomial tail =
      BivariatePolynomial(nm2.pow(3)) * (x * x - BivariatePolynomial(nm1) * x);
  LemmaPolynomial lp;
  lp.omega = omega;
  lp.P = A * B - tail;
  lp.Pprime = lp.P.derivative();
  return lp;
}

BivariatePolynomial lemma_derivative_reference(int omega) {
  const Polynomial nm2 = lin(1, -2);
  const Rational w2 = Rational(omega + 2).pow(2);
  const Polynomial constant =
      Rational(-2) * kN * nm2.pow(3) + Rational(2) * w2 * Polynomial{-2, -3, 1};
  return BivariatePolynomial(std::vector<Polynomial>{constant, Rational(-2) * nm2});
}

LemmaPolyWitness check_lemma_poly(int omega) {
  if (omega < 2) throw Error(ErrorCode::out_of_range, "lemma needs omega >= 2");
  LemmaPolyWitness w;
  const Rational n0(first_dimension(omega));
  const LemmaPolynomial lp = lemma_polynomial(omega);
  w.derivative_matches = lp.Pprime == lemma_derivative_reference(omega);

  const Polynomial nm2 = lin(1, -2);
  const auto rows = spectral_family(omega);
  w.identity_holds = true;
  w.transfer_factors_positive = nonnegative_on_ray(nm2, n0).holds;
  for (const auto& r : rows) {
    const Polynomial pole = r.nu - lin(1, -1);
    const RationalFunction U =
        RationalFunction(pole * r.d) *
        (RationalFunction(nm2) * r.u_over_nu -
         RationalFunction(nm2.pow(3) * r.nu, r.d));
    w.identity_holds = w.identity_holds && U == RationalFunction(lp.P.substitute(r.nu));
    w.transfer_factors_positive = w.transfer_factors_positive &&
                                  nonnegative_on_ray(pole, n0).holds &&
                                  nonnegative_on_ray(r.nu, n0).holds &&
                                  nonnegative_on_ray(r.d, n0).holds;
  }
  w.minus_pprime_at_zero = nonnegative_on_ray(-lp.Pprime.coeff(0), n0);
  w.minus_p_at_nu_q = nonnegative_on_ray(-lp.P.substitute(rows.back().nu), n0);
  w.holds = w.derivative_matches && w.identity_holds && w.transfer_factors_positive &&
            w.minus_pprime_at_zero.holds && w.minus_p_at_nu_q.holds;
  return w;
}

BivariatePolynomial p2_polynomial() {
  using BP = BivariatePolynomial;
  const BP X = BP::x();
  auto lin_x = [&](long cx, const Polynomial& rest) { return BP(Polynomial(Rational(cx))) * X + BP(rest); };
  const BP a = lin_x(1, lin(-1, 2));    // X - n + 2
  const BP b = lin_x(2, kN);            // 2X + n
  const BP c = lin_x(2, lin(1, -2));    // 2X + n - 2
  const BP e = lin_x(-2, lin(1, -2));   // n - 2X - 2
  const BP f = lin_x(-2, kN);           // n - 2X
  return a * a * b * c + BP(Polynomial(2)) * X * a * c * e + X * X * f * e -
         BP(kN * lin(1, 2)) * c * e;
}

BivariatePolynomial p2_reduced() {
  return BivariatePolynomial(std::vector<Polynomial>{
      Rational(-4) * kN * lin(1, -2).pow(2), Polynomial(), Rational(4) * Polynomial{2, 1, 1}});
}

bool p2_identity_check() { return p2_polynomial() == p2_reduced(); }

}  // namespace hvcert::spectral
