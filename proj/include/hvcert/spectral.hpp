#pragma once

#include <vector>

#include "hvcert/algebra.hpp"

namespace hvcert::spectral {

using algebra::BivariatePolynomial;
using algebra::PartialFractionExpansion;
using algebra::Polynomial;
using algebra::PositivityWitness;
using algebra::Rational;
using algebra::RationalFunction;

/// Coefficients attached to the k-th eigencomponent for a given omega, all as
/// functions of the dimension n.
struct SpectralRow {
  int omega = 0;
  int k = 0;
  Polynomial nu;                // (omega-2k+2)(n+omega-2k)
  Polynomial d;                 // 4[(n-1)(n-2)nu - n(n-2)^2 + (omega+2)^2(n^2+n+2)]
  RationalFunction c;           // (n-2)^2/d
  RationalFunction u_over_nu;   // u_k/nu_k
  RationalFunction delta;       // (n-2)^2 - d u_k/nu_k^2

  RationalFunction u() const { return u_over_nu * RationalFunction(nu); }
  /// The linear factors n-2, (nu-n+1) and nu/(omega-2k+2) carrying the poles
  /// of delta, in that order.
  std::vector<Polynomial> delta_factors() const;
  PartialFractionExpansion delta_expansion() const;
};

/// Throws out_of_range unless 1 <= k <= floor(omega/2).
SpectralRow spectral_row(int omega, int k);
/// Rows k = 1..floor(omega/2); empty for omega < 2.
std::vector<SpectralRow> spectral_family(int omega);

/// First admissible dimension, 2*omega + 6.
inline long first_dimension(int omega) { return 2L * omega + 6; }

/// P(x) in the eigenvalue variable x with coefficients in n, and P'(x).
struct LemmaPolynomial {
  int omega = 0;
  BivariatePolynomial P;
  BivariatePolynomial Pprime;
};

LemmaPolynomial lemma_polynomial(int omega);
/// -2(n-2)x - 2n(n-2)^3 + 2(n^2-3n-2)(omega+2)^2, written out directly.
BivariatePolynomial lemma_derivative_reference(int omega);

struct LemmaPolyWitness {
  bool holds = false;
  bool derivative_matches = false;
  /// U_k = (nu_k-n+1) d_k {(n-2) u_k/nu_k - (n-2)^3 nu_k/d_k} equals P(nu_k)
  /// exactly for every k.
  bool identity_holds = false;
  /// Positivity of -P'(0) and of -P(nu_q) on n >= 2 omega + 6.
  PositivityWitness minus_pprime_at_zero;
  PositivityWitness minus_p_at_nu_q;
  /// n-2, nu_k-n+1, nu_k and d_k all positive on the ray, every k.
  bool transfer_factors_positive = false;
};

/// Negativity of u_k - (n-2)^2 nu_k^2/d_k for all k and all n >= 2 omega + 6,
/// via monotonicity of P. Requires omega >= 2.
LemmaPolyWitness check_lemma_poly(int omega);

/// The four-term quartic combination P_2 in X = omega + 2 (outer variable).
BivariatePolynomial p2_polynomial();
/// 4 X^2 (n^2+n+2) - 4 n (n-2)^2.
BivariatePolynomial p2_reduced();
/// Exact symbolic equality of the two.
bool p2_identity_check();

}  // namespace hvcert::spectral
