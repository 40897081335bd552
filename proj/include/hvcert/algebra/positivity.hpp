#pragma once

#include <vector>

#include "hvcert/algebra/polynomial.hpp"

namespace hvcert::algebra {

enum class PositivityMethod { shifted_coefficients, sturm };

/// Outcome of nonnegative_on_ray. `holds` means p(n) > 0 for every real
/// n >= n0 (strict, despite the name).
struct PositivityWitness {
  bool holds = false;
  PositivityMethod method = PositivityMethod::sturm;
  /// Distinct real roots of p in (n0, inf), from the Sturm chain. Zero when
  /// the shifted-coefficient pretest settled it.
  int roots_on_ray = 0;
  /// p(n0).
  Rational sample_value;
};

/// Sturm chain p, p', -rem(...), ... with each member scaled by a positive
/// constant to keep coefficients small.
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Number of distinct real roots of p in (a, inf). p(a) must be nonzero.
int roots_above(const std::vector<Polynomial>& chain, const Rational& a);

/// Throws degenerate_parameters on the zero polynomial.
PositivityWitness nonnegative_on_ray(const Polynomial& p, const Rational& n0);

}  // namespace hvcert::algebra
