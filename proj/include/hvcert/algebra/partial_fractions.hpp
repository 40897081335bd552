#pragma once

#include <vector>

#include "hvcert/algebra/rational_function.hpp"

namespace hvcert::algebra {

/// One simple-pole term residue/(n - root). `factor` is the linear factor as
/// the caller supplied it, so residue/factor.leading() is the numerator over
/// that factor.
struct SimplePole {
  Rational root;
  Rational residue;
  Polynomial factor;
};

struct PartialFractionExpansion {
  Polynomial polynomial_part;
  std::vector<SimplePole> simple_poles;

  /// Sum of all terms over a common denominator.
  RationalFunction recombine() const;
};

/// Splits f into a polynomial part of degree at most 2 plus one simple-pole
/// term per supplied linear factor. Factors whose root is not a pole of f get
/// residue zero. Throws invalid_factorization for repeated or non-linear
/// factors, a denominator not dividing their product, or a polynomial part of
/// degree above 2.
PartialFractionExpansion partial_fractions(const RationalFunction& f,
                                           const std::vector<Polynomial>& factors);

}  // namespace hvcert::algebra
