#include "hvcert/algebra/partial_fractions.hpp"

#include "hvcert/error.hpp"

namespace hvcert::algebra {

RationalFunction PartialFractionExpansion::recombine() const {
  RationalFunction sum(polynomial_part);
  for (const auto& p : simple_poles) {
    if (p.residue.is_zero()) continue;
    sum += RationalFunction(Polynomial(p.residue), Polynomial{-p.root, Rational(1)});
  }
  return sum;
}

PartialFractionExpansion partial_fractions(const RationalFunction& f,
                                           const std::vector<Polynomial>& factors) {
  PartialFractionExpansion out;
  Polynomial product(1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() != 1)
      throw Error(ErrorCode::invalid_factorization, "factor " + factors[i].str() + " is not linear");
    const Rational root = -factors[i].coeff(0) / factors[i].coeff(1);
    for (const auto& seen : out.simple_poles)
      if (seen.root == root)
        throw Error(ErrorCode::invalid_factorization, "repeated factor " + factors[i].str());
    out.simple_poles.push_back({root, Rational(0), factors[i]});
    product *= Polynomial{-root, Rational(1)};
  }
  if (!divmod(product, f.den()).second.is_zero())
    throw Error(ErrorCode::invalid_factorization,
                "denominator " + f.den().str() + " does not divide the product of the factors");

  auto [quotient, remainder] = divmod(f.num(), f.den());
  if (quotient.degree() > 2)
    throw Error(ErrorCode::invalid_factorization, "polynomial part has degree above 2");
  out.polynomial_part = quotient;

  const Polynomial dprime = f.den().derivative();
  for (auto& pole : out.simple_poles) {
    if (!f.den()(pole.root).is_zero()) continue;
    pole.residue = remainder(pole.root) / dprime(pole.root);
  }
  return out;
}

}  // namespace hvcert::algebra
