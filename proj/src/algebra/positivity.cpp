#include "hvcert/algebra/positivity.hpp"

#include "hvcert/error.hpp"

namespace hvcert::algebra {

namespace {

Polynomial scaled_down(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * p.content_primitive().first.abs().inverse();
}

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
  std::vector<Polynomial> chain{scaled_down(p)};
  if (p.degree() < 1) return chain;
  chain.push_back(scaled_down(p.derivative()));
  while (chain.back().degree() > 0) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(scaled_down(-r));
  }
  return chain;
}

int roots_above(const std::vector<Polynomial>& chain, const Rational& a) {
  std::vector<int> at_a, at_inf;
  for (const auto& q : chain) {
    at_a.push_back(q(a).sign());
    at_inf.push_back(q.leading().sign());
  }
  return variations(at_a) - variations(at_inf);
}

PositivityWitness nonnegative_on_ray(const Polynomial& p, const Rational& n0) {
  if (p.is_zero()) throw Error(ErrorCode::degenerate_parameters, "positivity of the zero polynomial");
  PositivityWitness w;
  w.sample_value = p(n0);

  const Polynomial q = p.shifted(n0);
  bool all_nonnegative = true;
  for (const auto& c : q.coefficients()) all_nonnegative = all_nonnegative && c.sign() >= 0;
  if (all_nonnegative && q.coeff(0).sign() > 0) {
    w.holds = true;
    w.method = PositivityMethod::shifted_coefficients;
    return w;
  }

  w.method = PositivityMethod::sturm;
  if (w.sample_value.sign() <= 0) {
    w.holds = false;
    w.roots_on_ray = w.sample_value.is_zero() ? 0 : roots_above(sturm_chain(p), n0);
    return w;
  }
  w.roots_on_ray = roots_above(sturm_chain(p), n0);
  w.holds = w.roots_on_ray == 0;
  return w;
}

}  // namespace hvcert::algebra
