#pragma once

#include <functional>
#include <vector>

namespace hvcert::quadrature {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 4000;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]. The interval with the largest
/// error estimate is bisected until the total error is below
/// max(abs_tol, rel_tol*|value|). Breakpoints inside (a, b) seed the initial
/// partition, which is how callers flag a narrow peak.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {}, const std::vector<double>& breakpoints = {});

/// Geometric breakpoints scale*2^j, j = -4.., strictly inside (a, b).
std::vector<double> geometric_breakpoints(double a, double b, double scale);

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace hvcert::quadrature
