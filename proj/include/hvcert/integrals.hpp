#pragma once

#include "hvcert/quadrature.hpp"

namespace hvcert::integrals {

/// I_a^b = int_0^inf t^b/(1+t^2)^a dt = B((b+1)/2, a-(b+1)/2)/2.
/// Throws divergent_integral unless 2a - b > 1 and b > -1.
double I_closed(double a, double b);

/// The same integral by adaptive quadrature, split at t = 1 and folded onto
/// [0, 1] with t = 1/s on the tail.
quadrature::Result I_quadrature(double a, double b, const quadrature::Options& opts = {});

/// Gamma at x = twice_x/2 by the factorial and double-factorial forms.
/// Requires twice_x >= 1.
long double gamma_half_integer(int twice_x);

struct RecurrenceReport {
  double value = 0.0;          // I_a^b
  double via_same_a = 0.0;     // (b-1)/(2a-b-1) I_a^{b-2}
  double via_both = 0.0;       // (b-1)/(2a-2) I_{a-1}^{b-2}
  double via_lower_a = 0.0;    // (2a-b-3)/(2a-2) I_{a-1}^b
  double max_rel_deviation = 0.0;
  bool holds = false;          // max_rel_deviation <= tol
};

/// Needs b >= 2 (out_of_range otherwise) and every member convergent, which
/// comes down to 2a - b > 3 (divergent_integral otherwise).
RecurrenceReport recurrence_check(double a, double b, double tol = 1e-12);

/// I_a^b(eps) = int_0^{delta/eps} t^b/(1+t^2)^a dt by quadrature. Requires
/// 0 < eps <= delta.
double truncation_order(double a, double b, double delta, double epsilon);
/// eps^{2a-b-1}/((2a-b-1) delta^{2a-b-1}), the tail bound when 2a - b > 1.
double truncation_bound(double a, double b, double delta, double epsilon);

/// Volume of the unit sphere S^n in R^{n+1}.
double sphere_volume(int n);

/// Sharp Sobolev constant K(n, p) for 1 < p < n, and the p = 1 limit form.
/// Throws out_of_range otherwise.
double best_constant(int n, double p);
/// K(n,2)^{-2} = n(n-2) omega_n^{2/n}/4.
double k2_inverse_square(int n);
/// Hardy constant K(n, q, -q) = q/(n-q), 1 <= q < n.
double hardy_constant(int n, double q);

struct IdentityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double rel_deviation = 0.0;
  bool holds = false;
};

/// (n-2)^2 w_{n-1} I_n^{n+1} (w_{n-1} I_n^{n-1})^{-(n-2)/n} against
/// k2_inverse_square(n). With use_quadrature the integrals come from
/// I_quadrature instead of the Beta form.
IdentityReport inte_identity_check(int n, double tol = 1e-10, bool use_quadrature = false);

/// The short form 4(n-2) I_n^{n+1}/(I_n^{n-2})^{(n-2)/n} = n. It is not a
/// consistent identity; the report shows by how much it misses.
IdentityReport rela_shorthand_check(int n, double tol = 1e-10);

/// Bubble with cutoff: u(r) = (eps/(r^2+eps^2))^{(n-2)/2} - (eps/(delta^2+eps^2))^{(n-2)/2}.
struct RadialProfile {
  int n = 3;
  double epsilon = 1e-3;
  double delta = 1.0;
};

struct RadialYamabeResult {
  double value = 0.0;        // w G/(w U)^{(n-2)/n}
  double gradient = 0.0;     // G = int |u'|^2 r^{n-1} dr
  double norm = 0.0;         // U = int u^N r^{n-1} dr
  double abs_error = 0.0;    // combined quadrature error estimate of G and U
};

/// Flat-space Yamabe quotient of the cut-off bubble. Throws
/// degenerate_parameters for n < 3 or eps outside (0, delta], and
/// quadrature_not_converged with the achieved error.
RadialYamabeResult radial_yamabe(const RadialProfile& profile);

struct NormF2Report {
  double lhs = 0.0;               // the four-integral combination
  double rhs = 0.0;               // +P_2(w+2)/(4(n-1)(n-2)) I_{n-2}^{n+2w+1}
  double rhs_negated = 0.0;       // -P_2(w+2)/(4(n-1)(n-2)) I_{n-2}^{n+2w+1}
  double rel_deviation = 0.0;
  double rel_deviation_negated = 0.0;
  bool holds = false;
};

/// Coefficient of the f^2 term in the expansion. Needs n > 2 omega + 6.
NormF2Report norm_f2_check(int n, int omega, double tol = 1e-10);

/// Mean-integral statistics on S^{n-1} feeding the expansion.
struct ExpansionStats {
  double curvature_mean = 0.0;  // mean over S(r) of r^{-2w-2} R_g
  double f_l2 = 0.0;            // mean f^2
  double f_h1 = 0.0;            // mean |grad f|^2
  double f_rbar = 0.0;          // mean f r^{-w} Rbar
};

struct ExpansionBracket {
  int n = 0;
  int omega = 0;
  ExpansionStats stats;
  double i_s = 0.0;     // I_S(f)
  double value = 0.0;   // (n-2)^2 curvature_mean + I_S(f)
  bool log_branch = false;  // n == 2 omega + 6
};

/// Throws hypothesis_violated for n < 2 omega + 6.
ExpansionBracket expansion_bracket(int n, int omega, const ExpansionStats& stats);

/// Coefficient multiplying the bracket: w_{n-1}^{2/n} I_{n-2}^{n+2w+1} eps^{2w+4}
/// / (4(n-1)(n-2)(I_n^{n-1})^{2/N}), times log(1/eps) on the log branch.
double expansion_prefactor(int n, int omega, double epsilon);

}  // namespace hvcert::integrals
