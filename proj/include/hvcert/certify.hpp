#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hvcert/algebra.hpp"
#include "hvcert/spectral.hpp"

namespace hvcert::certify {

using algebra::PartialFractionExpansion;
using algebra::Polynomial;
using algebra::PositivityWitness;
using algebra::Rational;
using algebra::SqrtEnclosure;
using algebra::SurdExpression;

/// Degree of the leading part of the scalar curvature, supplied by the caller.
enum class MuBranch { deg_rbar_equals_omega, deg_rbar_at_least_omega_plus_one };

std::string to_string(MuBranch b);
/// Accepts "omega" / "deg_Rbar_equals_omega" and "omega+1" /
/// "deg_Rbar_at_least_omega_plus_one".
MuBranch parse_mu_branch(const std::string& text);

/// certified: nonempty and the trinomial was checked negative at chosen_c.
/// empty: the intersection is empty. undecided: a comparison hit the
/// refinement cap. prior_work: omega < 2, no eigencomponents to handle.
/// error: the cell raised (message carries the reason).
enum class CellStatus { certified, empty, undecided, prior_work, error };

std::string to_string(CellStatus s);
CellStatus parse_cell_status(const std::string& text);

/// Roots of the k-th trinomial at a fixed dimension.
struct RootPair {
  int k = 0;
  Rational delta;  // Delta_k(n) > 0
  Rational d;      // d_k(n)
  SurdExpression x;
  SurdExpression y;
};

/// Throws hypothesis_violated if n < 2 omega + 6 or omega < 2, and
/// internal_consistency if some Delta_k(n) <= 0.
std::vector<RootPair> roots_at(int omega, long n);

struct IntervalCertificate {
  int omega = 0;
  long n = 0;
  std::vector<RootPair> pairs;
  bool nonempty = false;
  std::optional<SurdExpression> chosen_c;
  MuBranch mu_branch = MuBranch::deg_rbar_equals_omega;
  CellStatus status = CellStatus::error;
  std::string message;
};

/// Value of d/(2(n-2)) c^2 - (n-2) c + (n-2) u/(2 nu^2) for one component.
SurdExpression trinomial_at(int omega, int k, long n, const SurdExpression& c);

/// Decides the intersection of the intervals ]x_k, y_k[ exactly. Exceptions
/// from roots_at propagate.
IntervalCertificate certify_at(int omega, long n, MuBranch branch = MuBranch::deg_rbar_equals_omega);

/// sqrt(Delta_k) > sqrt(a)(n + beta) with beta = b/(2a), from the quadratic
/// part a n^2 + b n + ... of the partial-fraction expansion of Delta_k.
struct LowerBoundConstruction {
  int k = 0;
  PartialFractionExpansion expansion;
  Rational a;
  Rational b;
  Rational beta;
  SqrtEnclosure sqrt_a;
  /// Delta_k - a (n+beta)^2 > 0, numerator times denominator.
  PositivityWitness gap;
  /// n + beta > 0.
  PositivityWitness shift;
};

struct PairCheck {
  int i = 0;
  int j = 0;
  /// (n-2)(d_j-d_i) + d_i l_j (n+beta_j) + d_j l_i (n+beta_i) with l the
  /// rational lower enclosure of sqrt(a).
  Polynomial pair_polynomial;
  PositivityWitness witness;
};

struct SymbolicCertificate {
  int omega = 0;
  long valid_from = 0;
  bool success = false;
  std::vector<LowerBoundConstruction> bounds;
  std::vector<PositivityWitness> d_positive;
  /// d_i - d_j > 0 for consecutive i, j = i + 1.
  std::vector<PositivityWitness> d_decreasing;
  std::vector<PairCheck> pair_checks;
  /// First failing pair when success is false and a pair is to blame.
  std::optional<std::pair<int, int>> failing_pair;
  std::string failure_reason;
};

/// Width used for the rational lower bound of sqrt(a_k).
const Rational& sqrt_a_width();

/// All-dimension certificate for n >= 2 omega + 6. Failure is reported in the
/// value, not thrown. Throws out_of_range for omega < 3.
SymbolicCertificate symbolic_certificate(int omega);

struct ScanEntry {
  IntervalCertificate cert;
};

struct OmegaSummary {
  int omega = 0;
  long cells = 0;
  long certified = 0;
  long empty = 0;
  long undecided = 0;
  long errors = 0;
  std::optional<long> first_empty;
  /// "all nonempty", "empty cells found", "undecided cells", "errors",
  /// "no cells" or "prior work".
  std::string verdict;
};

struct ScanReport {
  std::vector<ScanEntry> entries;  // omega major, n minor
  std::vector<OmegaSummary> summary;
  std::vector<std::pair<int, long>> failures;  // cells that are not certified
};

struct ScanGrid {
  int omega_lo = 3;
  int omega_hi = 15;
  long n_lo = 0;
  long n_hi = 400;
  MuBranch branch = MuBranch::deg_rbar_equals_omega;
};

/// Cells (omega, n) of the grid with n >= 2 omega + 6, in report order.
std::vector<std::pair<int, long>> scan_cells(const ScanGrid& grid);

/// Reference single-threaded scan.
ScanReport scan_serial(const ScanGrid& grid);
/// OpenMP scan; threads <= 0 uses the runtime default. Same output as
/// scan_serial.
ScanReport scan_parallel(const ScanGrid& grid, int threads = 0);

/// floor((n-6)/2) <= 15 for every 3 <= n <= n_max.
bool dimension_cover_check(long n_max);

}  // namespace hvcert::certify
