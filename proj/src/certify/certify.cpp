#include "hvcert/certify.hpp"

#include <omp.h>

#include "hvcert/error.hpp"

namespace hvcert::certify {

namespace {

struct CellValues {
  Rational nu, d, u_over_nu, delta;
};

// Direct rational evaluation at integer n; avoids building rows per cell.
CellValues values_at(int omega, int k, long n) {
  const Rational N(n), nm1(n - 1), nm2(n - 2), w2 = Rational(omega + 2).pow(2);
  CellValues v;
  v.nu = Rational(omega - 2 * k + 2) * Rational(n + omega - 2 * k);
  v.d = Rational(4) * (nm1 * nm2 * v.nu - N * nm2 * nm2 + w2 * (N * N + N + Rational(2)));
  v.u_over_nu = (N - Rational(3)) / (Rational(4) * nm2) -
                (nm1 * nm1 + nm1 * w2) / (Rational(4) * nm2 * (v.nu - N + Rational(1)));
  v.delta = nm2 * nm2 - v.d * v.u_over_nu / v.nu;
  return v;
}

const char* kMuNames[] = {"deg_Rbar_equals_omega", "deg_Rbar_at_least_omega_plus_one"};
const char* kStatusNames[] = {"certified", "empty", "undecided", "prior_work", "error"};

}  // namespace

std::string to_string(MuBranch b) { return kMuNames[static_cast<int>(b)]; }

MuBranch parse_mu_branch(const std::string& text) {
  if (text == "omega" || text == kMuNames[0]) return MuBranch::deg_rbar_equals_omega;
  if (text == "omega+1" || text == kMuNames[1]) return MuBranch::deg_rbar_at_least_omega_plus_one;
  throw Error(ErrorCode::invalid_config, "unknown mu branch '" + text + "'");
}

std::string to_string(CellStatus s) { return kStatusNames[static_cast<int>(s)]; }

CellStatus parse_cell_status(const std::string& text) {
  for (int i = 0; i < 5; ++i)
    if (text == kStatusNames[i]) return static_cast<CellStatus>(i);
  throw Error(ErrorCode::invalid_config, "unknown cell status '" + text + "'");
}

std::vector<RootPair> roots_at(int omega, long n) {
  if (omega < 2) throw Error(ErrorCode::hypothesis_violated, "omega must be at least 2");
  if (n < spectral::first_dimension(omega))
    throw Error(ErrorCode::hypothesis_violated,
                "n=" + std::to_string(n) + " below 2*omega+6=" +
                    std::to_string(spectral::first_dimension(omega)));
  std::vector<RootPair> pairs;
  const Rational nm2(n - 2);
  for (int k = 1; k <= omega / 2; ++k) {
    const CellValues v = values_at(omega, k, n);
    if (v.delta.sign() <= 0)
      throw Error(ErrorCode::internal_consistency,
                  "Delta_" + std::to_string(k) + " not positive at n=" + std::to_string(n));
    RootPair p;
    p.k = k;
    p.delta = v.delta;
    p.d = v.d;
    const SurdExpression centre(nm2 * nm2 / v.d);
    const SurdExpression spread = SurdExpression::sqrt_term(nm2 / v.d, v.delta);
    p.x = centre - spread;
    p.y = centre + spread;
    pairs.push_back(std::move(p));
  }
  return pairs;
}

SurdExpression trinomial_at(int omega, int k, long n, const SurdExpression& c) {
  const CellValues v = values_at(omega, k, n);
  const Rational nm2(n - 2);
  const SurdExpression quad(v.d / (Rational(2) * nm2));
  const SurdExpression lin(-nm2);
  const SurdExpression cst(nm2 * v.u_over_nu / (Rational(2) * v.nu));
  return quad * c * c + lin * c + cst;
}

IntervalCertificate certify_at(int omega, long n, MuBranch branch) {
  IntervalCertificate cert;
  cert.omega = omega;
  cert.n = n;
  cert.mu_branch = branch;
  if (omega < 2) {
    cert.nonempty = true;
    cert.chosen_c = SurdExpression(0);
    cert.status = CellStatus::prior_work;
    cert.message = "no eigencomponents; covered by earlier results";
    return cert;
  }
  cert.pairs = roots_at(omega, n);
  if (branch == MuBranch::deg_rbar_at_least_omega_plus_one) {
    cert.nonempty = true;
    cert.chosen_c = SurdExpression(0);
    cert.status = CellStatus::certified;
    cert.message = "leading curvature part of degree above omega; c = 0";
    return cert;
  }

  const auto& cap = algebra::default_comparison_cap();
  std::size_t imax = 0, imin = 0;
  for (std::size_t i = 1; i < cert.pairs.size(); ++i) {
    const auto cx = algebra::compare(cert.pairs[i].x, cert.pairs[imax].x, cap);
    const auto cy = algebra::compare(cert.pairs[i].y, cert.pairs[imin].y, cap);
    if (cx == algebra::Comparison::undecided || cy == algebra::Comparison::undecided) {
      cert.status = CellStatus::undecided;
      cert.message = "tie between roots within the refinement cap";
      return cert;
    }
    if (cx == algebra::Comparison::greater) imax = i;
    if (cy == algebra::Comparison::less) imin = i;
  }
  const SurdExpression& lo = cert.pairs[imax].x;
  const SurdExpression& hi = cert.pairs[imin].y;
  switch (algebra::compare(lo, hi, cap)) {
    case algebra::Comparison::less:
      break;
    case algebra::Comparison::undecided:
      cert.status = CellStatus::undecided;
      cert.message = "x_" + std::to_string(imax + 1) + " and y_" + std::to_string(imin + 1) +
                     " agree within the refinement cap";
      return cert;
    default:
      cert.nonempty = false;
      cert.status = CellStatus::empty;
      cert.message = "x_" + std::to_string(imax + 1) + " >= y_" + std::to_string(imin + 1);
      return cert;
  }

  cert.nonempty = true;
  const SurdExpression c = (lo + hi) * SurdExpression(Rational(1, 2));
  cert.chosen_c = c;
  for (const auto& p : cert.pairs) {
    const auto s = trinomial_at(omega, p.k, n, c).sign(cap);
    if (s == algebra::Comparison::less) continue;
    cert.status = s == algebra::Comparison::undecided ? CellStatus::undecided : CellStatus::error;
    cert.message = "trinomial " + std::to_string(p.k) + " not negative at the chosen constant";
    return cert;
  }
  cert.status = CellStatus::certified;
  return cert;
}

const Rational& sqrt_a_width() {
  static const Rational w = [] {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, 30);
    return Rational(mpz_class(1), p);
  }();
  return w;
}

SymbolicCertificate symbolic_certificate(int omega) {
  if (omega < 3) throw Error(ErrorCode::out_of_range, "symbolic certificate needs omega >= 3");
  SymbolicCertificate cert;
  cert.omega = omega;
  cert.valid_from = spectral::first_dimension(omega);
  const Rational n0(cert.valid_from);
  const Polynomial N = Polynomial::n();
  const auto rows = spectral::spectral_family(omega);

  auto fail = [&](std::string reason) {
    if (cert.failure_reason.empty()) cert.failure_reason = std::move(reason);
  };

  for (const auto& r : rows) {
    cert.d_positive.push_back(nonnegative_on_ray(r.d, n0));
    if (!cert.d_positive.back().holds) fail("d_" + std::to_string(r.k) + " not positive");
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    cert.d_decreasing.push_back(nonnegative_on_ray(rows[i].d - rows[i + 1].d, n0));
    if (!cert.d_decreasing.back().holds)
      fail("d_" + std::to_string(i + 1) + " - d_" + std::to_string(i + 2) + " not positive");
  }

  for (const auto& r : rows) {
    LowerBoundConstruction lb;
    lb.k = r.k;
    lb.expansion = r.delta_expansion();
    lb.a = lb.expansion.polynomial_part.coeff(2);
    lb.b = lb.expansion.polynomial_part.coeff(1);
    if (lb.a.sign() <= 0) {
      fail("quadratic coefficient of Delta_" + std::to_string(r.k) + " not positive");
      cert.bounds.push_back(std::move(lb));
      continue;
    }
    lb.beta = lb.b / (Rational(2) * lb.a);
    lb.sqrt_a = algebra::sqrt_enclosure(lb.a, sqrt_a_width());
    const Polynomial shifted = N + Polynomial(lb.beta);
    const algebra::RationalFunction gap = r.delta - algebra::RationalFunction(lb.a * shifted * shifted);
    lb.gap = gap.is_zero() ? PositivityWitness{} : nonnegative_on_ray(gap.num() * gap.den(), n0);
    lb.shift = nonnegative_on_ray(shifted, n0);
    if (!lb.gap.holds) fail("lower bound for sqrt(Delta_" + std::to_string(r.k) + ") not strict");
    if (!lb.shift.holds) fail("n + beta_" + std::to_string(r.k) + " not positive");
    cert.bounds.push_back(std::move(lb));
  }
  if (!cert.failure_reason.empty()) return cert;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& bi = cert.bounds[i];
      const auto& bj = cert.bounds[j];
      PairCheck pc;
      pc.i = static_cast<int>(i + 1);
      pc.j = static_cast<int>(j + 1);
      pc.pair_polynomial = Polynomial::linear(Rational(1), Rational(-2)) * (rows[j].d - rows[i].d) +
                           bj.sqrt_a.lower * rows[i].d * (N + Polynomial(bj.beta)) +
                           bi.sqrt_a.lower * rows[j].d * (N + Polynomial(bi.beta));
      pc.witness = nonnegative_on_ray(pc.pair_polynomial, n0);
      const bool ok = pc.witness.holds;
      cert.pair_checks.push_back(std::move(pc));
      if (!ok && !cert.failing_pair) {
        cert.failing_pair = std::make_pair(static_cast<int>(i + 1), static_cast<int>(j + 1));
        fail("pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             ") lower-bound polynomial has a root on the ray");
      }
    }
  }
  cert.success = cert.failure_reason.empty();
  return cert;
}

std::vector<std::pair<int, long>> scan_cells(const ScanGrid& grid) {
  std::vector<std::pair<int, long>> cells;
  for (int w = grid.omega_lo; w <= grid.omega_hi; ++w)
    for (long n = std::max(grid.n_lo, spectral::first_dimension(w)); n <= grid.n_hi; ++n)
      cells.emplace_back(w, n);
  return cells;
}

namespace {

IntervalCertificate guarded_cell(int omega, long n, MuBranch branch) {
  try {
    return certify_at(omega, n, branch);
  } catch (const Error& e) {
    IntervalCertificate cert;
    cert.omega = omega;
    cert.n = n;
    cert.mu_branch = branch;
    cert.status = CellStatus::error;
    cert.message = e.what();
    return cert;
  }
}

ScanReport assemble(const ScanGrid& grid, std::vector<ScanEntry> entries) {
  ScanReport report;
  report.entries = std::move(entries);
  for (int w = grid.omega_lo; w <= grid.omega_hi; ++w) {
    OmegaSummary s;
    s.omega = w;
    report.summary.push_back(s);
  }
  for (const auto& e : report.entries) {
    auto& s = report.summary[static_cast<std::size_t>(e.cert.omega - grid.omega_lo)];
    ++s.cells;
    switch (e.cert.status) {
      case CellStatus::certified:
      case CellStatus::prior_work: ++s.certified; break;
      case CellStatus::empty:
        ++s.empty;
        if (!s.first_empty) s.first_empty = e.cert.n;
        break;
      case CellStatus::undecided: ++s.undecided; break;
      case CellStatus::error: ++s.errors; break;
    }
    if (e.cert.status != CellStatus::certified && e.cert.status != CellStatus::prior_work)
      report.failures.emplace_back(e.cert.omega, e.cert.n);
  }
  for (auto& s : report.summary) {
    if (s.cells == 0) s.verdict = "no cells";
    else if (s.errors > 0) s.verdict = "errors";
    else if (s.empty > 0) s.verdict = "empty cells found";
    else if (s.undecided > 0) s.verdict = "undecided cells";
    else if (s.omega < 2) s.verdict = "prior work";
    else s.verdict = "all nonempty";
  }
  return report;
}

}  // namespace

ScanReport scan_serial(const ScanGrid& grid) {
  const auto cells = scan_cells(grid);
  std::vector<ScanEntry> entries(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    entries[i].cert = guarded_cell(cells[i].first, cells[i].second, grid.branch);
  return assemble(grid, std::move(entries));
}

ScanReport scan_parallel(const ScanGrid& grid, int threads) {
  const auto cells = scan_cells(grid);
  std::vector<ScanEntry> entries(cells.size());
  const long count = static_cast<long>(cells.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(team)
  for (long i = 0; i < count; ++i) {
    const auto& cell = cells[static_cast<std::size_t>(i)];
    entries[static_cast<std::size_t>(i)].cert = guarded_cell(cell.first, cell.second, grid.branch);
  }
  return assemble(grid, std::move(entries));
}

bool dimension_cover_check(long n_max) {
  for (long n = 3; n <= n_max; ++n) {
    const long m = n - 6;
    const long fl = m >= 0 ? m / 2 : -((-m + 1) / 2);
    if (fl > 15) return false;
  }
  return true;
}

}  // namespace hvcert::certify
