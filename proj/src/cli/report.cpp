#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "hvcert/cli.hpp"
#include "hvcert/error.hpp"
#include "hvcert/integrals.hpp"
#include "hvcert/spectral.hpp"
#include "hvcert/sphere.hpp"

namespace hvcert::cli {

using algebra::Polynomial;
using algebra::Rational;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// One line of a checks table. Informational rows never change the exit code.
struct Check {
  std::string name;
  double value = 0.0;
  double reference = 0.0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool informational = false;
  std::string note;
};

Check relative_check(std::string name, double value, double reference, double tol) {
  Check c;
  c.name = std::move(name);
  c.value = value;
  c.reference = reference;
  c.deviation = std::fabs(value - reference) / std::max(std::fabs(reference), 1e-300);
  c.tolerance = tol;
  c.pass = c.deviation <= tol;
  return c;
}

Check flag_check(std::string name, bool ok, std::string note = "") {
  Check c;
  c.name = std::move(name);
  c.value = ok ? 1.0 : 0.0;
  c.reference = 1.0;
  c.pass = ok;
  c.note = std::move(note);
  return c;
}

struct CheckList {
  std::vector<Check> items;
  void add(Check c) { items.push_back(std::move(c)); }
  bool all_pass() const {
    for (const auto& c : items)
      if (!c.informational && !c.pass) return false;
    return true;
  }
  Table table(std::string title) const {
    Table t{std::move(title), {"check", "value", "reference", "deviation", "tolerance", "result"}, {}};
    for (const auto& c : items) {
      std::string result = c.pass ? "pass" : (c.informational ? "reported" : "FAIL");
      if (!c.note.empty()) result += " (" + c.note + ")";
      t.rows.push_back({c.name, num(c.value), num(c.reference), num(c.deviation),
                        c.tolerance > 0.0 ? num(c.tolerance) : "", result});
    }
    return t;
  }
  Json json() const {
    Json a = Json::array();
    for (const auto& c : items)
      a.push_back({{"check", c.name},
                   {"value", c.value},
                   {"reference", c.reference},
                   {"deviation", c.deviation},
                   {"tolerance", c.tolerance},
                   {"pass", c.pass},
                   {"informational", c.informational},
                   {"note", c.note}});
    return a;
  }
};

Range omega_or(const RunConfig& c, long lo, long hi) { return c.omega ? *c.omega : Range{lo, hi}; }

// --- certify / scan -----------------------------------------------------------

Json symbolic_json(const certify::SymbolicCertificate& s) {
  Json j;
  j["omega"] = s.omega;
  j["valid_from"] = s.valid_from;
  j["success"] = s.success;
  j["bounds"] = Json::array();
  for (const auto& b : s.bounds)
    j["bounds"].push_back({{"k", b.k},
                           {"a", b.a.str()},
                           {"beta", b.beta.str()},
                           {"sqrt_a_lower", b.sqrt_a.lower.decimal(20)},
                           {"bound", format_square_bound(b.a, b.beta)},
                           {"gap_positive", b.gap.holds},
                           {"shift_positive", b.shift.holds}});
  j["pair_checks"] = Json::array();
  for (const auto& p : s.pair_checks)
    j["pair_checks"].push_back({{"i", p.i}, {"j", p.j}, {"holds", p.witness.holds}});
  j["failing_pair"] = s.failing_pair ? Json::array({s.failing_pair->first, s.failing_pair->second}) : Json(nullptr);
  j["failure_reason"] = s.failure_reason;
  return j;
}

Json omega_summary_json(const certify::OmegaSummary& s) {
  return {{"omega", s.omega},
          {"cells", s.cells},
          {"certified", s.certified},
          {"empty", s.empty},
          {"undecided", s.undecided},
          {"errors", s.errors},
          {"first_empty", s.first_empty ? Json(*s.first_empty) : Json(nullptr)},
          {"verdict", s.verdict}};
}

Table omega_table(const std::vector<certify::OmegaSummary>& summary) {
  Table t{"Scan summary", {"omega", "cells", "certified", "empty", "undecided", "errors", "first empty n", "verdict"}, {}};
  for (const auto& s : summary)
    t.rows.push_back({std::to_string(s.omega), std::to_string(s.cells), std::to_string(s.certified),
                      std::to_string(s.empty), std::to_string(s.undecided), std::to_string(s.errors),
                      s.first_empty ? std::to_string(*s.first_empty) : "", s.verdict});
  return t;
}

void add_scan(Report& rep, const RunConfig& c, const certify::ScanGrid& grid, bool keep_entries) {
  const auto scan = certify::scan_parallel(grid, c.threads);
  if (keep_entries)
    for (const auto& e : scan.entries) rep.entries.push_back(cell_row(e.cert));
  Json list = Json::array();
  for (const auto& s : scan.summary) {
    list.push_back(omega_summary_json(s));
    if (s.errors > 0 || s.undecided > 0) rep.status = 1;
    if (c.require_nonempty && s.empty > 0) rep.status = 1;
  }
  rep.summary["scan"] = list;
  rep.tables.push_back(omega_table(scan.summary));
}

void build_certify(Report& rep, const RunConfig& c) {
  const Range om = omega_or(c, 3, 15);
  if (c.symbolic) {
    Json list = Json::array();
    Table t{"Symbolic certificates", {"omega", "valid from n", "success", "lower bounds", "failure"}, {}};
    for (long w = om.lo; w <= om.hi; ++w) {
      const auto s = certify::symbolic_certificate(static_cast<int>(w));
      if (!s.success) rep.status = 1;
      list.push_back(symbolic_json(s));
      std::string bounds;
      for (const auto& b : s.bounds) bounds += (bounds.empty() ? "" : "; ") + format_square_bound(b.a, b.beta);
      t.rows.push_back({std::to_string(w), std::to_string(s.valid_from), s.success ? "yes" : "no", bounds,
                        s.failure_reason});
    }
    rep.summary["symbolic"] = list;
    rep.tables.push_back(t);
  }
  if (c.n) {
    certify::ScanGrid grid{static_cast<int>(om.lo), static_cast<int>(om.hi), c.n->lo, c.n->hi, c.mu_branch};
    const std::size_t before = rep.entries.size();
    add_scan(rep, c, grid, true);
    for (std::size_t i = before; i < rep.entries.size(); ++i) {
      const auto& s = rep.entries[i].status;
      if (s != "certified" && s != "prior_work") rep.status = 1;
    }
    if (rep.entries.size() == before)
      rep.notes.push_back("no cells: every requested n is below 2*omega+6");
  }
}

void build_scan(Report& rep, const RunConfig& c) {
  const Range om = omega_or(c, 3, 15);
  const Range n = c.n ? *c.n : Range{0, 400};
  add_scan(rep, c, {static_cast<int>(om.lo), static_cast<int>(om.hi), n.lo, n.hi, c.mu_branch}, true);
}

// --- coeffs -----------------------------------------------------------------------

void build_coeffs(Report& rep, const RunConfig& c) {
  const Range om = omega_or(c, 5, 7);
  Table t{"Spectral coefficients",
          {"omega", "k", "nu_k", "d_k", "u_k/nu_k", "Delta_k", "Delta_k lower bound"},
          {}};
  Json list = Json::array();
  for (long w = om.lo; w <= om.hi; ++w) {
    for (const auto& row : spectral::spectral_family(static_cast<int>(w))) {
      const auto factors = row.delta_factors();
      const auto e = row.delta_expansion();
      const Rational a = e.polynomial_part.coeff(2);
      const std::string bound =
          a.sign() > 0 ? format_square_bound(a, e.polynomial_part.coeff(1) / (Rational(2) * a)) : "";
      const std::string nu = format_polynomial(row.nu, factors);
      const std::string d = format_polynomial(row.d, factors);
      const std::string u = format_rational_function(row.u_over_nu, factors);
      const std::string delta = format_expansion(e);
      t.rows.push_back({std::to_string(w), std::to_string(row.k), nu, d, u, delta, bound});
      Json poles = Json::array();
      for (const auto& p : e.simple_poles) poles.push_back({{"root", p.root.str()}, {"residue", p.residue.str()}});
      Json poly = Json::array();
      for (const auto& co : e.polynomial_part.coefficients()) poly.push_back(co.str());
      list.push_back({{"omega", w},
                      {"k", row.k},
                      {"nu", nu},
                      {"d", d},
                      {"u_over_nu", u},
                      {"delta", delta},
                      {"delta_polynomial_part", poly},
                      {"delta_poles", poles},
                      {"delta_lower_bound", bound}});
    }
  }
  rep.summary["coefficients"] = list;
  rep.tables.push_back(t);
}

// --- integrals --------------------------------------------------------------------

CheckList integral_checks(const Tolerances& tol) {
  CheckList cl;
  double worst = 0.0;
  int pairs = 0;
  for (double a = 2.0; a <= 12.0; a += 0.5)
    for (double b = 2.0; 2.0 * a - b > 3.0; b += 1.0) {
      worst = std::max(worst, integrals::recurrence_check(a, b, tol.recurrence).max_rel_deviation);
      ++pairs;
    }
  Check rec = flag_check("recurrences on " + std::to_string(pairs) + " (a,b) pairs", worst <= tol.recurrence);
  rec.value = worst;
  rec.reference = 0.0;
  rec.deviation = worst;
  rec.tolerance = tol.recurrence;
  cl.add(rec);

  for (int n = 3; n <= 12; ++n) {
    const auto r = integrals::inte_identity_check(n, tol.identity);
    cl.add(relative_check("bubble identity n=" + std::to_string(n), r.lhs, r.rhs, tol.identity));
  }
  for (int n = 3; n <= 12; ++n) {
    const auto r = integrals::rela_shorthand_check(n, tol.identity);
    Check c = relative_check("short recurrence form n=" + std::to_string(n), r.lhs, r.rhs, tol.identity);
    c.informational = true;
    if (!c.pass) c.note = "inconsistent as stated";
    cl.add(c);
  }
  cl.add(flag_check("P_2 symbolic identity", spectral::p2_identity_check()));
  for (auto [n, w] : {std::pair{16, 3}, std::pair{20, 5}, std::pair{30, 9}}) {
    const auto r = integrals::norm_f2_check(n, w, tol.identity);
    const std::string tag = "(n=" + std::to_string(n) + ", omega=" + std::to_string(w) + ")";
    cl.add(relative_check("f^2 coefficient " + tag, r.lhs, r.rhs, tol.identity));
    Check neg = relative_check("f^2 coefficient with -P_2 sign " + tag, r.lhs, r.rhs_negated, tol.identity);
    neg.informational = true;
    cl.add(neg);
  }
  for (int n = 4; n <= 8; ++n) {
    const double k2 = integrals::k2_inverse_square(n);
    const auto y = integrals::radial_yamabe({n, 1e-3, 1.0});
    cl.add(relative_check("radial Yamabe quotient n=" + std::to_string(n) + " eps=1e-3", y.value, k2, 0.02));
    double prev = INFINITY;
    bool monotone = true;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const double gap = std::fabs(integrals::radial_yamabe({n, eps, 1.0}).value - k2) / k2;
      monotone = monotone && gap < prev;
      prev = gap;
    }
    cl.add(flag_check("radial gap decreasing in eps, n=" + std::to_string(n), monotone));
  }
  return cl;
}

void build_integrals(Report& rep, const RunConfig& c) {
  const CheckList cl = integral_checks(c.tolerances);
  if (!cl.all_pass()) rep.status = 1;
  rep.summary["integrals"] = cl.json();
  rep.tables.push_back(cl.table("Integral identities"));
}

// --- sphere ----------------------------------------------------------------------

double spectral_d(double n, double nu, int omega) {
  const double W = omega + 2.0;
  return 4.0 * ((n - 1.0) * (n - 2.0) * nu - n * (n - 2.0) * (n - 2.0) + W * W * (n * n + n + 2.0));
}

std::pair<double, double> b_identity_errors(const sphere::BTensor& b, const sphere::SphereGrid& grid) {
  double trace = 0.0, div = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& x = grid.node(i).x;
    const auto m = b.eval(x);
    trace = std::max(trace, std::fabs(m[0][0] + m[1][1] + m[2][2]));
    const auto v = b.divergence(x);
    sphere::Vec3<double> g{0.0, 0.0, 0.0};
    for (const auto& comp : b.components()) {
      const auto gp = comp.phi.gradient(x);
      for (int j = 0; j < 3; ++j) g[j] += comp.coeff * gp[j];
    }
    for (int j = 0; j < 3; ++j) div = std::max(div, std::fabs(v[j] + g[j]));
  }
  return {trace, div};
}

CheckList sphere_checks(const RunConfig& c) {
  using namespace sphere;
  CheckList cl;
  const Tolerances& tol = c.tolerances;
  for (int l = 2; l <= 5; ++l) {
    const std::string tag = " l=" + std::to_string(l);
    const auto grid = SphereGrid::for_degree(2 * l + 6);
    for (int m : {0, l}) {
      const auto [tr, dv] = b_identity_errors(b_tensor({l, m}), grid);
      Check ct = flag_check("b trace" + tag + " m=" + std::to_string(m), tr <= 1e-10);
      ct.value = ct.deviation = tr;
      ct.reference = 0.0;
      ct.tolerance = 1e-10;
      cl.add(ct);
      Check cd = flag_check("b divergence identity" + tag + " m=" + std::to_string(m), dv <= tol.sphere);
      cd.value = cd.deviation = dv;
      cd.reference = 0.0;
      cd.tolerance = tol.sphere;
      cl.add(cd);
    }
    const auto q = qbc_closed_forms({l, 0});
    cl.add(relative_check("Q_b" + tag, q.Q_quad, q.Q, tol.sphere));
    // B_b vanishes at l = 2, so it is compared on an absolute scale there.
    Check cb = relative_check("B_b" + tag, q.B_quad, q.B, tol.sphere);
    if (std::fabs(q.B) < 1.0) {
      cb.deviation = std::fabs(q.B_quad - q.B);
      cb.pass = cb.deviation <= tol.sphere;
    }
    cl.add(cb);
    cl.add(relative_check("C_b" + tag, q.C_quad, q.C, tol.sphere));

    const double n = 3.0, nu = l * (l + 1.0);
    const int omega = 2;
    const double d = spectral_d(n, nu, omega);
    const double ck = (n - 2.0) * (n - 2.0) / d;
    const auto g = SphereGrid::for_degree(2 * l + 4);
    const auto phi = SphereFunction::harmonic({l, 0});
    const auto rbar = ScalarField::sample(g, [&](const Vec3<double>& x) { return nu * phi.value(x); });
    const double is = i_s_functional(SphereFunction::harmonic({l, 0}, ck * nu), rbar, n, omega);
    cl.add(relative_check("I_S minimum" + tag, is, -std::pow(n - 2.0, 4) * nu * nu / d, 1e-8));
  }

  {
    const auto g = SphereGrid::for_degree(12);
    const auto p2 = SphereFunction::harmonic({2, 1}), p3 = SphereFunction::harmonic({3, -2});
    const auto both = SphereFunction(harmonic_polynomial({2, 1}) + harmonic_polynomial({3, -2}));
    const auto rbar = ScalarField::sample(g, [&](const Vec3<double>& x) { return 6.0 * p2.value(x) + 12.0 * p3.value(x); });
    const double a = i_s_functional(p2, rbar, 3.0, 2), b = i_s_functional(p3, rbar, 3.0, 2);
    const double ab = i_s_functional(both, rbar, 3.0, 2);
    Check add = relative_check("I_S additivity l=2 vs l=3", ab, a + b, 1e-8);
    cl.add(add);
  }

  {
    // Random harmonic mixtures, drawn from the seed.
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<int> ld(2, 4);
    std::uniform_real_distribution<double> cd(-1.0, 1.0);
    double tr = 0.0, dv = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<std::pair<double, HarmonicSpec>> mix;
      for (int k = 0; k < 3; ++k) {
        const int l = ld(rng);
        std::uniform_int_distribution<int> md(-l, l);
        mix.emplace_back(cd(rng), HarmonicSpec{l, md(rng)});
      }
      const auto [t, d] = b_identity_errors(BTensor(mix), SphereGrid::for_degree(14));
      tr = std::max(tr, t);
      dv = std::max(dv, d);
    }
    Check ct = flag_check("b trace, seeded mixtures", tr <= 1e-10);
    ct.value = ct.deviation = tr;
    ct.reference = 0.0;
    ct.tolerance = 1e-10;
    cl.add(ct);
    Check cdv = flag_check("b divergence identity, seeded mixtures", dv <= tol.sphere);
    cdv.value = cdv.deviation = dv;
    cdv.reference = 0.0;
    cdv.tolerance = tol.sphere;
    cl.add(cdv);
  }

  {
    const int omega = 2;
    const auto b = b_tensor({2, 0});
    const auto grid = SphereGrid::for_degree(12);
    const auto at = [&](double t) { return annulus_curvature_check(b, omega, t, RadialWindow{}, grid); };
    const auto r3 = at(1e-3);
    double worst = r3.samples.front().normalized.value();
    for (const auto& s : r3.samples)
      if (std::fabs(*s.normalized - r3.bracket) > std::fabs(worst - r3.bracket)) worst = *s.normalized;
    cl.add(relative_check("annulus mean curvature vs bracket (l=2, omega=2, t=1e-3)", worst, r3.bracket,
                          tol.annulus));
    const double h = 1.0 + 0.5 * omega;
    Check lim = relative_check("annulus mean curvature vs -(1+omega/2)^2 Q", worst, -h * h * r3.Q, tol.annulus);
    lim.informational = true;
    cl.add(lim);
    // Convergence in t of the normalized mean at r = 1.
    std::vector<double> v;
    for (double t : {1e-2, 1e-3, 1e-4, 1e-5}) v.push_back(at(t).samples.back().normalized.value());
    const double d1 = std::fabs(v[0] - v[1]), d2 = std::fabs(v[1] - v[2]), d3 = std::fabs(v[2] - v[3]);
    Check conv = flag_check("annulus normalized mean converges at least linearly in t", d2 <= 0.2 * d1 && d3 <= 0.2 * d2);
    conv.value = d2 > 0.0 ? d1 / d2 : INFINITY;
    conv.reference = 10.0;
    conv.note = "successive decade ratio";
    cl.add(conv);
  }
  return cl;
}

void build_sphere(Report& rep, const RunConfig& c) {
  const CheckList cl = sphere_checks(c);
  if (!cl.all_pass()) rep.status = 1;
  rep.summary["sphere"] = cl.json();
  rep.tables.push_back(cl.table("Sphere oracle"));
}

// --- report -----------------------------------------------------------------------

void build_full(Report& rep, const RunConfig& c) {
  CheckList cl;
  bool symbolic_ok = true;
  for (int w = 3; w <= 15; ++w) symbolic_ok = symbolic_ok && certify::symbolic_certificate(w).success;
  cl.add(flag_check("symbolic certificates omega=3..15", symbolic_ok));
  const auto s16 = certify::symbolic_certificate(16);
  cl.add(flag_check("symbolic certificate fails at omega=16", !s16.success, s16.failure_reason));

  const auto scan = certify::scan_parallel({3, 15, 0, 400, c.mu_branch}, c.threads);
  cl.add(flag_check("numeric scan omega=3..15, n<=400 all certified (" + std::to_string(scan.entries.size()) + " cells)",
                    scan.failures.empty()));
  const auto scan16 = certify::scan_parallel({16, 16, 38, 2000, c.mu_branch}, c.threads);
  const auto& s = scan16.summary.front();
  Check empty = flag_check("omega=16 scan finds an empty cell", s.first_empty.has_value(),
                           s.first_empty ? "first empty n=" + std::to_string(*s.first_empty) : "");
  empty.value = s.first_empty ? static_cast<double>(*s.first_empty) : 0.0;
  empty.reference = 0.0;
  cl.add(empty);
  cl.add(flag_check("dimension cover up to 37", certify::dimension_cover_check(37)));
  cl.add(flag_check("dimension cover fails at 38", !certify::dimension_cover_check(38)));
  bool lemma = true;
  for (int w = 2; w <= 15; ++w) lemma = lemma && spectral::check_lemma_poly(w).holds;
  cl.add(flag_check("u_k - (n-2)^2 nu_k^2/d_k < 0 for omega=2..15", lemma));

  if (!cl.all_pass()) rep.status = 1;
  rep.summary["certification"] = cl.json();
  rep.summary["omega16"] = omega_summary_json(s);
  rep.tables.push_back(cl.table("Certification"));

  RunConfig coeffs = c;
  coeffs.omega = Range{5, 7};
  build_coeffs(rep, coeffs);
  build_integrals(rep, c);
  build_sphere(rep, c);
}

std::string markdown_cell(const std::string& s) {
  std::string out;
  for (char ch : s) out += ch == '|' ? std::string("\\|") : std::string(1, ch);
  return out;
}

std::string markdown_table(const Table& t) {
  std::ostringstream os;
  os << "## " << t.title << "\n\n|";
  for (const auto& h : t.header) os << ' ' << markdown_cell(h) << " |";
  os << "\n|";
  for (std::size_t i = 0; i < t.header.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& r : t.rows) {
    os << "|";
    for (const auto& cell : r) os << ' ' << markdown_cell(cell) << " |";
    os << "\n";
  }
  return os.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string& f = cells[i];
    if (i) s += ',';
    if (f.find_first_of(",\"\n") == std::string::npos) {
      s += f;
    } else {
      s += '"';
      for (char ch : f) s += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      s += '"';
    }
  }
  return s + "\n";
}

}  // namespace

Report build_report(const RunConfig& config) {
  validate(config);
  Report rep;
  rep.config = config;
  if (rep.config.threads == 0) rep.config.threads = omp_get_num_procs();
  switch (config.command) {
    case Command::certify: build_certify(rep, rep.config); break;
    case Command::scan: build_scan(rep, rep.config); break;
    case Command::coeffs: build_coeffs(rep, rep.config); break;
    case Command::integrals: build_integrals(rep, rep.config); break;
    case Command::sphere_check: build_sphere(rep, rep.config); break;
    case Command::report: build_full(rep, rep.config); break;
  }
  rep.summary["status"] = rep.status == 0 ? "pass" : "fail";
  if (!rep.notes.empty()) rep.summary["notes"] = rep.notes;
  return rep;
}

std::string render(const Report& rep, Format format) {
  if (format == Format::json) {
    Json j;
    j["tool_version"] = kToolVersion;
    j["config_echo"] = to_json(rep.config);
    j["entries"] = Json::array();
    for (const auto& e : rep.entries) j["entries"].push_back(to_json(e));
    j["summary"] = rep.summary;
    return j.dump(2) + "\n";
  }
  if (format == Format::csv) {
    const bool cells = rep.config.command == Command::certify || rep.config.command == Command::scan;
    if (cells || rep.tables.empty()) return cells_to_csv(rep.entries);
    std::string s = csv_line(rep.tables.front().header);
    for (const auto& r : rep.tables.front().rows) s += csv_line(r);
    return s;
  }
  std::ostringstream os;
  os << "# hvcert " << to_string(rep.config.command) << "\n\n";
  os << "tool version " << kToolVersion << "; status: " << (rep.status == 0 ? "pass" : "fail") << "\n\n";
  for (const auto& t : rep.tables) os << markdown_table(t) << "\n";
  if (!rep.entries.empty()) {
    Table t{"Cells", {"omega", "n", "nonempty", "max x", "min y", "chosen c", "status"}, {}};
    for (const auto& e : rep.entries) {
      std::string mx, my;
      // Reports list x and y per k; the extremes are what decide the cell.
      if (!e.x.empty()) {
        std::size_t ix = 0, iy = 0;
        for (std::size_t i = 1; i < e.x.size(); ++i) {
          if (std::stod(e.x[i].decimal) > std::stod(e.x[ix].decimal)) ix = i;
          if (std::stod(e.y[i].decimal) < std::stod(e.y[iy].decimal)) iy = i;
        }
        mx = e.x[ix].decimal;
        my = e.y[iy].decimal;
      }
      t.rows.push_back({std::to_string(e.omega), std::to_string(e.n), e.nonempty ? "yes" : "no", mx, my,
                        e.chosen_c ? e.chosen_c->decimal : "", e.status});
    }
    os << markdown_table(t) << "\n";
  }
  for (const auto& n : rep.notes) os << "- " << n << "\n";
  return os.str();
}

std::string resolve_output_path(const RunConfig& config) {
  if (!config.output.empty()) return config.output;
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir == nullptr || *dir == '\0') return "";
  const char* ext = config.format == Format::json ? ".json" : (config.format == Format::csv ? ".csv" : ".md");
  return (std::filesystem::path(dir) / (to_string(config.command) + ext)).string();
}

void emit_report(const Report& report, Format format, const std::string& path, std::ostream& out) {
  const std::string text = render(report, format);
  if (path.empty()) {
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::io_failure, "cannot write report to the output stream");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::io_failure, "cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw Error(ErrorCode::io_failure, "failed writing '" + path + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Report rep = build_report(config);
    emit_report(rep, config.format, resolve_output_path(config), out);
    for (const auto& n : rep.notes) err << "note: " << n << "\n";
    return rep.status;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hvcert::cli
