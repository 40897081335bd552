#include <algorithm>
#include <sstream>

#include "hvcert/cli.hpp"
#include "hvcert/error.hpp"

namespace hvcert::cli {

using algebra::Polynomial;
using algebra::Rational;

namespace {

constexpr int kDecimalDigits = 20;

const Rational& enclosure_width() {
  static const Rational w = algebra::power_of_two_inverse(160);
  return w;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

// RFC 4180 records; the input is newline-terminated.
std::vector<std::vector<std::string>> parse_csv_records(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      rec.push_back(field);
      field.clear();
      any = true;
    } else if (ch == '\n') {
      rec.push_back(field);
      records.push_back(rec);
      rec.clear();
      field.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
      any = true;
    }
  }
  if (quoted) throw Error(ErrorCode::invalid_config, "unterminated quoted CSV field");
  if (any) {
    rec.push_back(field);
    records.push_back(rec);
  }
  return records;
}

std::string value_item(const ExactValue& v) { return v.exact + "|" + v.decimal; }

ExactValue parse_item(const std::string& s) {
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw Error(ErrorCode::invalid_config, "CSV value without '|': " + s);
  return {s.substr(bar + 1), s.substr(0, bar)};
}

std::string value_list(const std::vector<ExactValue>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ";" : "") + value_item(vs[i]);
  return out;
}

std::vector<ExactValue> parse_list(const std::string& s) {
  std::vector<ExactValue> out;
  if (s.empty()) return out;
  for (const auto& item : split(s, ';')) out.push_back(parse_item(item));
  return out;
}

Json value_json(const ExactValue& v) { return {{"decimal", v.decimal}, {"exact", v.exact}}; }

ExactValue value_from_json(const Json& j) { return {j.at("decimal").get<std::string>(), j.at("exact").get<std::string>()}; }

const char* kCellHeader = "omega,n,nonempty,x,y,chosen_c,status";

// Strips every copy of the monic linear candidates; returns the factors found
// and the cofactor.
std::pair<std::vector<Polynomial>, Polynomial> pull_factors(const Polynomial& p,
                                                            const std::vector<Polynomial>& candidates) {
  std::vector<Polynomial> found;
  Polynomial rest = p;
  for (const auto& cand : candidates) {
    if (cand.degree() != 1) continue;
    const Polynomial m = cand.monic();
    if (std::find(found.begin(), found.end(), m) != found.end()) continue;
    while (rest.degree() >= 1) {
      auto [q, r] = algebra::divmod(rest, m);
      if (!r.is_zero()) break;
      found.push_back(m);
      rest = q;
    }
  }
  return {found, rest};
}

// Integer-coefficient product without the content, e.g. "(n-2)(n+3)".
std::string product_str(const std::vector<Polynomial>& factors, const Polynomial& rest) {
  std::string s;
  for (const auto& f : factors) s += f.str() == "n" ? "n" : "(" + f.str() + ")";
  if (rest.degree() >= 1) s += "(" + rest.str() + ")";
  return s;
}

}  // namespace

ExactValue exact_value(const Rational& r) { return {r.decimal(kDecimalDigits), r.str()}; }

ExactValue exact_value(const algebra::SurdExpression& s) {
  if (s.is_rational()) return exact_value(s.constant());
  return {s.enclose(enclosure_width()).midpoint().decimal(kDecimalDigits), s.str()};
}

CellRow cell_row(const certify::IntervalCertificate& cert) {
  CellRow row;
  row.omega = cert.omega;
  row.n = cert.n;
  row.nonempty = cert.nonempty;
  for (const auto& p : cert.pairs) {
    row.x.push_back(exact_value(p.x));
    row.y.push_back(exact_value(p.y));
  }
  if (cert.chosen_c) row.chosen_c = exact_value(*cert.chosen_c);
  row.status = certify::to_string(cert.status);
  return row;
}

Json to_json(const CellRow& row) {
  Json j;
  j["omega"] = row.omega;
  j["n"] = row.n;
  j["nonempty"] = row.nonempty;
  j["x"] = Json::array();
  for (const auto& v : row.x) j["x"].push_back(value_json(v));
  j["y"] = Json::array();
  for (const auto& v : row.y) j["y"].push_back(value_json(v));
  j["chosen_c"] = row.chosen_c ? value_json(*row.chosen_c) : Json(nullptr);
  j["status"] = row.status;
  return j;
}

CellRow cell_from_json(const Json& j) {
  CellRow row;
  row.omega = j.at("omega").get<int>();
  row.n = j.at("n").get<long>();
  row.nonempty = j.at("nonempty").get<bool>();
  for (const auto& v : j.at("x")) row.x.push_back(value_from_json(v));
  for (const auto& v : j.at("y")) row.y.push_back(value_from_json(v));
  if (!j.at("chosen_c").is_null()) row.chosen_c = value_from_json(j.at("chosen_c"));
  row.status = j.at("status").get<std::string>();
  return row;
}

std::string cells_to_csv(const std::vector<CellRow>& rows) {
  std::ostringstream os;
  os << kCellHeader << "\n";
  for (const auto& r : rows) {
    os << r.omega << ',' << r.n << ',' << (r.nonempty ? "true" : "false") << ',' << csv_field(value_list(r.x)) << ','
       << csv_field(value_list(r.y)) << ',' << csv_field(r.chosen_c ? value_item(*r.chosen_c) : "") << ','
       << csv_field(r.status) << "\n";
  }
  return os.str();
}

std::vector<CellRow> cells_from_csv(const std::string& text) {
  const auto records = parse_csv_records(text);
  if (records.empty() || records.front() != split(kCellHeader, ','))
    throw Error(ErrorCode::invalid_config, "CSV header does not match the cell schema");
  std::vector<CellRow> rows;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& f = records[i];
    if (f.size() != 7)
      throw Error(ErrorCode::invalid_config, "CSV record " + std::to_string(i) + " has " +
                                                 std::to_string(f.size()) + " fields");
    CellRow r;
    try {
      r.omega = std::stoi(f[0]);
      r.n = std::stol(f[1]);
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_config, "CSV record " + std::to_string(i) + ": bad integer");
    }
    if (f[2] != "true" && f[2] != "false")
      throw Error(ErrorCode::invalid_config, "CSV record " + std::to_string(i) + ": bad boolean");
    r.nonempty = f[2] == "true";
    r.x = parse_list(f[3]);
    r.y = parse_list(f[4]);
    if (!f[5].empty()) r.chosen_c = parse_item(f[5]);
    r.status = f[6];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_polynomial(const Polynomial& p, const std::vector<Polynomial>& candidates) {
  if (p.is_zero()) return "0";
  auto [content, prim] = p.content_primitive();
  auto [found, rest] = pull_factors(prim, candidates);
  // rest keeps integer coefficients up to a unit: fold its content back in.
  auto [rc, rprim] = rest.content_primitive();
  content *= rc;
  if (found.empty()) return p.str_factored();
  std::string body = product_str(found, rprim);
  if (content == Rational(1)) return body;
  if (content == Rational(-1)) return "-" + body;
  return content.str() + body;
}

std::string format_rational_function(const algebra::RationalFunction& f, const std::vector<Polynomial>& candidates) {
  if (f.is_polynomial()) return format_polynomial(f.num() * f.den().leading().inverse(), candidates);
  auto [cn, pn] = f.num().content_primitive();
  auto [cd, pd] = f.den().content_primitive();
  auto [fn, rn] = pull_factors(pn, candidates);
  auto [fd, rd] = pull_factors(pd, candidates);
  auto [rcn, rpn] = rn.content_primitive();
  auto [rcd, rpd] = rd.content_primitive();
  const Rational k = cn * rcn / (cd * rcd);
  const std::string sign = k.sign() < 0 ? "-" : "";
  const Rational a = k.abs();
  const Rational num_c(a.numerator(), mpz_class(1)), den_c(a.denominator(), mpz_class(1));

  std::string num = product_str(fn, rpn);
  if (num.empty()) num = num_c.str();
  else if (num_c != Rational(1)) num = num_c.str() + num;
  std::string den = product_str(fd, rpd);
  if (den_c != Rational(1)) den = den_c.str() + den;
  const bool single = fd.size() + (rpd.degree() >= 1 ? 1 : 0) == 1 && den_c == Rational(1);
  return sign + num + "/" + (single ? den : "(" + den + ")");
}

std::string format_expansion(const algebra::PartialFractionExpansion& e) {
  std::string s = e.polynomial_part.is_zero() ? "" : e.polynomial_part.str();
  for (const auto& pole : e.simple_poles) {
    if (pole.residue.is_zero()) continue;
    const Polynomial lin = Polynomial::linear(Rational(1), -pole.root);
    const Rational a = pole.residue.abs();
    s += pole.residue.sign() < 0 ? "-" : (s.empty() ? "" : "+");
    const Rational num(a.numerator(), mpz_class(1));
    const Rational den(a.denominator(), mpz_class(1));
    const std::string f = lin.str();
    std::string d = f == "n" ? f : "(" + f + ")";
    if (den != Rational(1)) d = "(" + den.str() + d + ")";
    else if (f != "n") d = "(" + f + ")";
    s += num.str() + "/" + d;
  }
  return s.empty() ? "0" : s;
}

std::string format_square_bound(const Rational& a, const Rational& beta) {
  std::string inner = "n";
  if (beta.sign() > 0) inner += "+" + beta.str();
  if (beta.sign() < 0) inner += "-" + beta.abs().str();
  const std::string lead = a == Rational(1) ? "" : a.str();
  return lead + (beta.is_zero() ? "n" : "(" + inner + ")") + "^2";
}

}  // namespace hvcert::cli
