#include <charconv>

#include "hvcert/cli.hpp"
#include "hvcert/error.hpp"

namespace hvcert::cli {

namespace {

long parse_long(const std::string& text, const std::string& what) {
  long v = 0;
  const char* b = text.data();
  const char* e = b + text.size();
  auto [ptr, ec] = std::from_chars(b, e, v);
  if (ec != std::errc() || ptr != e || text.empty())
    throw Error(ErrorCode::invalid_config, "malformed " + what + ": '" + text + "'");
  return v;
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::certify: return "certify";
    case Command::scan: return "scan";
    case Command::coeffs: return "coeffs";
    case Command::integrals: return "integrals";
    case Command::sphere_check: return "sphere-check";
    case Command::report: return "report";
  }
  return "report";
}

std::string to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::markdown: return "markdown";
  }
  return "json";
}

Command parse_command(const std::string& text) {
  for (Command c : {Command::certify, Command::scan, Command::coeffs, Command::integrals, Command::sphere_check,
                    Command::report})
    if (to_string(c) == text) return c;
  throw Error(ErrorCode::invalid_config, "unknown command '" + text + "'");
}

Format parse_format(const std::string& text) {
  for (Format f : {Format::json, Format::csv, Format::markdown})
    if (to_string(f) == text) return f;
  if (text == "md") return Format::markdown;
  throw Error(ErrorCode::invalid_config, "unknown format '" + text + "'");
}

Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text, "range");
    return {v, v};
  }
  return {parse_long(text.substr(0, dots), "range start"), parse_long(text.substr(dots + 2), "range end")};
}

std::string to_string(const Range& r) {
  return r.lo == r.hi ? std::to_string(r.lo) : std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void validate(const RunConfig& c) {
  auto check_range = [](const std::optional<Range>& r, const char* name, long max) {
    if (!r) return;
    if (r->lo < 0 || r->hi < r->lo)
      throw Error(ErrorCode::invalid_config, std::string("invalid ") + name + " range " + to_string(*r));
    if (r->hi > max)
      throw Error(ErrorCode::invalid_config, std::string(name) + " range exceeds " + std::to_string(max));
  };
  check_range(c.omega, "omega", 64);
  check_range(c.n, "n", 1000000);
  if (c.threads < 0) throw Error(ErrorCode::invalid_config, "threads must be >= 0");
  const Tolerances& t = c.tolerances;
  for (double v : {t.identity, t.recurrence, t.sphere, t.annulus})
    if (!(v > 0.0)) throw Error(ErrorCode::invalid_config, "tolerances must be positive");
  if (c.command == Command::certify && !c.symbolic && !c.n)
    throw Error(ErrorCode::invalid_config, "certify needs --n or --symbolic");
  if (c.symbolic && c.omega && c.omega->lo < 3)
    throw Error(ErrorCode::invalid_config, "symbolic certificates need omega >= 3");
}

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = to_string(c.command);
  j["omega"] = c.omega ? Json(to_string(*c.omega)) : Json(nullptr);
  j["n"] = c.n ? Json(to_string(*c.n)) : Json(nullptr);
  j["symbolic"] = c.symbolic;
  j["mu_branch"] = certify::to_string(c.mu_branch);
  j["tolerances"] = {{"identity", c.tolerances.identity},
                     {"recurrence", c.tolerances.recurrence},
                     {"sphere", c.tolerances.sphere},
                     {"annulus", c.tolerances.annulus}};
  j["format"] = to_string(c.format);
  j["output"] = c.output;
  j["threads"] = c.threads;
  j["seed"] = c.seed;
  j["require_nonempty"] = c.require_nonempty;
  return j;
}

RunConfig config_from_json(const Json& j) {
  try {
    RunConfig c;
    c.command = parse_command(j.at("command").get<std::string>());
    if (!j.at("omega").is_null()) c.omega = parse_range(j.at("omega").get<std::string>());
    if (!j.at("n").is_null()) c.n = parse_range(j.at("n").get<std::string>());
    c.symbolic = j.at("symbolic").get<bool>();
    c.mu_branch = certify::parse_mu_branch(j.at("mu_branch").get<std::string>());
    const Json& t = j.at("tolerances");
    c.tolerances = {t.at("identity").get<double>(), t.at("recurrence").get<double>(), t.at("sphere").get<double>(),
                    t.at("annulus").get<double>()};
    c.format = parse_format(j.at("format").get<std::string>());
    c.output = j.at("output").get<std::string>();
    c.threads = j.at("threads").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.require_nonempty = j.at("require_nonempty").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_config, std::string("bad config document: ") + e.what());
  }
}

}  // namespace hvcert::cli
