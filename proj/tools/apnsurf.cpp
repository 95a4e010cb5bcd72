// apnsurf: command-line front end.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 budget exceeded,
// 3 invariant violation or failed verification item.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "apnsurf/apn.hpp"
#include "apnsurf/classify.hpp"
#include "apnsurf/factor.hpp"
#include "apnsurf/field.hpp"
#include "apnsurf/phi.hpp"
#include "apnsurf/text.hpp"
#include "apnsurf/verify.hpp"

#ifndef APNSURF_VERSION
#define APNSURF_VERSION "0.0.0"
#endif

using namespace apnsurf;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kCacheEnv = "APNSURF_CACHE";
constexpr const char* kDefaultCache = "apnsurf-verdicts.jsonl";

struct Options {
  std::string field = "2^1";
  std::string poly;
  std::optional<unsigned> poly_phi;
  std::string range;
  int n = 0;
  bool json = false;
  bool absolute = false;
  std::string budget = "default";
  std::string cache;
};

struct Report {
  Json input = Json::object();
  Field field = Field::gf2();
  Json result = Json::object();
  std::string text;
  int exit_code = 0;
};

std::string cache_path(const Options& o) {
  if (!o.cache.empty()) return o.cache;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return kDefaultCache;
}

Json field_json(const Field& f) {
  std::ostringstream mod;
  mod << "0x" << std::uppercase << std::hex << f.modulus();
  return Json{{"n", f.degree()}, {"modulus", mod.str()}};
}

Json factor_list(const Factorization& fac) {
  Json list = Json::array();
  for (const auto& [p, m] : fac.factors) {
    list.push_back(Json{{"poly", format(p)}, {"degree", p.total_degree()}, {"multiplicity", m}});
  }
  return list;
}

std::string factor_text(const Factorization& fac) {
  std::ostringstream out;
  out << "unit      " << format_elem(fac.unit) << '\n';
  out << "factors   " << fac.factors.size() << '\n';
  for (const auto& [p, m] : fac.factors) {
    out << "  deg " << std::setw(3) << p.total_degree() << "  mult " << m << "  " << format(p) << '\n';
  }
  return out.str();
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw SyntaxError(0, "LO..HI");
  auto number = [&](std::size_t from, std::size_t to) {
    if (from == to) throw SyntaxError(from, "integer");
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw SyntaxError(i, "digit");
    }
    return std::stoi(text.substr(from, to - from));
  };
  return {number(0, dots), number(dots + 2, text.size())};
}

Budget parse_budget(const std::string& s) {
  if (s == "default") return Budget::Default;
  if (s == "high") return Budget::High;
  throw Error(ErrorCode::InvalidArgument, "budget must be 'default' or 'high'");
}

// ---------------------------------------------------------------------------

Report run_field(const Options& o) {
  Report r;
  r.field = parse_field(o.field);
  r.input["field"] = o.field;
  const Field& f = r.field;
  r.result = Json{{"size", f.size()},
                  {"generator", format_elem(f.generator())},
                  {"primitive", format_elem(f.primitive())},
                  {"default_modulus", f.modulus() == Field::default_modulus(f.degree())}};
  std::ostringstream out;
  out << "field     " << f.to_string() << '\n'
      << "size      " << f.size() << '\n'
      << "generator " << format_elem(f.generator()) << '\n'
      << "primitive " << format_elem(f.primitive()) << '\n';
  r.text = out.str();
  return r;
}

Report run_phi(const Options& o) {
  Report r;
  r.field = parse_field(o.field);
  r.input["field"] = o.field;
  r.input["poly"] = o.poly;
  const PhiSurface s = phi_of(parse_poly(o.poly, r.field));
  r.result = Json{{"f", format(s.f)},
                  {"phi", format(s.phi)},
                  {"degree", s.degree ? Json(*s.degree) : Json(nullptr)},
                  {"terms", s.phi.size()},
                  {"homogeneous", s.phi.is_homogeneous()}};
  std::ostringstream out;
  out << "f         " << format(s.f) << '\n'
      << "degree    " << (s.degree ? std::to_string(*s.degree) : "-") << '\n'
      << "terms     " << s.phi.size() << '\n'
      << "phi       " << format(s.phi) << '\n';
  r.text = out.str();
  return r;
}

Report run_factor(const Options& o) {
  Report r;
  r.field = parse_field(o.field);
  r.input["field"] = o.field;
  TriPoly target(r.field);
  if (o.poly_phi) {
    r.input["poly_phi"] = *o.poly_phi;
    target = map_coeffs(phi_mono(*o.poly_phi), embedding(Field::gf2(), r.field));
    if (target.is_zero()) throw Error(ErrorCode::InvalidArgument, "phi_" + std::to_string(*o.poly_phi) + " is zero");
  } else {
    r.input["poly"] = o.poly;
    target = parse_tripoly(o.poly, r.field);
  }
  r.input["absolute"] = o.absolute;
  std::ostringstream out;
  out << "input     " << format(target) << '\n';

  if (!o.absolute) {
    const Factorization fac = factor(target, r.field);
    r.result = Json{{"unit", format_elem(fac.unit)}, {"factors", factor_list(fac)}};
    out << factor_text(fac);
    r.text = out.str();
    return r;
  }

  std::optional<VerdictCache::Entry> cached;
  const std::string path = cache_path(o);
  const bool cacheable = o.poly_phi && r.field.degree() == 1;
  if (cacheable) cached = VerdictCache::load(path).lookup(*o.poly_phi);
  if (cached) {
    r.result = Json{{"verdict", to_string(cached->kind)}, {"r", cached->r}, {"factor_count", cached->factor_count},
                    {"cached", true}};
    out << "verdict   " << to_string(cached->kind) << " (r = " << cached->r << ", cached)\n";
    r.text = out.str();
    return r;
  }
  const AbsIrredVerdict v = absolute_irreducibility(target);
  const int count = v.factorization ? v.factorization->count_with_multiplicity() : 1;
  r.result = Json{{"verdict", to_string(v.kind)}, {"r", v.r}, {"factor_count", count}, {"cached", false}};
  out << "verdict   " << to_string(v.kind) << " (r = " << v.r << ")\n";
  if (v.factorization) {
    r.result["field_of_split"] = field_json(v.factorization->field);
    r.result["factors"] = factor_list(*v.factorization);
    out << "over      " << v.factorization->field.to_string() << '\n' << factor_text(*v.factorization);
  }
  if (cacheable) VerdictCache::append(path, *o.poly_phi, {v.kind, v.r, count});
  r.text = out.str();
  return r;
}

Report run_apn(const Options& o) {
  Report r;
  r.field = parse_field(o.field);
  r.input["field"] = o.field;
  r.input["poly"] = o.poly;
  r.input["range"] = o.range;
  const auto [lo, hi] = parse_range(o.range);
  const UniPoly f = parse_poly(o.poly, r.field);
  const auto rows = apn_scan(f, lo, hi);
  Json list = Json::array();
  std::ostringstream out;
  out << std::setw(4) << "n" << std::setw(7) << "delta" << std::setw(5) << "apn" << "  witness\n";
  for (const auto& row : rows) {
    Json w = nullptr;
    std::string wtext = "-";
    if (row.witness && !row.apn) {
      Json sols = Json::array();
      for (Elem s : row.witness->solutions) sols.push_back(format_elem(s));
      w = Json{{"a", format_elem(row.witness->a)}, {"b", format_elem(row.witness->b)}, {"solutions", sols}};
      wtext = "a=" + format_elem(row.witness->a) + " b=" + format_elem(row.witness->b);
    }
    list.push_back(Json{{"n", row.n}, {"delta", row.delta}, {"apn", row.apn}, {"witness", w}});
    out << std::setw(4) << row.n << std::setw(7) << row.delta << std::setw(5) << (row.apn ? "yes" : "no") << "  "
        << wtext << '\n';
  }
  r.result = Json{{"rows", list}};
  r.text = out.str();
  return r;
}

Report run_classify(const Options& o) {
  Report r;
  r.field = parse_field(o.field);
  r.input["field"] = o.field;
  r.input["poly"] = o.poly;
  const int n = o.n > 0 ? o.n : r.field.degree();
  r.input["n"] = n;
  const UniPoly f = parse_poly(o.poly, r.field);
  const VerdictCache cache = VerdictCache::load(cache_path(o));
  const Verdict v = classify(f, n, &cache);
  Json reasons = Json::array();
  std::ostringstream out;
  out << "outcome   " << to_string(v.outcome) << '\n' << "criterion " << v.criterion << '\n';
  if (v.d) out << "d         " << *v.d << '\n';
  if (v.k) out << "k         " << *v.k << '\n';
  if (v.j) out << "j         " << *v.j << '\n';
  out << "reasons\n";
  for (const auto& reason : v.reasons) {
    Json data = Json::object();
    for (const auto& [key, value] : reason.data) data[key] = value;
    reasons.push_back(Json{{"code", reason.code}, {"message", reason.message}, {"data", data}});
    out << "  " << std::left << std::setw(34) << reason.code << std::right << reason.message << '\n';
  }
  r.result = Json{{"outcome", to_string(v.outcome)},
                  {"criterion", v.criterion},
                  {"d", v.d ? Json(*v.d) : Json(nullptr)},
                  {"k", v.k ? Json(*v.k) : Json(nullptr)},
                  {"j", v.j ? Json(*v.j) : Json(nullptr)},
                  {"reasons", reasons}};
  r.text = out.str();
  return r;
}

Report run_verify(const Options& o) {
  Report r;
  r.input["budget"] = o.budget;
  const auto checks = verify_paper(parse_budget(o.budget));
  Json list = Json::array();
  std::ostringstream out;
  for (const auto& c : checks) {
    list.push_back(Json{{"id", c.id}, {"title", c.title}, {"status", to_string(c.status)}, {"detail", c.detail}});
    out << "(" << c.id << ") " << std::left << std::setw(8) << to_string(c.status) << std::right << c.title << '\n';
    if (!c.detail.empty()) out << "      " << c.detail << '\n';
    if (c.status == CheckStatus::Fail) r.exit_code = 3;
  }
  r.result = Json{{"checks", list}};
  r.text = out.str();
  return r;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::UnsupportedDegree: return 2;
    case ErrorCode::InvariantViolation: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field toolkit for phi surfaces and APN functions"};
  app.set_version_flag("--version", APNSURF_VERSION);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_poly) {
    sub->add_option("--field", o.field, "Field 2^N or 2^N/0xMOD")->capture_default_str();
    if (with_poly) sub->add_option("--poly", o.poly, "Polynomial, e.g. \"x^57 + a*x^30 + a^2*x^3\"");
    sub->add_flag("--json", o.json, "Emit the JSON report");
  };

  auto* field_cmd = app.add_subcommand("field", "Describe a field");
  add_common(field_cmd, false);

  auto* phi_cmd = app.add_subcommand("phi", "Compute phi of a univariate f");
  add_common(phi_cmd, true);
  phi_cmd->get_option("--poly")->required();

  auto* factor_cmd = app.add_subcommand("factor", "Factor a bivariate or homogeneous trivariate polynomial");
  add_common(factor_cmd, true);
  auto* phi_opt = factor_cmd->add_option("--poly-phi", o.poly_phi, "Use phi_J of the monomial x^J");
  factor_cmd->get_option("--poly")->excludes(phi_opt);
  factor_cmd->add_flag("--absolute", o.absolute, "Decide absolute irreducibility");
  factor_cmd->add_option("--cache", o.cache, "Verdict cache file");

  auto* apn_cmd = app.add_subcommand("apn", "Exhaustive APN scan over GF(2^n)");
  add_common(apn_cmd, true);
  apn_cmd->get_option("--poly")->required();
  apn_cmd->add_option("--range", o.range, "LO..HI")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Apply the non-APN criteria");
  add_common(classify_cmd, true);
  classify_cmd->get_option("--poly")->required();
  classify_cmd->add_option("--n", o.n, "f is considered over GF(2^n); defaults to the field degree");
  classify_cmd->add_option("--cache", o.cache, "Verdict cache file");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Reproduce the Kasami-degree computations");
  verify_cmd->add_option("--budget", o.budget, "default or high")->check(CLI::IsMember({"default", "high"}));
  verify_cmd->add_flag("--json", o.json, "Emit the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*field_cmd) report = run_field(o);
    else if (*phi_cmd) report = run_phi(o);
    else if (*factor_cmd) {
      if (o.poly.empty() && !o.poly_phi) throw Error(ErrorCode::InvalidArgument, "factor needs --poly or --poly-phi");
      report = run_factor(o);
    } else if (*apn_cmd) report = run_apn(o);
    else if (*classify_cmd) report = run_classify(o);
    else report = run_verify(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    Json doc;
    doc["input"] = report.input;
    doc["field"] = field_json(report.field);
    doc["result"] = report.result;
    doc["timing_ms"] = elapsed;
    doc["version"] = APNSURF_VERSION;
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << report.text;
  }
  return report.exit_code;
}
