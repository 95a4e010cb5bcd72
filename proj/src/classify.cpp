#include "apnsurf/classify.hpp"

#include <fstream>
#include <numeric>

#include <json.hpp>

#include "apnsurf/phi.hpp"
#include "apnsurf/text.hpp"

namespace apnsurf {

namespace {

bool is_power_of_two(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// phi_j == 0 exactly for j in {0, 1} and the powers of two.
bool phi_vanishes(std::uint64_t j) { return j < 2 || is_power_of_two(j); }

Reason reason(std::string code, std::string message, std::map<std::string, std::string> data = {}) {
  return {std::move(code), std::move(message), std::move(data)};
}

Verdict inconclusive(std::string criterion, std::vector<Reason> reasons) {
  Verdict v;
  v.criterion = std::move(criterion);
  v.reasons = std::move(reasons);
  return v;
}

std::uint64_t kasami_number(int k) {
  const std::uint64_t t = std::uint64_t{1} << k;
  return t * t - t + 1;
}

/// 2^(2k-1) - 2^(k-1) + 1.
std::uint64_t kasami_main_bound(int k) { return (std::uint64_t{1} << (2 * k - 1)) - (std::uint64_t{1} << (k - 1)) + 1; }

/// Kasami parameter k >= 2 of deg f, with a reason when it does not apply.
std::optional<int> kasami_degree(const UniPoly& f, std::vector<Reason>& reasons) {
  const int d = f.degree();
  const ExponentClass c = classify_exponent(d < 0 ? 0 : static_cast<std::uint64_t>(d));
  if (c.kind != ExponentClass::Kind::KasamiWelch || c.param < 2) {
    reasons.push_back(reason("degree-not-kasami", "deg f = " + std::to_string(d) + " is not 4^k-2^k+1 with k >= 2",
                             {{"d", std::to_string(d)}, {"class", c.to_string()}}));
    return std::nullopt;
  }
  if (f.lead() != 1) {
    reasons.push_back(reason("not-monic", "leading coefficient " + format_elem(f.lead()) + " is not 1"));
    return std::nullopt;
  }
  return c.param;
}

/// Degree of g = f - x^d, or -1 when g = 0.
int degree_of_g(const UniPoly& f) {
  for (int j = f.degree() - 1; j >= 0; --j) {
    if (f[j] != 0) return j;
  }
  return -1;
}

}  // namespace

std::string ExponentClass::to_string() const {
  switch (kind) {
    case Kind::Gold: return "Gold(" + std::to_string(param) + ")";
    case Kind::KasamiWelch: return "KasamiWelch(" + std::to_string(param) + ")";
    case Kind::Other: break;
  }
  return "Other";
}

ExponentClass classify_exponent(std::uint64_t d) {
  if (d >= 3 && is_power_of_two(d - 1)) {
    int i = 0;
    while ((std::uint64_t{1} << i) != d - 1) ++i;
    return {ExponentClass::Kind::Gold, i};
  }
  for (int k = 1; k < 32; ++k) {
    const std::uint64_t v = kasami_number(k);
    if (v == d) return {ExponentClass::Kind::KasamiWelch, k};
    if (v > d) break;
  }
  return {};
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::NotApnForAllLargeN: return "NotApnForAllLargeN";
    case Outcome::BoundaryNotApnForAllLargeN: return "BoundaryNotApnForAllLargeN";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

// ---------------------------------------------------------------------------

VerdictCache VerdictCache::load(const std::string& path) {
  VerdictCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      const std::string kind = j.at("verdict").get<std::string>();
      Entry e;
      if (kind == to_string(AbsIrredKind::AbsolutelyIrreducible)) {
        e.kind = AbsIrredKind::AbsolutelyIrreducible;
      } else if (kind == to_string(AbsIrredKind::ReducibleOverBase)) {
        e.kind = AbsIrredKind::ReducibleOverBase;
      } else if (kind == to_string(AbsIrredKind::SplitsOverExtension)) {
        e.kind = AbsIrredKind::SplitsOverExtension;
      } else {
        throw Error(ErrorCode::SyntaxError, path + ":" + std::to_string(lineno) + ": unknown verdict '" + kind + "'");
      }
      e.r = j.at("r").get<int>();
      e.factor_count = j.at("factor_count").get<int>();
      cache.insert(j.at("j").get<unsigned>(), e);
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::SyntaxError, path + ":" + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return cache;
}

std::optional<VerdictCache::Entry> VerdictCache::lookup(unsigned j) const {
  auto it = entries_.find(j);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string VerdictCache::to_line(unsigned j, const Entry& e) {
  nlohmann::ordered_json o;
  o["j"] = j;
  o["verdict"] = to_string(e.kind);
  o["r"] = e.r;
  o["factor_count"] = e.factor_count;
  return o.dump();
}

void VerdictCache::append(const std::string& path, unsigned j, const Entry& e) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write verdict cache " + path);
  out << to_line(j, e) << '\n';
}

std::optional<VerdictCache::Entry> phi_verdict(unsigned j, const VerdictCache* cache) {
  if (phi_vanishes(j) || j == 3) return std::nullopt;
  if (cache) {
    if (auto e = cache->lookup(j)) return e;
  }
  const AbsIrredVerdict v = absolute_irreducibility(phi_mono(j));
  VerdictCache::Entry e;
  e.kind = v.kind;
  e.r = v.r;
  e.factor_count = v.factorization ? v.factorization->count_with_multiplicity() : 1;
  return e;
}

// ---------------------------------------------------------------------------

Verdict check_odd_degree(const UniPoly& f) {
  const int d = f.degree();
  const std::map<std::string, std::string> data{{"d", std::to_string(d)}};
  if (d < 3) return inconclusive("odd-degree", {reason("degree-too-small", "deg f < 3", data)});
  if (d % 2 == 0) return inconclusive("odd-degree", {reason("degree-even", "deg f = " + std::to_string(d) + " is even", data)});
  const ExponentClass c = classify_exponent(d);
  if (c.kind != ExponentClass::Kind::Other) {
    return inconclusive("odd-degree", {reason("degree-exceptional", "deg f = " + std::to_string(d) + " is " + c.to_string(),
                                              {{"d", std::to_string(d)}, {"class", c.to_string()}})});
  }
  Verdict v;
  v.outcome = Outcome::NotApnForAllLargeN;
  v.criterion = "odd-degree";
  v.d = d;
  v.reasons.push_back(reason("degree-odd-nonexceptional",
                             "deg f = " + std::to_string(d) + " is odd and neither Gold nor Kasami-Welch",
                             {{"d", std::to_string(d)}, {"class", c.to_string()}}));
  return v;
}

Verdict check_even_2e(const UniPoly& f) {
  const int d = f.degree();
  const std::map<std::string, std::string> data{{"d", std::to_string(d)}};
  if (d < 2 || d % 2 != 0 || (d / 2) % 2 == 0) {
    return inconclusive("even-2e", {reason("degree-not-2e", "deg f = " + std::to_string(d) + " is not 2e with e odd", data)});
  }
  for (int j = d - 1; j >= 1; j -= 2) {
    if (f[j] == 0) continue;
    Verdict v;
    v.outcome = Outcome::NotApnForAllLargeN;
    v.criterion = "even-2e";
    v.d = d;
    v.j = j;
    v.reasons.push_back(reason("degree-2e", "deg f = 2*" + std::to_string(d / 2) + " with odd e", data));
    v.reasons.push_back(reason("odd-term", "x^" + std::to_string(j) + " has coefficient " + format_elem(f[j]),
                               {{"j", std::to_string(j)}, {"coeff", format_elem(f[j])}}));
    return v;
  }
  return inconclusive("even-2e", {reason("no-odd-term", "f has no term of odd degree", data)});
}

Verdict check_kasami_main(const UniPoly& f, const VerdictCache* cache) {
  std::vector<Reason> reasons;
  const auto k = kasami_degree(f, reasons);
  if (!k) return inconclusive("kasami-main", std::move(reasons));
  const std::uint64_t bound = kasami_main_bound(*k);
  const int dg = degree_of_g(f);
  const std::map<std::string, std::string> bound_data{{"deg_g", std::to_string(dg)}, {"bound", std::to_string(bound)}};
  if (dg < 0) {
    reasons.push_back(reason("no-admissible-j", "g = 0", bound_data));
    return inconclusive("kasami-main", std::move(reasons));
  }
  if (static_cast<std::uint64_t>(dg) > bound) {
    reasons.push_back(reason("deg-g-exceeds-bound",
                             "deg g = " + std::to_string(dg) + " > " + std::to_string(bound), bound_data));
    return inconclusive("kasami-main", std::move(reasons));
  }
  reasons.push_back(reason("deg-g-bound", "deg g = " + std::to_string(dg) + " <= " + std::to_string(bound), bound_data));
  for (int j = 0; j <= dg; ++j) {
    if (f[j] == 0) continue;
    const std::string js = std::to_string(j);
    if (phi_vanishes(j)) {
      reasons.push_back(reason("phi-j-vanishes", "phi_" + js + " = 0", {{"j", js}}));
      continue;
    }
    if (j == 3) {
      reasons.push_back(reason("phi-j-constant", "phi_3 = 1 has no component", {{"j", js}}));
      continue;
    }
    std::optional<VerdictCache::Entry> e;
    try {
      e = phi_verdict(j, cache);
    } catch (const Error& ex) {
      if (ex.code() != ErrorCode::UnsupportedDegree) throw;
      reasons.push_back(reason("phi-j-undecided", "phi_" + js + ": " + ex.what(), {{"j", js}}));
      continue;
    }
    const std::map<std::string, std::string> data{
        {"j", js}, {"verdict", to_string(e->kind)}, {"r", std::to_string(e->r)}};
    if (e->kind == AbsIrredKind::AbsolutelyIrreducible) {
      reasons.push_back(reason("phi-j-absolutely-irreducible", "phi_" + js + " is absolutely irreducible", data));
      Verdict v;
      v.outcome = Outcome::NotApnForAllLargeN;
      v.criterion = "kasami-main";
      v.reasons = std::move(reasons);
      v.d = f.degree();
      v.k = *k;
      v.j = static_cast<unsigned>(j);
      return v;
    }
    reasons.push_back(reason("phi-j-not-absolutely-irreducible",
                             "phi_" + js + " is " + to_string(e->kind) +
                                 (e->kind == AbsIrredKind::SplitsOverExtension ? " (r = " + std::to_string(e->r) + ")" : ""),
                             data));
  }
  Verdict v = inconclusive("kasami-main", std::move(reasons));
  v.d = f.degree();
  v.k = *k;
  return v;
}

Verdict check_kasami_boundary(const UniPoly& f, int n) {
  std::vector<Reason> reasons;
  const auto k = kasami_degree(f, reasons);
  if (!k) return inconclusive("kasami-boundary", std::move(reasons));
  const std::string ks = std::to_string(*k);
  const std::string ns = std::to_string(n);
  if (*k < 3 || *k % 2 == 0) {
    reasons.push_back(reason("k-not-odd-ge-3", "k = " + ks + " is not odd and >= 3", {{"k", ks}}));
    return inconclusive("kasami-boundary", std::move(reasons));
  }
  if (n < 1 || n % f.field().degree() != 0) {
    reasons.push_back(reason("field-not-contained", f.field().to_string() + " is not a subfield of GF(2^" + ns + ")",
                             {{"n", ns}}));
    return inconclusive("kasami-boundary", std::move(reasons));
  }
  if (std::gcd(*k, n) != 1) {
    reasons.push_back(reason("gcd-k-n", "gcd(k, n) = " + std::to_string(std::gcd(*k, n)) + " != 1", {{"k", ks}, {"n", ns}}));
    return inconclusive("kasami-boundary", std::move(reasons));
  }
  const std::uint64_t top = kasami_main_bound(*k) + 1;  // s + 3
  const int dg = degree_of_g(f);
  const std::map<std::string, std::string> deg_data{{"deg_g", std::to_string(dg)}, {"boundary", std::to_string(top)}};
  if (dg < 0 || static_cast<std::uint64_t>(dg) != top) {
    reasons.push_back(reason("deg-g-not-boundary", "deg g = " + std::to_string(dg) + " != " + std::to_string(top), deg_data));
    return inconclusive("kasami-boundary", std::move(reasons));
  }
  reasons.push_back(reason("gcd-k-n", "gcd(k, n) = 1", {{"k", ks}, {"n", ns}}));
  reasons.push_back(reason("deg-g-boundary", "deg g = " + std::to_string(dg), deg_data));

  // Terms invisible to phi (exponents 0, 1 and powers of two) do not count.
  const Field& fld = f.field();
  const Elem a_top = f[static_cast<std::size_t>(top)];
  std::vector<int> extra;
  for (int j = 0; j < dg; ++j) {
    if (f[j] != 0 && j != 3 && !phi_vanishes(j)) extra.push_back(j);
  }
  Verdict v;
  v.criterion = "kasami-boundary";
  v.d = f.degree();
  v.k = *k;
  v.reasons = std::move(reasons);
  if (!extra.empty()) {
    std::string list;
    for (int j : extra) list += (list.empty() ? "" : ",") + std::to_string(j);
    v.outcome = Outcome::NotApnForAllLargeN;
    v.reasons.push_back(reason("boundary-general-form", "g has phi-visible terms outside {3, " + std::to_string(top) + "}: " + list,
                               {{"extra", list}}));
    return v;
  }
  const Elem a3 = f[3];
  const Elem sq = fld.sqr(a_top);
  const std::map<std::string, std::string> coeff_data{{"a_top", format_elem(a_top)}, {"a_3", format_elem(a3)}};
  if (a3 != sq) {
    v.outcome = Outcome::NotApnForAllLargeN;
    v.reasons.push_back(reason("boundary-general-form", "a_3 = " + format_elem(a3) + " != a_" + std::to_string(top) + "^2 = " + format_elem(sq),
                               coeff_data));
    return v;
  }
  v.outcome = Outcome::BoundaryNotApnForAllLargeN;
  v.reasons.push_back(reason("boundary-special-form", "g = a*x^" + std::to_string(top) + " + a^2*x^3 up to phi-invisible terms, a = " +
                                                          format_elem(a_top),
                             coeff_data));
  return v;
}

Verdict classify(const UniPoly& f, int n, const VerdictCache* cache) {
  if (n < 1 || n % f.field().degree() != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "n = " + std::to_string(n) + " is not a multiple of the coefficient field degree " +
                    std::to_string(f.field().degree()));
  }
  const int d = f.degree();
  bool degenerate = d < 3;
  if (!degenerate) {
    degenerate = true;
    for (int j = 0; j <= d; ++j) degenerate = degenerate && (f[j] == 0 || phi_vanishes(j));
  }
  if (degenerate) {
    Verdict v = inconclusive("none", {reason("degenerate", "phi(f) = 0: deg f < 3 or only exponents 0, 1 and powers of two",
                                             {{"d", std::to_string(d)}})});
    if (d >= 0) v.d = d;
    return v;
  }
  {
    bool pure = true;
    for (int j = 0; j < d; ++j) pure = pure && f[j] == 0;
    const ExponentClass c = classify_exponent(d);
    if (pure && c.kind != ExponentClass::Kind::Other) {
      Verdict v = inconclusive("exceptional-monomial",
                               {reason("exceptional-exponent",
                                       "exceptional exponent " + c.to_string() +
                                           ": conjectured APN-infinitely-often family",
                                       {{"d", std::to_string(d)}, {"class", c.to_string()}})});
      v.d = d;
      if (c.kind == ExponentClass::Kind::KasamiWelch) v.k = c.param;
      return v;
    }
  }
  std::vector<Reason> all;
  for (auto check : {+[](const UniPoly& g, int, const VerdictCache*) { return check_odd_degree(g); },
                     +[](const UniPoly& g, int, const VerdictCache*) { return check_even_2e(g); },
                     +[](const UniPoly& g, int, const VerdictCache* c) { return check_kasami_main(g, c); },
                     +[](const UniPoly& g, int m, const VerdictCache*) { return check_kasami_boundary(g, m); }}) {
    Verdict v = check(f, n, cache);
    if (v.outcome != Outcome::Inconclusive) return v;
    for (auto& r : v.reasons) all.push_back(std::move(r));
  }
  if (d > 0 && d % 4 == 0) {
    all.push_back(reason("out-of-scope", "degree-4e/degree-12 criteria out of scope", {{"d", std::to_string(d)}}));
  }
  Verdict v = inconclusive("none", std::move(all));
  if (d >= 0) v.d = d;
  return v;
}

}  // namespace apnsurf
