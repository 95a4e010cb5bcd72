#include "apnsurf/verify.hpp"

#include <functional>

#include "apnsurf/phi.hpp"
#include "apnsurf/text.hpp"

namespace apnsurf {

namespace {

CheckResult run(std::string id, std::string title, const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult r{std::move(id), std::move(title), CheckStatus::Fail, {}};
  try {
    auto [ok, detail] = body();
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = std::move(detail);
  } catch (const Error& e) {
    r.detail = e.what();
  }
  return r;
}

std::pair<bool, std::string> kasami_sets() {
  std::string detail;
  for (int k : {2, 3}) {
    const KasamiFactorSet set = kasami_phi_factors(k);
    int absolute = 0;
    for (const auto& [alpha, p] : set.factors) {
      if (absolute_irreducibility(p).kind == AbsIrredKind::AbsolutelyIrreducible) ++absolute;
    }
    detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) + ": " +
              std::to_string(set.factors.size()) + " factors of degree " + std::to_string((1 << k) + 1) + ", " +
              std::to_string(absolute) + " absolutely irreducible";
    if (absolute != static_cast<int>(set.factors.size())) return {false, detail};
  }
  return {true, detail};
}

std::pair<bool, std::string> double_identity() {
  for (unsigned j = 0; j <= 32; ++j) {
    if (!double_identity_check(j)) return {false, "fails at j=" + std::to_string(j)};
  }
  return {true, "phi_{2j} = phi_j^2*e3 for 0 <= j <= 32"};
}

std::pair<bool, std::string> ninth_power_inequality() {
  const Field g2 = Field::gf2();
  const UniPoly lhs = pow(parse_poly("1+x+x^3", g2), 9) + pow(parse_poly("1+x^2+x^3", g2), 9);
  const UniPoly rhs = specialize_univariate(
      phi_mono(30), Assignment{std::nullopt, FieldElement::zero(g2), FieldElement::one(g2)});
  int differing = 0;
  for (int i = 0; i <= std::max(lhs.degree(), rhs.degree()); ++i) {
    if (lhs[i] != rhs[i]) ++differing;
  }
  return {lhs != rhs, "sum of ninth powers: " + format(lhs) + "; phi_30(x,0,1): " + format(rhs) + "; " +
                          std::to_string(differing) + " coefficients differ"};
}

std::pair<bool, std::string> counterexample_division() {
  const KasamiFactorSet small = kasami_phi_factors(2);
  const Field f16 = Field::make(4);
  const TriPoly phi = map_coeffs(phi_mono(241), embedding(Field::gf2(), f16));
  bool all = true;
  std::string detail;
  for (const auto& [alpha, p] : small.factors) {
    const bool divides = tri_divides(p, phi);
    all = all && divides;
    detail += (detail.empty() ? "" : "; ") + std::string("p_") + format_elem(alpha) + " (degree 5) " +
              (divides ? "divides" : "does not divide") + " phi_241";
  }
  // The degree-17 factors of phi_241 indexed by the image of GF(4) in GF(16).
  const KasamiFactorSet big = kasami_phi_factors(4, Budget::High);
  const Embedding& e = embedding(small.field, f16);
  for (const auto& [alpha, p] : small.factors) {
    const Elem image = e.apply(alpha);
    for (const auto& [beta, q] : big.factors) {
      if (beta == image) {
        detail += "; degree-17 factor at alpha=" + format_elem(image) + (tri_divides(q, phi) ? " divides" : " does not divide");
      }
    }
  }
  return {all, detail};
}

std::pair<bool, std::string> boundary_irreducible() {
  const Field f8 = Field::make(3);
  const PhiSurface s = phi_of(parse_poly("x^57 + a*x^30 + a^2*x^3", f8));
  const auto cert = irreducible_by_sections(s.phi);
  if (!cert) return {false, "no certifying plane section among the first 64"};
  return {true, "degree-" + std::to_string(*s.degree) + " phi irreducible over GF(8): section z = " + format_elem(cert->u) +
                    "*x + " + format_elem(cert->v) + "*y + " + format_elem(cert->w) + " is irreducible of full degree"};
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

std::vector<CheckResult> verify_paper(Budget budget) {
  std::vector<CheckResult> out;
  out.push_back(run("a", "Kasami factor sets k=2,3", kasami_sets));
  out.push_back(run("b", "phi_{2j} = phi_j^2 * e3, j <= 32", double_identity));
  out.push_back(run("c", "(1+x+x^3)^9 + (1+x^2+x^3)^9 != phi_30(x,0,1)", ninth_power_inequality));
  const char* d_title = "p_w, p_{w^2} from GF(4) divide phi_241 over GF(16)";
  const char* e_title = "phi of x^57 + a*x^30 + a^2*x^3 irreducible over GF(8)";
  if (budget == Budget::High) {
    out.push_back(run("d", d_title, counterexample_division));
    out.push_back(run("e", e_title, boundary_irreducible));
  } else {
    out.push_back({"d", d_title, CheckStatus::Skipped, "needs --budget high"});
    out.push_back({"e", e_title, CheckStatus::Skipped, "needs --budget high"});
  }
  return out;
}

}  // namespace apnsurf
