#pragma once

// Random bivariate polynomials with an irreducibility certificate: g is
// primitive in x and some specialization g(x, y0) keeps deg_x and is
// irreducible, so any splitting g = A*B would survive the specialization.

#include <algorithm>
#include <random>
#include <vector>

#include "apnsurf/factor.hpp"
#include "apnsurf/unipoly.hpp"

namespace testing_support {

using namespace apnsurf;

inline std::vector<UniPoly> x_coefficients(const TriPoly& g) {
  const int dx = std::max(g.degree_in(0), 0);
  const int dy = std::max(g.degree_in(1), 0);
  std::vector<std::vector<Elem>> raw(dx + 1, std::vector<Elem>(dy + 1, 0));
  for (const auto& t : g.terms()) raw[t.mono.x()][t.mono.y()] = t.coeff;
  std::vector<UniPoly> out;
  for (auto& r : raw) out.emplace_back(g.field(), r);
  return out;
}

inline bool certified_irreducible(const TriPoly& g) {
  const auto cx = x_coefficients(g);
  if (cx.size() < 2) return false;
  UniPoly content(g.field());
  for (const auto& c : cx) content = gcd(content, c);
  if (content.degree() != 0) return false;
  const std::uint64_t q = g.field().size();
  for (std::uint64_t y0 = 0; y0 < q; ++y0) {
    std::vector<Elem> v;
    for (const auto& c : cx) v.push_back(eval(c, static_cast<Elem>(y0)));
    const UniPoly s(g.field(), v);
    if (s.degree() == static_cast<int>(cx.size()) - 1 && is_irreducible(s)) return true;
  }
  return false;
}

inline TriPoly random_bivariate(const Field& f, int degree, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (int d = 0; d <= degree; ++d) {
    for (int ex = 0; ex <= d; ++ex) {
      if (rng() % 3 == 0) t.push_back({Monomial(ex, d - ex, 0), static_cast<Elem>(rng() % f.size())});
    }
  }
  t.push_back({Monomial(static_cast<unsigned>(rng() % (degree + 1)), 0, 0), 1});
  t.push_back({Monomial(static_cast<unsigned>(rng() % degree), 0, 0), 0});
  return TriPoly(f, t);
}

/// A certified irreducible factor of total degree in [1, max_degree], monic.
inline TriPoly random_irreducible(const Field& f, int max_degree, std::mt19937_64& rng) {
  for (;;) {
    const int degree = 1 + static_cast<int>(rng() % max_degree);
    const TriPoly g = random_bivariate(f, degree, rng);
    if (g.total_degree() >= 1 && certified_irreducible(g)) return monic(g);
  }
}

struct Product {
  TriPoly poly;
  std::vector<PolyFactor> factors;  // sorted canonically
};

/// Product of certified irreducibles with total degree at most max_degree.
inline Product random_product(const Field& f, int max_degree, std::mt19937_64& rng) {
  Product p{TriPoly::constant(f, 1), {}};
  int budget = max_degree;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count && budget > 0; ++i) {
    const TriPoly g = random_irreducible(f, std::min(budget, 4), rng);
    const int m = (budget >= 2 * g.total_degree() && rng() % 4 == 0) ? 2 : 1;
    if (g.total_degree() * m > budget) continue;
    budget -= g.total_degree() * m;
    p.poly = p.poly * pow(g, m);
    auto it = std::find_if(p.factors.begin(), p.factors.end(), [&](const PolyFactor& pf) { return pf.poly == g; });
    if (it != p.factors.end()) {
      it->multiplicity += m;
    } else {
      p.factors.push_back({g, m});
    }
  }
  if (p.factors.empty()) {
    const TriPoly g = random_irreducible(f, 2, rng);
    p.poly = g;
    p.factors.push_back({g, 1});
  }
  std::sort(p.factors.begin(), p.factors.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.poly < b.poly; });
  return p;
}

inline bool same_factors(const std::vector<PolyFactor>& a, const std::vector<PolyFactor>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].poly != b[i].poly || a[i].multiplicity != b[i].multiplicity) return false;
  }
  return true;
}

}  // namespace testing_support
