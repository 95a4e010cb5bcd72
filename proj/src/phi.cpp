#include "apnsurf/phi.hpp"

#include <array>
#include <mutex>
#include <unordered_map>

namespace apnsurf {

namespace {

// (x+y+z)^j over GF(2) has coefficient 1 exactly on x^a y^b z^c with a, b, c
// pairwise disjoint bit masks covering j (Lucas).
void add_trinomial_power(unsigned j, Elem c, std::unordered_map<std::uint64_t, Elem>& acc) {
  for (unsigned a = j;; a = (a - 1) & j) {
    const unsigned rest = j & ~a;
    for (unsigned b = rest;; b = (b - 1) & rest) {
      acc[Monomial(a, b, rest & ~b).key()] ^= c;
      if (b == 0) break;
    }
    if (a == 0) break;
  }
}

}  // namespace

TriPoly phi_numerator(const UniPoly& f) {
  std::unordered_map<std::uint64_t, Elem> acc;
  for (int j = 0; j <= f.degree(); ++j) {
    const Elem c = f[j];
    if (c == 0) continue;
    const auto e = static_cast<unsigned>(j);
    acc[Monomial(e, 0, 0).key()] ^= c;
    acc[Monomial(0, e, 0).key()] ^= c;
    acc[Monomial(0, 0, e).key()] ^= c;
    add_trinomial_power(e, c, acc);
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [k, c] : acc) {
    if (c != 0) terms.push_back({Monomial::from_key(k), c});
  }
  return TriPoly(f.field(), std::move(terms));
}

PhiSurface phi_of(const UniPoly& f) {
  auto q = exact_quotient(phi_numerator(f), e3(f.field()));
  if (!q) throw Error(ErrorCode::InvariantViolation, "numerator of phi is not divisible by e3");
  std::optional<int> degree;
  if (!q->is_zero()) degree = q->total_degree();
  return PhiSurface{f, std::move(*q), degree};
}

TriPoly phi_mono(unsigned j) {
  static std::mutex mu;
  static std::unordered_map<unsigned, TriPoly> cache;
  if (j <= 256) {
    std::lock_guard lock(mu);
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
  }
  const Field gf2 = Field::gf2();
  TriPoly phi = phi_of(UniPoly::monomial(gf2, 1, j)).phi;
  if (j <= 256) {
    std::lock_guard lock(mu);
    cache.emplace(j, phi);
  }
  return phi;
}

bool double_identity_check(unsigned j) {
  const TriPoly lhs = phi_mono(2 * j);
  const TriPoly base = phi_mono(j);
  return lhs == base * base * e3(Field::gf2());
}

}  // namespace apnsurf
