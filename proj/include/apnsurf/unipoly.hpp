#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apnsurf/field.hpp"

namespace apnsurf {

/// Dense univariate polynomial over GF(2^n); coefficient i multiplies x^i.
/// The coefficient vector never has trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Elem> coeffs);

  static UniPoly constant(const Field& f, Elem c) { return UniPoly(f, {c}); }
  static UniPoly monomial(const Field& f, Elem c, std::size_t e);
  static UniPoly x(const Field& f) { return monomial(f, 1, 1); }

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::span<const Elem> coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator*=(Elem c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, Elem c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  /// Orders by degree, then coefficients from the top; used for canonical sorting.
  friend bool operator<(const UniPoly& a, const UniPoly& b);

 private:
  void normalize();

  Field field_;
  std::vector<Elem> coeffs_;
};

/// (quotient, remainder); throws DivisionByZero when `b` is zero.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
/// Quotient; throws InvariantViolation when the division is not exact.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero when both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Returns g = gcd(a, b) monic together with s, t such that s*a + t*b = g.
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& p, std::uint64_t e);
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m);
UniPoly monic(const UniPoly& p);
UniPoly derivative(const UniPoly& p);
/// Coefficient-wise square root of a polynomial with only even exponents.
UniPoly sqrt_poly(const UniPoly& p);
/// Composition p(x + c).
UniPoly taylor_shift(const UniPoly& p, Elem c);
UniPoly map_coeffs(const UniPoly& p, const Embedding& e);

Elem eval(const UniPoly& p, Elem a);
/// Evaluates at a point in p's field or in a field it embeds into.
FieldElement eval(const UniPoly& p, const FieldElement& a);

/// Rabin's criterion: x^(q^d) = x mod p and gcd(x^(q^(d/r)) - x, p) = 1 for
/// each prime r | d. Requires degree >= 1.
bool is_irreducible(const UniPoly& p);

struct UniFactor {
  UniPoly poly;
  int multiplicity;
};

/// unit * prod(factor^multiplicity) == input; factors monic irreducible and
/// sorted canonically.
struct UniFactorization {
  Elem unit = 0;
  std::vector<UniFactor> factors;
};

/// Squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus
/// equal-degree splitting via trace maps. Randomness is seeded from the input
/// so results are reproducible.
UniFactorization factor(const UniPoly& p);

/// Squarefree decomposition only: pairs (w_i, i) with p = lead * prod w_i^i.
std::vector<UniFactor> squarefree_decomposition(const UniPoly& p);

}  // namespace apnsurf
