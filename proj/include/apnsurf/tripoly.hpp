#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "apnsurf/field.hpp"
#include "apnsurf/unipoly.hpp"

namespace apnsurf {

/// Exponent triple (x, y, z), packed so that integer order is graded
/// lexicographic order with x > y > z. Each exponent is limited to 16 bits.
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(unsigned ex, unsigned ey, unsigned ez);
  static constexpr Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

  unsigned x() const { return static_cast<unsigned>((key_ >> 32) & 0xFFFF); }
  unsigned y() const { return static_cast<unsigned>((key_ >> 16) & 0xFFFF); }
  unsigned z() const { return static_cast<unsigned>(key_ & 0xFFFF); }
  unsigned exp(int var) const { return var == 0 ? x() : var == 1 ? y() : z(); }
  unsigned degree() const { return static_cast<unsigned>(key_ >> 48); }
  std::uint64_t key() const { return key_; }

  bool divides(const Monomial& o) const { return x() <= o.x() && y() <= o.y() && z() <= o.z(); }

  friend Monomial operator*(Monomial a, Monomial b);
  friend Monomial operator/(Monomial a, Monomial b) { return from_key(a.key_ - b.key_); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::uint64_t key_ = 0;
};

struct Term {
  Monomial mono;
  Elem coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in x, y, z over GF(2^n). Terms are kept sorted in
/// descending graded-lex order and never hold a zero coefficient.
/// Bivariate polynomials are the z-free case.
class TriPoly {
 public:
  explicit TriPoly(Field field) : field_(std::move(field)) {}
  /// Sums duplicate monomials.
  TriPoly(Field field, std::vector<Term> terms);
  static TriPoly constant(const Field& f, Elem c);
  static TriPoly monomial(const Field& f, Elem c, Monomial m);
  static TriPoly var(const Field& f, int index);
  static TriPoly x(const Field& f) { return var(f, 0); }
  static TriPoly y(const Field& f) { return var(f, 1); }
  static TriPoly z(const Field& f) { return var(f, 2); }
  /// p(v) with v in {0: x, 1: y, 2: z}.
  static TriPoly from_uni(const UniPoly& p, int var = 0);

  const Field& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  /// Leading term in graded-lex order; undefined for zero.
  const Term& lead() const { return terms_.front(); }
  Elem coeff(Monomial m) const;

  /// -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree()); }
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || total_degree() == 0; }

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator*=(Elem c);
  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(TriPoly a, Elem c) { return a *= c; }
  friend bool operator==(const TriPoly& a, const TriPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }
  /// Canonical order: total degree, then term sequence.
  friend bool operator<(const TriPoly& a, const TriPoly& b);

 private:
  Field field_;
  std::vector<Term> terms_;
};

TriPoly pow(const TriPoly& p, std::uint64_t e);
/// Scales so the graded-lex leading coefficient is 1.
TriPoly monic(const TriPoly& p);

/// Q with Q * divisor == numerator, by leading-term reduction in graded-lex
/// order; nullopt when the division is not exact. Throws DivisionByZero for a
/// zero divisor.
std::optional<TriPoly> exact_quotient(const TriPoly& numerator, const TriPoly& divisor);

/// Total degree -> homogeneous part; only degrees that occur are present.
using HomogeneousDecomposition = std::map<int, TriPoly>;
HomogeneousDecomposition homogeneous_parts(const TriPoly& p);

/// Value or keep, per variable. Values may live in an extension of the
/// polynomial's field.
struct Assignment {
  std::optional<FieldElement> x, y, z;
  const std::optional<FieldElement>& operator[](int var) const { return var == 0 ? x : var == 1 ? y : z; }
};

/// Substitutes the assigned values; kept variables stay in place. The result
/// lives in the values' field.
TriPoly specialize(const TriPoly& p, const Assignment& a);
/// As specialize, but exactly one variable must be kept; returns a
/// polynomial in that variable.
UniPoly specialize_univariate(const TriPoly& p, const Assignment& a);
FieldElement evaluate(const TriPoly& p, const FieldElement& x, const FieldElement& y, const FieldElement& z);

TriPoly map_coeffs(const TriPoly& p, const Embedding& e);
/// c -> c^(2^i) on every coefficient.
TriPoly frobenius_coeffs(const TriPoly& p, int i);
/// Renames variables: variable v becomes perm[v].
TriPoly permute(const TriPoly& p, const std::array<int, 3>& perm);

/// (x+y)(y+z)(z+x).
TriPoly e3(const Field& f);

}  // namespace apnsurf
