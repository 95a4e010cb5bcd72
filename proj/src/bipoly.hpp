#pragma once

// Dense bivariate polynomials used by the factorization kernel. F is stored
// as a polynomial in x whose coefficients are polynomials in y.

#include <optional>
#include <vector>

#include "apnsurf/field.hpp"
#include "apnsurf/tripoly.hpp"
#include "apnsurf/unipoly.hpp"

namespace apnsurf::detail {

class BiPoly {
 public:
  explicit BiPoly(Field field) : field_(std::move(field)) {}
  BiPoly(Field field, std::vector<UniPoly> cx);

  /// c(y) as a polynomial free of x.
  static BiPoly in_y(const UniPoly& c);
  /// p(x) as a polynomial free of y.
  static BiPoly in_x(const UniPoly& p);
  static BiPoly constant(const Field& f, Elem c) { return in_y(UniPoly::constant(f, c)); }

  const Field& field() const { return field_; }
  bool is_zero() const { return cx_.empty(); }
  int deg_x() const { return static_cast<int>(cx_.size()) - 1; }
  int deg_y() const;
  int total_degree() const;
  bool is_constant() const { return cx_.size() <= 1 && deg_y() <= 0; }

  /// Coefficient of x^i as a polynomial in y.
  const UniPoly& operator[](std::size_t i) const { return cx_[i]; }
  UniPoly coeff_x(std::size_t i) const { return i < cx_.size() ? cx_[i] : UniPoly(field_); }
  const UniPoly& lc_x() const { return cx_.back(); }
  const std::vector<UniPoly>& coeffs() const { return cx_; }

  /// Graded-lex leading coefficient (x > y).
  Elem grlex_lead() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const UniPoly& c_in_y);
  friend BiPoly operator*(BiPoly a, Elem c);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.field_ == b.field_ && a.cx_ == b.cx_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }
  friend bool operator<(const BiPoly& a, const BiPoly& b);

 private:
  void normalize();

  Field field_;
  std::vector<UniPoly> cx_;
};

BiPoly from_tri(const TriPoly& p);
TriPoly to_tri(const BiPoly& p);

BiPoly monic_grlex(const BiPoly& p);
BiPoly transpose(const BiPoly& p);
BiPoly diff_x(const BiPoly& p);
BiPoly diff_y(const BiPoly& p);
/// F(x, y0) as a polynomial in x.
UniPoly eval_y(const BiPoly& p, Elem y0);
/// F(x, y + c).
BiPoly shift_y(const BiPoly& p, Elem c);
BiPoly map_coeffs(const BiPoly& p, const Embedding& e);
BiPoly frobenius_coeffs(const BiPoly& p, int i);
/// Inverse of map_coeffs; nullopt when a coefficient is outside the subfield.
std::optional<BiPoly> restrict_coeffs(const BiPoly& p, const Embedding& e);

/// gcd of the x-coefficients (a polynomial in y, monic).
UniPoly content_x(const BiPoly& p);
/// Divides every x-coefficient by c(y); c must divide all of them.
BiPoly divide_by_y_poly(const BiPoly& p, const UniPoly& c);
/// Primitive part with respect to x.
BiPoly primitive_x(const BiPoly& p);

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b);
/// Square root when every exponent is even.
BiPoly sqrt_bivariate(const BiPoly& p);
/// Primitive PRS gcd in x over GF(q)[y]; normalized grlex-monic.
BiPoly gcd(const BiPoly& a, const BiPoly& b);

}  // namespace apnsurf::detail
