#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apnsurf/error.hpp"

namespace apnsurf {

/// Raw polynomial-basis coordinates of a GF(2^n) element: bit i is the
/// coefficient of x^i. Only meaningful together with a Field.
using Elem = std::uint32_t;

namespace detail {
struct FieldData;
}

/// GF(2^n), 1 <= n <= 32, given by a monic irreducible modulus over GF(2).
///
/// Field is a cheap handle; instances describing the same (n, modulus) share
/// their lookup tables. For n <= 16 multiplication goes through log/exp
/// tables, larger fields use carry-less multiply and reduce.
class Field {
 public:
  /// Validates `modulus` (bit i = coefficient of x^i) or picks the default:
  /// the smallest irreducible with constant term 1.
  static Field make(int n, std::optional<std::uint64_t> modulus = std::nullopt);
  static Field gf2() { return make(1); }

  static std::uint64_t default_modulus(int n);

  int degree() const;
  std::uint64_t modulus() const;
  /// 2^n.
  std::uint64_t size() const { return std::uint64_t{1} << degree(); }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^(2^i).
  Elem frobenius(Elem a, int i) const;
  /// Unique square root (char 2): a^(2^(n-1)).
  Elem sqrt(Elem a) const { return frobenius(a, degree() - 1); }

  /// The polynomial-basis element x (equals 1 in GF(2)).
  Elem generator() const;
  /// A generator of the multiplicative group.
  Elem primitive() const;

  bool contains(Elem a) const { return degree() == 32 || (a >> degree()) == 0; }
  /// a^(2^m) == a; throws NotASubfield unless m divides n.
  bool in_subfield(Elem a, int m) const;
  /// Smallest m | n with a in GF(2^m).
  int subfield_degree(Elem a) const;

  /// "2^n/0xMOD".
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.data_ == b.data_ || (a.degree() == b.degree() && a.modulus() == b.modulus());
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

void require_same_field(const Field& a, const Field& b);

/// Checked element value: carries its field and rejects mixed arithmetic.
class FieldElement {
 public:
  FieldElement(Field field, Elem bits);
  static FieldElement zero(const Field& f) { return {f, 0}; }
  static FieldElement one(const Field& f) { return {f, 1}; }

  const Field& field() const { return field_; }
  Elem bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius(int i) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.bits_ == b.bits_ && a.field_ == b.field_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

 private:
  Field field_;
  Elem bits_;
};

/// All 2^n elements in increasing bit order, starting at 0.
std::vector<FieldElement> enumerate(const Field& f);

/// Injective ring homomorphism GF(2^m) -> GF(2^n), m | n, fixed by sending
/// the source generator x to the numerically smallest root of the source
/// modulus in the target.
class Embedding {
 public:
  Embedding(const Field& from, const Field& to);

  const Field& from() const { return from_; }
  const Field& to() const { return to_; }

  Elem apply(Elem a) const;
  FieldElement operator()(const FieldElement& a) const;
  /// Preimage of `b`, if b lies in the image.
  std::optional<Elem> restrict(Elem b) const;

 private:
  Field from_;
  Field to_;
  std::vector<Elem> images_;   // image of x^i
  std::vector<Elem> pivots_;   // reduced basis of the image (GF(2)-linear)
  std::vector<Elem> pre_;      // preimage of each reduced basis row
};

/// Cached embedding between a field pair; throws NotASubfield when the source
/// degree does not divide the target degree.
const Embedding& embedding(const Field& from, const Field& to);

/// Field notation `2^N` or `2^N/0xMOD`.
Field parse_field(const std::string& text);
std::string format_elem(Elem a);

}  // namespace apnsurf
