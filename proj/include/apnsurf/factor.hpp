#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apnsurf/field.hpp"
#include "apnsurf/tripoly.hpp"

namespace apnsurf {

enum class Budget { Default, High };

struct PolyFactor {
  TriPoly poly;
  int multiplicity;
};

/// unit * prod(factor^multiplicity) == input. Factors are graded-lex monic,
/// irreducible over `field`, and sorted canonically.
struct Factorization {
  Field field;
  Elem unit = 0;
  std::vector<PolyFactor> factors;

  int count_with_multiplicity() const;
  TriPoly expand() const;
};

/// Complete factorization of a nonzero z-free polynomial over `field` (which
/// must contain the polynomial's coefficient field).
///
/// Contents in x and y are split off and factored as univariates. The
/// primitive part is made squarefree (char-2 aware: a polynomial with both
/// partial derivatives zero is a square), specialized at a point y0 keeping
/// deg_x and squarefreeness (moving to an extension field when the base field
/// has no such point), factored univariately, Hensel-lifted in (y - y0) and
/// recombined by trial division.
Factorization bivar_factor(const TriPoly& F, const Field& field);

/// Factorization of a homogeneous trivariate via dehomogenization at z = 1.
Factorization factor_homogeneous(const TriPoly& F, const Field& field);

/// Dispatches to bivar_factor or factor_homogeneous; other trivariates are
/// rejected with InvalidArgument.
Factorization factor(const TriPoly& F, const Field& field);

enum class AbsIrredKind { AbsolutelyIrreducible, ReducibleOverBase, SplitsOverExtension };

const char* to_string(AbsIrredKind kind);

struct AbsIrredVerdict {
  AbsIrredKind kind = AbsIrredKind::AbsolutelyIrreducible;
  /// Extension degree of the first split (1 for ReducibleOverBase).
  int r = 1;
  /// The splitting factorization (absent when absolutely irreducible).
  std::optional<Factorization> factorization;
};

/// Factors over GF(q), then over GF(q^r) for each divisor r > 1 of the total
/// degree in ascending order. An irreducible polynomial that is not
/// absolutely irreducible splits into r conjugates over GF(q^r) with r
/// dividing the degree, so the scan is complete. A smooth rational point over
/// some GF(q^s) with gcd(s, degree) = 1 settles absolute irreducibility
/// before the scan.
AbsIrredVerdict absolute_irreducibility(const TriPoly& F);

/// p_alpha for each alpha in GF(2^k) \ GF(2), ordered by alpha's bits.
struct KasamiFactorSet {
  int k = 0;
  unsigned d = 0;
  Field field;
  std::vector<std::pair<Elem, TriPoly>> factors;
};

/// Factors phi_d, d = 4^k - 2^k + 1, over GF(2^k) and checks: the product is
/// phi_d, every factor is homogeneous of degree 2^k + 1, and
/// p(x, 0, 1) = (x - alpha)^(2^k + 1). Throws InvariantViolation otherwise.
/// k = 4 needs Budget::High.
KasamiFactorSet kasami_phi_factors(int k, Budget budget = Budget::Default);

/// Plane z = u*x + v*y + w certifying that a trivariate is irreducible over
/// its field: the section keeps the total degree and is irreducible.
struct SectionCertificate {
  Elem u = 0, v = 0, w = 0;
};

/// Searches the first `max_sections` planes with coefficients in F's field.
/// A factorization F = G*H restricts to a proper factorization of any
/// degree-preserving section, so a hit proves F irreducible. nullopt means
/// undecided, not reducible.
std::optional<SectionCertificate> irreducible_by_sections(const TriPoly& F, int max_sections = 64);

/// True when p divides F exactly. Coefficients are embedded into the larger
/// of the two fields.
bool tri_divides(const TriPoly& p, const TriPoly& F);

}  // namespace apnsurf
