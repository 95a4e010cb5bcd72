#pragma once

#include <optional>

#include "apnsurf/tripoly.hpp"
#include "apnsurf/unipoly.hpp"

namespace apnsurf {

/// phi(x,y,z) = (f(x)+f(y)+f(z)+f(x+y+z)) / ((x+y)(x+z)(y+z)).
struct PhiSurface {
  UniPoly f;
  TriPoly phi;
  /// Total degree of phi; nullopt when phi vanishes (deg f < 3 or only
  /// 2-power exponents).
  std::optional<int> degree;
};

/// f(x)+f(y)+f(z)+f(x+y+z).
TriPoly phi_numerator(const UniPoly& f);

PhiSurface phi_of(const UniPoly& f);

/// phi of the monomial x^j over GF(2). Results for j <= 256 are cached
/// process-wide.
TriPoly phi_mono(unsigned j);

/// phi_{2j} == phi_j^2 * e3, computed on both sides.
bool double_identity_check(unsigned j);

}  // namespace apnsurf
