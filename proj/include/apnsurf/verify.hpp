#pragma once

#include <string>
#include <vector>

#include "apnsurf/factor.hpp"

namespace apnsurf {

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string title;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

/// Reproduces the finite computations behind the Kasami-degree results:
///   a  Kasami factor sets for k = 2, 3
///   b  phi_{2j} = phi_j^2 * e3 for j <= 32
///   c  (1+x+x^3)^9 + (1+x^2+x^3)^9 != phi_30(x,0,1)
///   d  (high) phi_13's GF(4) factors, embedded in GF(16), against phi_241
///   e  (high) irreducibility over GF(8) of phi for x^57 + a*x^30 + a^2*x^3
/// Items d and e are reported as skipped at the default budget.
std::vector<CheckResult> verify_paper(Budget budget);

}  // namespace apnsurf
