#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apnsurf/factor.hpp"
#include "apnsurf/field.hpp"
#include "apnsurf/unipoly.hpp"

namespace apnsurf {

struct ExponentClass {
  enum class Kind { Gold, KasamiWelch, Other };
  Kind kind = Kind::Other;
  /// i for Gold (d = 2^i + 1), k for Kasami-Welch (d = 4^k - 2^k + 1).
  int param = 0;

  std::string to_string() const;
  friend bool operator==(const ExponentClass&, const ExponentClass&) = default;
};

/// Gold wins at d = 3.
ExponentClass classify_exponent(std::uint64_t d);

enum class Outcome { NotApnForAllLargeN, BoundaryNotApnForAllLargeN, Inconclusive };

const char* to_string(Outcome o);

/// One checked fact. `code` names the fact; `data` holds the values needed to
/// recompute it.
struct Reason {
  std::string code;
  std::string message;
  std::map<std::string, std::string> data;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  /// odd-degree, even-2e, kasami-main, kasami-boundary, exceptional-monomial
  /// or none.
  std::string criterion = "none";
  std::vector<Reason> reasons;
  std::optional<std::uint64_t> d;
  std::optional<int> k;
  std::optional<unsigned> j;
};

/// Cached absolute-irreducibility verdicts of phi_j over GF(2), one JSON
/// object per line: {"j":..,"verdict":..,"r":..,"factor_count":..}.
class VerdictCache {
 public:
  struct Entry {
    AbsIrredKind kind = AbsIrredKind::AbsolutelyIrreducible;
    int r = 1;
    int factor_count = 1;
  };

  VerdictCache() = default;
  /// Missing file means an empty cache; malformed lines throw SyntaxError.
  static VerdictCache load(const std::string& path);

  std::optional<Entry> lookup(unsigned j) const;
  void insert(unsigned j, const Entry& e) { entries_[j] = e; }
  std::size_t size() const { return entries_.size(); }

  static std::string to_line(unsigned j, const Entry& e);
  /// Appends one record to `path`.
  static void append(const std::string& path, unsigned j, const Entry& e);

 private:
  std::map<unsigned, Entry> entries_;
};

/// Absolute-irreducibility verdict of phi_j over GF(2), from the cache when
/// present. nullopt when phi_j is zero or constant (j = 3).
std::optional<VerdictCache::Entry> phi_verdict(unsigned j, const VerdictCache* cache = nullptr);

Verdict check_odd_degree(const UniPoly& f);
Verdict check_even_2e(const UniPoly& f);
Verdict check_kasami_main(const UniPoly& f, const VerdictCache* cache = nullptr);
/// n: f is considered over GF(2^n); needs gcd(k, n) = 1.
Verdict check_kasami_boundary(const UniPoly& f, int n);

/// Degenerate f (phi = 0) is Inconclusive outright. Otherwise the first
/// applicable check in the order odd-degree, even-2e, kasami-main,
/// kasami-boundary. `n` must be a multiple of the degree of f's field.
Verdict classify(const UniPoly& f, int n, const VerdictCache* cache = nullptr);

}  // namespace apnsurf
