#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apnsurf/field.hpp"
#include "apnsurf/unipoly.hpp"

namespace apnsurf {

struct DiffWitness {
  Elem a = 0;
  Elem b = 0;
  /// All x with f(x + a) + f(x) = b, ascending.
  std::vector<Elem> solutions;
};

struct DiffSpectrum {
  int n = 0;
  int delta = 0;
  /// Solution count -> number of pairs (a, b), a != 0, with that count.
  std::map<int, std::uint64_t> histogram;
  /// Smallest (a, b) reaching delta.
  std::optional<DiffWitness> witness;
};

/// Values f(x) for every x in `target`, x in increasing bit order. The
/// coefficients of f are moved into `target` through their smallest common
/// subfield GF(2^m); throws NotASubfield when m does not divide the target
/// degree.
std::vector<Elem> value_table(const UniPoly& f, const Field& target);

/// Exhaustive differential spectrum over `target` (degree at most 20).
DiffSpectrum diff_uniformity(const UniPoly& f, const Field& target);

/// diff_uniformity over GF(2^n) with the default modulus; delta <= 2.
bool is_apn(const UniPoly& f, int n);

struct ApnScanRow {
  int n = 0;
  bool apn = false;
  int delta = 0;
  std::optional<DiffWitness> witness;
};

/// One row per n in [lo, hi].
std::vector<ApnScanRow> apn_scan(const UniPoly& f, int lo, int hi);

struct SurfaceWitness {
  Elem x = 0, y = 0, z = 0;
  /// a = x + y, b = f(x) + f(y); {x, y, z, z + a} solve f(t + a) + f(t) = b.
  Elem a = 0, b = 0;
  std::vector<Elem> solutions;
};

struct SurfaceCount {
  int n = 0;
  /// Zeros of phi in GF(2^n)^3.
  std::uint64_t total = 0;
  /// Zeros with x, y, z pairwise distinct.
  std::uint64_t nondegenerate = 0;
  /// First nondegenerate zero in (x, y, z) lexicographic order.
  std::optional<SurfaceWitness> witness;
};

/// Counts points of phi = 0 over GF(2^n), n <= 12. Off the planes x = y,
/// y = z, z = x, phi vanishes exactly where the numerator does, which is read
/// from difference tables of f; the planes are evaluated from phi directly.
SurfaceCount surface_scan(const UniPoly& f, int n);

}  // namespace apnsurf
