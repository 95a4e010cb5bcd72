#include "apnsurf/apn.hpp"

#include <algorithm>
#include <numeric>

#include "apnsurf/phi.hpp"

namespace apnsurf {

namespace {

constexpr int kMaxDiffDegree = 20;
constexpr int kMaxSurfaceDegree = 12;

UniPoly move_into(const UniPoly& f, const Field& target) {
  const Field& src = f.field();
  if (src == target) return f;
  if (target.degree() % src.degree() == 0) return map_coeffs(f, embedding(src, target));
  int m = 1;
  for (Elem c : f.coeffs()) m = std::lcm(m, src.subfield_degree(c));
  if (target.degree() % m != 0) {
    throw Error(ErrorCode::NotASubfield, "coefficients of f need GF(2^" + std::to_string(m) +
                                             "), which is not a subfield of " + target.to_string());
  }
  const Field small = Field::make(m);
  const Embedding& down = embedding(small, src);
  const Embedding& up = embedding(small, target);
  std::vector<Elem> c(f.coeffs().begin(), f.coeffs().end());
  for (auto& v : c) v = up.apply(*down.restrict(v));
  return UniPoly(target, std::move(c));
}

void check_budget(int n, int limit, const char* what) {
  if (n < 1 || n > limit) {
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + " supports 1 <= n <= " + std::to_string(limit) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<Elem> value_table(const UniPoly& f, const Field& target) {
  const UniPoly g = move_into(f, target);
  std::vector<Elem> t(target.size());
  for (std::uint64_t x = 0; x < t.size(); ++x) t[x] = eval(g, static_cast<Elem>(x));
  return t;
}

DiffSpectrum diff_uniformity(const UniPoly& f, const Field& target) {
  check_budget(target.degree(), kMaxDiffDegree, "diff_uniformity");
  const std::vector<Elem> t = value_table(f, target);
  const std::uint32_t q = static_cast<std::uint32_t>(t.size());
  DiffSpectrum out;
  out.n = target.degree();
  std::vector<std::uint32_t> cnt(q);
  for (std::uint32_t a = 1; a < q; ++a) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::uint32_t x = 0; x < q; ++x) ++cnt[t[x] ^ t[x ^ a]];
    for (std::uint32_t b = 0; b < q; ++b) {
      const int c = static_cast<int>(cnt[b]);
      ++out.histogram[c];
      if (c > out.delta) {
        out.delta = c;
        out.witness = DiffWitness{a, b, {}};
      }
    }
  }
  if (out.witness) {
    auto& w = *out.witness;
    for (std::uint32_t x = 0; x < q; ++x) {
      if ((t[x] ^ t[x ^ w.a]) == w.b) w.solutions.push_back(x);
    }
  }
  return out;
}

bool is_apn(const UniPoly& f, int n) {
  check_budget(n, kMaxDiffDegree, "is_apn");
  return diff_uniformity(f, Field::make(n)).delta <= 2;
}

std::vector<ApnScanRow> apn_scan(const UniPoly& f, int lo, int hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty range");
  check_budget(lo, kMaxDiffDegree, "apn_scan");
  check_budget(hi, kMaxDiffDegree, "apn_scan");
  std::vector<ApnScanRow> rows;
  for (int n = lo; n <= hi; ++n) {
    const DiffSpectrum s = diff_uniformity(f, Field::make(n));
    rows.push_back({n, s.delta <= 2, s.delta, s.witness});
  }
  return rows;
}

SurfaceCount surface_scan(const UniPoly& f, int n) {
  check_budget(n, kMaxSurfaceDegree, "surface_scan");
  const Field target = Field::make(n);
  const UniPoly g = move_into(f, target);
  std::vector<Elem> t(target.size());
  for (std::uint64_t x = 0; x < t.size(); ++x) t[x] = eval(g, static_cast<Elem>(x));
  const std::uint32_t q = static_cast<std::uint32_t>(t.size());

  SurfaceCount out;
  out.n = n;

  // Nondegenerate zeros: for x != y, a = x + y, b = f(x) + f(y), the z with
  // f(z) + f(z + a) = b other than x and y.
  std::vector<std::uint32_t> cnt(q);
  std::optional<std::pair<Elem, Elem>> first;  // smallest (x, y)
  for (std::uint32_t a = 1; a < q; ++a) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (std::uint32_t z = 0; z < q; ++z) ++cnt[t[z] ^ t[z ^ a]];
    for (std::uint32_t x = 0; x < q; ++x) {
      const std::uint32_t extra = cnt[t[x] ^ t[x ^ a]] - 2;
      out.nondegenerate += extra;
      if (extra > 0 && (!first || x < first->first || (x == first->first && (x ^ a) < first->second))) {
        first = {x, x ^ a};
      }
    }
  }
  if (first) {
    SurfaceWitness w;
    w.x = first->first;
    w.y = first->second;
    w.a = w.x ^ w.y;
    w.b = t[w.x] ^ t[w.y];
    bool have_z = false;
    for (std::uint32_t z = 0; z < q; ++z) {
      if ((t[z] ^ t[z ^ w.a]) != w.b) continue;
      w.solutions.push_back(z);
      if (!have_z && z != w.x && z != w.y) {
        w.z = z;
        have_z = true;
      }
    }
    out.witness = std::move(w);
  }

  // Degenerate zeros. phi is symmetric, so each plane x = y, y = z, z = x
  // holds the same number of zeros, and the planes meet in x = y = z.
  const TriPoly phi = phi_of(g).phi;
  std::uint64_t plane = 0;
  std::uint64_t line = 0;
  if (phi.is_zero()) {
    plane = std::uint64_t{q} * q;
    line = q;
  } else {
    // phi(x, x, z) = sum_k c_k(x) z^k
    const int dz = phi.degree_in(2);
    std::vector<std::vector<Elem>> by_z(dz + 1, std::vector<Elem>(phi.total_degree() + 1, 0));
    for (const auto& term : phi.terms()) by_z[term.mono.z()][term.mono.x() + term.mono.y()] ^= term.coeff;
    std::vector<UniPoly> cz;
    for (auto& c : by_z) cz.emplace_back(target, std::move(c));
    std::vector<Elem> zc(dz + 1);
    for (std::uint32_t x = 0; x < q; ++x) {
      for (int k = 0; k <= dz; ++k) zc[k] = eval(cz[k], x);
      const UniPoly in_z(target, zc);
      if (in_z.is_zero()) {
        plane += q;
        ++line;
        continue;
      }
      for (std::uint32_t z = 0; z < q; ++z) {
        if (eval(in_z, z) == 0) {
          ++plane;
          if (z == x) ++line;
        }
      }
    }
  }
  out.total = out.nondegenerate + 3 * plane - 2 * line;
  return out;
}

}  // namespace apnsurf
