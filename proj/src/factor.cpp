#include "apnsurf/factor.hpp"

#include <algorithm>
#include <numeric>

#include "apnsurf/phi.hpp"
#include "bipoly.hpp"

namespace apnsurf {

using detail::BiPoly;

namespace {

struct BiFactor {
  BiPoly poly;
  int multiplicity;
};

using Series = std::vector<UniPoly>;  // coefficient k multiplies y^k; entries are polys in x

// ---------------------------------------------------------------------------
// Univariate data at a specialization point.

struct Specialization {
  Elem y0 = 0;
  std::vector<UniPoly> factors;  // monic irreducible factors of F(x, y0)
  std::vector<char> degree_sums;  // subset sums of factor degrees
};

std::vector<char> subset_sums(const std::vector<UniPoly>& factors, int total) {
  std::vector<char> reach(total + 1, 0);
  reach[0] = 1;
  for (const auto& f : factors) {
    for (int s = total; s >= f.degree(); --s) {
      if (reach[s - f.degree()]) reach[s] = 1;
    }
  }
  return reach;
}

std::optional<Specialization> try_point(const BiPoly& F, Elem y0) {
  if (eval(F.lc_x(), y0) == 0) return std::nullopt;
  const UniPoly f0 = eval_y(F, y0);
  if (!gcd(f0, derivative(f0)).is_one()) return std::nullopt;
  Specialization s;
  s.y0 = y0;
  for (auto& [p, m] : factor(f0).factors) s.factors.push_back(p);
  s.degree_sums = subset_sums(s.factors, F.deg_x());
  return s;
}

// ---------------------------------------------------------------------------
// Power series helpers in y with coefficients in GF(q)[x].

Series to_series(const BiPoly& F, int precision) {
  const Field& f = F.field();
  std::vector<std::vector<Elem>> raw(precision, std::vector<Elem>(F.deg_x() + 1, 0));
  for (int i = 0; i <= F.deg_x(); ++i) {
    const UniPoly& c = F[i];
    for (int k = 0; k <= std::min(c.degree(), precision - 1); ++k) raw[k][i] = c[k];
  }
  Series s;
  s.reserve(precision);
  for (auto& r : raw) s.emplace_back(f, std::move(r));
  return s;
}

BiPoly from_series(const Series& s, const Field& f) {
  int dx = -1;
  for (const auto& c : s) dx = std::max(dx, c.degree());
  std::vector<std::vector<Elem>> raw(std::max(dx + 1, 0), std::vector<Elem>(s.size(), 0));
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (int i = 0; i <= s[k].degree(); ++i) raw[i][k] = s[k][i];
  }
  std::vector<UniPoly> cx;
  for (auto& r : raw) cx.emplace_back(f, std::move(r));
  return BiPoly(f, std::move(cx));
}

// Truncated product of two series.
Series series_mul(const Series& a, const Series& b, int precision) {
  const Field& f = a.front().field();
  Series r(precision, UniPoly(f));
  for (int i = 0; i < precision && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < precision && j < static_cast<int>(b.size()); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// c(y) * s, truncated.
Series series_scale(const UniPoly& c, const Series& s, int precision) {
  const Field& f = c.field();
  Series r(precision, UniPoly(f));
  for (int i = 0; i <= c.degree() && i < precision; ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; i + j < precision && j < static_cast<int>(s.size()); ++j) {
      if (!s[j].is_zero()) r[i + j] += s[j] * c[i];
    }
  }
  return r;
}

// 1 / c(y) mod y^precision; requires c(0) != 0.
std::vector<Elem> series_inverse(const UniPoly& c, int precision) {
  const Field& f = c.field();
  std::vector<Elem> inv(precision, 0);
  const Elem c0inv = f.inv(c[0]);
  inv[0] = c0inv;
  for (int k = 1; k < precision; ++k) {
    Elem acc = 0;
    for (int i = 1; i <= k && i <= c.degree(); ++i) acc ^= f.mul(c[i], inv[k - i]);
    inv[k] = f.mul(acc, c0inv);
  }
  return inv;
}

std::vector<Elem> scalar_series_mul(const std::vector<Elem>& a, const std::vector<Elem>& b, const Field& f) {
  const std::size_t n = a.size();
  std::vector<Elem> r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] ^= f.mul(a[i], b[j]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Multifactor Hensel lifting, one power of y per step.
//
// F_monic = prod g_i mod y; on return lifted[i][0] = g_i and
// prod lifted[i] = F_monic mod y^precision with deg_x lifted[i][k] < deg g_i
// for k >= 1.

std::vector<Series> hensel_lift(const Series& f_monic, const std::vector<UniPoly>& g, int precision) {
  const Field& f = g.front().field();
  const std::size_t r = g.size();
  std::vector<Series> lifted(r, Series(precision, UniPoly(f)));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = g[i];
  if (r == 1) {
    lifted[0] = f_monic;
    lifted[0].resize(precision, UniPoly(f));
    return lifted;
  }

  // s_i = (prod_{j != i} g_j)^{-1} mod g_i
  std::vector<UniPoly> inv_cofactor(r, UniPoly(f));
  for (std::size_t i = 0; i < r; ++i) {
    UniPoly prod = UniPoly::constant(f, 1);
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) prod = mulmod(prod, g[j], g[i]);
    }
    auto eg = extended_gcd(prod, g[i]);
    if (!eg.g.is_one()) throw Error(ErrorCode::InvariantViolation, "Hensel factors are not coprime");
    inv_cofactor[i] = eg.s % g[i];
  }

  // partial[i][k] = coefficient y^k of lifted[0] * ... * lifted[i]
  std::vector<Series> partial(r, Series(precision, UniPoly(f)));
  partial[0][0] = g[0];
  for (std::size_t i = 1; i < r; ++i) partial[i][0] = partial[i - 1][0] * g[i];

  auto chain_at = [&](int k) {
    partial[0][k] = lifted[0][k];
    for (std::size_t i = 1; i < r; ++i) {
      UniPoly acc(f);
      for (int a = 0; a <= k; ++a) {
        const UniPoly& lhs = partial[i - 1][a];
        const UniPoly& rhs = lifted[i][k - a];
        if (!lhs.is_zero() && !rhs.is_zero()) acc += lhs * rhs;
      }
      partial[i][k] = std::move(acc);
    }
  };

  for (int k = 1; k < precision; ++k) {
    chain_at(k);
    const UniPoly err = f_monic[k] + partial[r - 1][k];
    if (!err.is_zero()) {
      for (std::size_t i = 0; i < r; ++i) lifted[i][k] = mulmod(err, inv_cofactor[i], g[i]);
      chain_at(k);
    }
  }
  return lifted;
}

// ---------------------------------------------------------------------------
// Recombination.

class Recombiner {
 public:
  Recombiner(BiPoly F, std::vector<Series> lifted, std::vector<int> degrees, std::vector<char> allowed,
             int precision)
      : F_(std::move(F)),
        lifted_(std::move(lifted)),
        degrees_(std::move(degrees)),
        allowed_(std::move(allowed)),
        precision_(precision) {
    const Field& f = F_.field();
    for (const auto& s : lifted_) {
      std::vector<Elem> c0(precision_, 0);
      for (int k = 0; k < precision_; ++k) c0[k] = s[k][0];
      constant_terms_.push_back(std::move(c0));
    }
    (void)f;
  }

  std::vector<BiPoly> run() {
    std::vector<std::size_t> active(lifted_.size());
    std::iota(active.begin(), active.end(), 0);
    std::vector<BiPoly> found;
    for (std::size_t size = 1; 2 * size <= active.size(); ++size) {
      std::vector<std::size_t> idx(size);
      bool restart = true;
      while (restart) {
        restart = false;
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
          std::vector<std::size_t> subset;
          for (auto i : idx) subset.push_back(active[i]);
          if (auto h = try_subset(subset)) {
            found.push_back(std::move(*h));
            std::vector<std::size_t> remaining;
            for (std::size_t i = 0; i < active.size(); ++i) {
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(active[i]);
            }
            active = std::move(remaining);
            restart = 2 * size <= active.size();
            break;
          }
          if (!next_combination(idx, active.size())) break;
        }
      }
    }
    if (F_.total_degree() > 0) found.push_back(F_);
    return found;
  }

 private:
  static bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
      if (idx[i] < n - k + i) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        return true;
      }
    }
    return false;
  }

  std::optional<BiPoly> try_subset(const std::vector<std::size_t>& subset) {
    const Field& f = F_.field();
    int deg = 0;
    for (auto i : subset) deg += degrees_[i];
    if (!allowed_[deg]) return std::nullopt;

    // x^0 coefficient test: lc(F) * prod h_i(0, y) must divide lc(F) * F(0, y).
    const UniPoly lc = F_.lc_x();
    std::vector<Elem> c0(precision_, 0);
    for (int k = 0; k <= lc.degree() && k < precision_; ++k) c0[k] = lc[k];
    for (auto i : subset) c0 = scalar_series_mul(c0, constant_terms_[i], f);
    const UniPoly trial(f, c0);
    if (trial.is_zero()) return std::nullopt;
    if (!(lc * F_.coeff_x(0) % trial).is_zero()) return std::nullopt;

    Series cand = lifted_[subset.front()];
    for (std::size_t t = 1; t < subset.size(); ++t) cand = series_mul(cand, lifted_[subset[t]], precision_);
    cand = series_scale(lc, cand, precision_);
    BiPoly h = detail::primitive_x(from_series(cand, f));
    auto q = detail::exact_div(F_, h);
    if (!q) return std::nullopt;
    F_ = std::move(*q);
    return h;
  }

  BiPoly F_;
  std::vector<Series> lifted_;
  std::vector<int> degrees_;
  std::vector<char> allowed_;
  int precision_;
  std::vector<std::vector<Elem>> constant_terms_;
};

constexpr std::size_t kMaxSpecializations = 4;

// Irreducible factors of F (squarefree, primitive, separable in x) given good
// specialization points in F's field.
std::vector<BiPoly> hensel_factor(const BiPoly& F, const std::vector<Specialization>& points) {
  const Field& f = F.field();
  const Specialization* best = &points.front();
  std::vector<char> allowed = points.front().degree_sums;
  for (const auto& p : points) {
    if (p.factors.size() < best->factors.size()) best = &p;
    for (std::size_t s = 0; s < allowed.size(); ++s) allowed[s] = allowed[s] && p.degree_sums[s];
  }
  if (best->factors.size() == 1) return {F};
  bool only_trivial = true;
  for (int s = 1; s < F.deg_x(); ++s) only_trivial = only_trivial && !allowed[s];
  if (only_trivial) return {F};

  const BiPoly shifted = detail::shift_y(F, best->y0);
  const int precision = shifted.deg_y() + 1;
  Series fs = to_series(shifted, precision);
  const auto inv_lc = series_inverse(shifted.lc_x(), precision);
  Series f_monic(precision, UniPoly(f));
  for (int k = 0; k < precision; ++k) {
    UniPoly acc(f);
    for (int a = 0; a <= k; ++a) {
      if (inv_lc[k - a] != 0 && !fs[a].is_zero()) acc += fs[a] * inv_lc[k - a];
    }
    f_monic[k] = std::move(acc);
  }
  auto lifted = hensel_lift(f_monic, best->factors, precision);
  std::vector<int> degrees;
  for (const auto& g : best->factors) degrees.push_back(g.degree());
  Recombiner rec(shifted, std::move(lifted), std::move(degrees), std::move(allowed), precision);
  std::vector<BiPoly> out;
  for (auto& h : rec.run()) out.push_back(detail::shift_y(h, best->y0));
  return out;
}

// Groups factors over GF(q^s) into Frobenius orbits over GF(q) and maps each
// orbit product back to the base field.
std::vector<BiPoly> descend(const std::vector<BiPoly>& ext_factors, const Field& base, const Field& ext) {
  const Embedding& emb = embedding(base, ext);
  std::vector<BiPoly> pending;
  for (const auto& h : ext_factors) pending.push_back(detail::monic_grlex(h));
  std::vector<BiPoly> out;
  while (!pending.empty()) {
    BiPoly h = pending.front();
    pending.erase(pending.begin());
    BiPoly product = h;
    BiPoly conj = detail::frobenius_coeffs(h, base.degree());
    while (conj != h) {
      auto it = std::find(pending.begin(), pending.end(), conj);
      if (it == pending.end()) throw Error(ErrorCode::InvariantViolation, "incomplete Frobenius orbit");
      pending.erase(it);
      product = product * conj;
      conj = detail::frobenius_coeffs(conj, base.degree());
    }
    auto down = detail::restrict_coeffs(product, emb);
    if (!down) throw Error(ErrorCode::InvariantViolation, "orbit product not defined over the base field");
    out.push_back(std::move(*down));
  }
  return out;
}

// Upper bound on the number of y0 where F(x, y0) loses degree or
// squarefreeness, when F is squarefree and separable in x.
std::uint64_t bad_point_bound(const BiPoly& F) {
  return static_cast<std::uint64_t>(2 * F.deg_x() - 1) * F.deg_y() + F.lc_x().degree() + 1;
}

// Factors F when it is squarefree and separable in x; nullopt when a field
// with more than bad_point_bound(F) elements yields no good point, which
// proves F is not.
std::optional<std::vector<BiPoly>> try_separable(const BiPoly& F) {
  const Field& base = F.field();
  const std::uint64_t bound = bad_point_bound(F);
  for (int s = 1; base.degree() * s <= 32; ++s) {
    const Field ext = s == 1 ? base : Field::make(base.degree() * s);
    const BiPoly G = s == 1 ? F : detail::map_coeffs(F, embedding(base, ext));
    std::vector<Specialization> points;
    const std::uint64_t limit = std::min<std::uint64_t>(ext.size(), bound);
    for (std::uint64_t v = 0; v < limit && points.size() < kMaxSpecializations; ++v) {
      if (auto sp = try_point(G, static_cast<Elem>(v))) points.push_back(std::move(*sp));
    }
    if (!points.empty()) {
      auto factors = hensel_factor(G, points);
      return s == 1 ? factors : descend(factors, base, ext);
    }
    if (limit >= bound) return std::nullopt;
  }
  throw Error(ErrorCode::UnsupportedDegree, "no specialization point in any field up to GF(2^32)");
}

std::vector<BiFactor> factor_primitive(const BiPoly& F);

std::vector<BiFactor> factor_primitive_impl(const BiPoly& F) {
  if (F.total_degree() <= 1) return {{F, 1}};
  const BiPoly fx = detail::diff_x(F);
  const BiPoly fy = detail::diff_y(F);
  if (fx.is_zero() && fy.is_zero()) {
    auto inner = factor_primitive(detail::sqrt_bivariate(F));
    for (auto& f : inner) f.multiplicity *= 2;
    return inner;
  }
  if (!fx.is_zero()) {
    if (auto r = try_separable(F)) {
      std::vector<BiFactor> out;
      for (auto& h : *r) out.push_back({std::move(h), 1});
      return out;
    }
  }
  if (!fy.is_zero()) {
    if (auto r = try_separable(detail::transpose(F))) {
      std::vector<BiFactor> out;
      for (auto& h : *r) out.push_back({detail::transpose(h), 1});
      return out;
    }
  }
  // Repeated or inseparable factors: every repeated factor, and every simple
  // factor killed by the derivative, divides gcd(F, dF).
  const BiPoly& d = fx.is_zero() ? fy : fx;
  const BiPoly g = detail::gcd(F, d);
  if (g.total_degree() <= 0) throw Error(ErrorCode::InvariantViolation, "separable polynomial without good point");
  std::vector<BiFactor> out;
  BiPoly rest = F;
  for (const auto& [p, m] : factor_primitive(g)) {
    if (std::any_of(out.begin(), out.end(), [&](const BiFactor& b) { return b.poly == p; })) continue;
    int e = 0;
    while (auto q = detail::exact_div(rest, p)) {
      rest = std::move(*q);
      ++e;
    }
    if (e == 0) throw Error(ErrorCode::InvariantViolation, "gcd factor does not divide");
    out.push_back({p, e});
  }
  if (rest.total_degree() > 0) {
    for (auto& f : factor_primitive(rest)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<BiFactor> factor_primitive(const BiPoly& F) {
  auto out = factor_primitive_impl(F);
  for (auto& f : out) f.poly = detail::monic_grlex(f.poly);
  return out;
}

std::vector<BiFactor> factor_bi(BiPoly F) {
  const Field& f = F.field();
  std::vector<BiFactor> out;
  // Monomial content x^a y^b.
  int a = 0;
  while (F[a].is_zero()) ++a;
  int b = F.deg_y();
  for (const auto& c : F.coeffs()) {
    if (c.is_zero()) continue;
    int low = 0;
    while (c[low] == 0) ++low;
    b = std::min(b, low);
  }
  if (a > 0) {
    std::vector<UniPoly> cx(F.coeffs().begin() + a, F.coeffs().end());
    F = BiPoly(f, std::move(cx));
    out.push_back({BiPoly::in_x(UniPoly::x(f)), a});
  }
  if (b > 0) {
    F = detail::divide_by_y_poly(F, UniPoly::monomial(f, 1, b));
    out.push_back({BiPoly::in_y(UniPoly::x(f)), b});
  }
  // Content in x: a polynomial in y.
  const UniPoly cont_y_part = detail::content_x(F);
  if (cont_y_part.degree() > 0) {
    for (auto& [p, m] : factor(cont_y_part).factors) out.push_back({BiPoly::in_y(p), m});
    F = detail::divide_by_y_poly(F, cont_y_part);
  }
  // Content in y: a polynomial in x.
  const UniPoly cont_x_part = detail::content_x(detail::transpose(F));
  if (cont_x_part.degree() > 0) {
    for (auto& [p, m] : factor(cont_x_part).factors) out.push_back({BiPoly::in_x(p), m});
    F = detail::transpose(detail::divide_by_y_poly(detail::transpose(F), cont_x_part));
  }
  if (F.total_degree() > 0) {
    for (auto& bf : factor_primitive(F)) out.push_back(std::move(bf));
  }
  // Merge duplicates.
  std::vector<BiFactor> merged;
  for (auto& bf : out) {
    bf.poly = detail::monic_grlex(bf.poly);
    auto it = std::find_if(merged.begin(), merged.end(), [&](const BiFactor& m) { return m.poly == bf.poly; });
    if (it != merged.end()) {
      it->multiplicity += bf.multiplicity;
    } else {
      merged.push_back(std::move(bf));
    }
  }
  return merged;
}

void sort_factors(std::vector<PolyFactor>& factors) {
  std::sort(factors.begin(), factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
  });
}

TriPoly lift_to(const TriPoly& F, const Field& field) {
  if (F.field() == field) return F;
  return map_coeffs(F, embedding(F.field(), field));
}

// F irreducible over GF(q) but not absolutely irreducible splits into r
// conjugate components over GF(q^r), r | D, and stays irreducible over
// GF(q^s) when gcd(r, s) = 1. Galois then permutes the components
// transitively, so every GF(q^s)-rational point lies on all of them and is
// singular. A smooth rational point over such a GF(q^s) therefore proves
// absolute irreducibility.
bool has_smooth_point(const BiPoly& F, int degree) {
  constexpr std::uint64_t kMaxRows = 64;
  const Field& base = F.field();
  for (int s = 1; base.degree() * s <= 16; ++s) {
    if (std::gcd(s, degree) != 1) continue;
    const Field ext = s == 1 ? base : Field::make(base.degree() * s);
    const BiPoly G = s == 1 ? F : detail::map_coeffs(F, embedding(base, ext));
    const BiPoly gx = detail::diff_x(G);
    const BiPoly gy = detail::diff_y(G);
    const std::uint64_t rows = std::min<std::uint64_t>(ext.size(), kMaxRows);
    for (std::uint64_t v = 0; v < rows; ++v) {
      const Elem y0 = static_cast<Elem>(v);
      const UniPoly row = eval_y(G, y0);
      if (row.degree() < 1) continue;
      for (const auto& [p, m] : factor(row).factors) {
        if (p.degree() != 1) continue;
        const Elem x0 = p[0];
        if (eval(eval_y(gx, y0), x0) != 0 || eval(eval_y(gy, y0), x0) != 0) return true;
      }
    }
  }
  return false;
}

}  // namespace

int Factorization::count_with_multiplicity() const {
  int n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

TriPoly Factorization::expand() const {
  TriPoly acc = TriPoly::constant(field, unit);
  for (const auto& f : factors) acc = acc * pow(f.poly, f.multiplicity);
  return acc;
}

Factorization bivar_factor(const TriPoly& F, const Field& field) {
  if (F.is_zero()) throw Error(ErrorCode::InvalidArgument, "factorization of the zero polynomial");
  const TriPoly src = lift_to(F, field);
  Factorization out{field, src.lead().coeff, {}};
  if (src.total_degree() == 0) return out;
  for (auto& bf : factor_bi(detail::from_tri(src))) out.factors.push_back({detail::to_tri(bf.poly), bf.multiplicity});
  sort_factors(out.factors);
  return out;
}

Factorization factor_homogeneous(const TriPoly& F, const Field& field) {
  if (F.is_zero()) throw Error(ErrorCode::InvalidArgument, "factorization of the zero polynomial");
  if (!F.is_homogeneous()) throw Error(ErrorCode::InvalidArgument, "expected a homogeneous polynomial");
  const TriPoly src = lift_to(F, field);
  const unsigned degree = src.lead().mono.degree();
  unsigned zpow = degree;
  for (const auto& t : src.terms()) zpow = std::min(zpow, t.mono.z());
  // Dehomogenize: drop z.
  std::vector<Term> terms;
  for (const auto& t : src.terms()) terms.push_back({Monomial(t.mono.x(), t.mono.y(), 0), t.coeff});
  const TriPoly dehom(field, std::move(terms));
  Factorization bi = bivar_factor(dehom, field);
  Factorization out{field, bi.unit, {}};
  for (auto& [p, m] : bi.factors) {
    const unsigned t = static_cast<unsigned>(p.total_degree());
    std::vector<Term> hom;
    for (const auto& term : p.terms()) {
      hom.push_back({Monomial(term.mono.x(), term.mono.y(), t - term.mono.degree()), term.coeff});
    }
    out.factors.push_back({TriPoly(field, std::move(hom)), m});
  }
  if (zpow > 0) out.factors.push_back({TriPoly::z(field), static_cast<int>(zpow)});
  sort_factors(out.factors);
  return out;
}

Factorization factor(const TriPoly& F, const Field& field) {
  if (F.degree_in(2) <= 0) return bivar_factor(F, field);
  if (F.is_homogeneous()) return factor_homogeneous(F, field);
  throw Error(ErrorCode::InvalidArgument, "general trivariate factorization is not supported");
}

const char* to_string(AbsIrredKind kind) {
  switch (kind) {
    case AbsIrredKind::AbsolutelyIrreducible: return "absolutely-irreducible";
    case AbsIrredKind::ReducibleOverBase: return "reducible-over-base";
    case AbsIrredKind::SplitsOverExtension: return "splits-over-extension";
  }
  return "unknown";
}

AbsIrredVerdict absolute_irreducibility(const TriPoly& F) {
  if (F.is_zero() || F.total_degree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "absolute irreducibility needs a nonconstant polynomial");
  }
  const Field& base = F.field();
  Factorization over_base = factor(F, base);
  if (over_base.count_with_multiplicity() > 1) {
    return {AbsIrredKind::ReducibleOverBase, 1, std::move(over_base)};
  }
  const int degree = F.total_degree();
  if (degree >= 2) {
    TriPoly affine = F;
    if (F.degree_in(2) > 0) {
      std::vector<Term> terms;
      for (const auto& t : F.terms()) terms.push_back({Monomial(t.mono.x(), t.mono.y(), 0), t.coeff});
      affine = TriPoly(base, std::move(terms));
    }
    if (has_smooth_point(detail::from_tri(affine), degree)) {
      return {AbsIrredKind::AbsolutelyIrreducible, 1, std::nullopt};
    }
  }
  for (int r = 2; r <= degree; ++r) {
    if (degree % r != 0) continue;
    if (base.degree() * r > 32) {
      throw Error(ErrorCode::UnsupportedDegree, "extension GF(2^" + std::to_string(base.degree() * r) +
                                                    ") needed for the absolute irreducibility scan");
    }
    const Field ext = Field::make(base.degree() * r);
    Factorization over_ext = factor(F, ext);
    if (over_ext.count_with_multiplicity() > 1) {
      return {AbsIrredKind::SplitsOverExtension, r, std::move(over_ext)};
    }
  }
  return {AbsIrredKind::AbsolutelyIrreducible, 1, std::nullopt};
}

KasamiFactorSet kasami_phi_factors(int k, Budget budget) {
  if (k < 2 || k > 4) throw Error(ErrorCode::InvalidArgument, "Kasami parameter k must be in 2..4");
  if (k == 4 && budget != Budget::High) {
    throw Error(ErrorCode::BudgetExceeded, "k = 4 (degree-238 factorization) requires the high budget");
  }
  const unsigned two_k = 1U << k;
  const unsigned d = two_k * two_k - two_k + 1;
  const unsigned factor_degree = two_k + 1;
  const Field field = Field::make(k);
  const TriPoly phi = lift_to(phi_mono(d), field);
  const Factorization fac = factor_homogeneous(phi, field);

  auto violation = [](const std::string& what) { return Error(ErrorCode::InvariantViolation, what); };
  if (fac.unit != 1) throw violation("phi_d does not have unit leading coefficient");
  if (fac.factors.size() != two_k - 2) {
    throw violation("expected " + std::to_string(two_k - 2) + " factors, found " +
                    std::to_string(fac.factors.size()));
  }
  KasamiFactorSet out{k, d, field, {}};
  TriPoly product = TriPoly::constant(field, 1);
  for (const auto& [p, m] : fac.factors) {
    if (m != 1) throw violation("repeated factor");
    if (!p.is_homogeneous() || p.total_degree() != static_cast<int>(factor_degree)) {
      throw violation("factor is not homogeneous of degree 2^k+1");
    }
    const UniPoly line = specialize_univariate(
        p, Assignment{std::nullopt, FieldElement::zero(field), FieldElement::one(field)});
    // (x + alpha)^(2^k+1) has x^(2^k) coefficient (2^k+1) * alpha = alpha.
    const Elem alpha = line[factor_degree - 1];
    const UniPoly expected =
        pow(UniPoly(field, {alpha, 1}), factor_degree);
    if (line != expected) throw violation("p(x,0,1) is not a pure power of a linear form");
    if (field.in_subfield(alpha, 1)) throw violation("alpha lies in GF(2)");
    for (const auto& [other, q] : out.factors) {
      if (other == alpha) throw violation("two factors share the same alpha");
    }
    out.factors.emplace_back(alpha, p);
    product = product * p;
  }
  if (product != phi) throw violation("product of the factors differs from phi_d");
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::optional<SectionCertificate> irreducible_by_sections(const TriPoly& F, int max_sections) {
  if (F.is_zero() || F.total_degree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "irreducibility needs a nonconstant polynomial");
  }
  const Field& f = F.field();
  const int degree = F.total_degree();
  const TriPoly x = TriPoly::x(f), y = TriPoly::y(f);
  const std::uint64_t q = f.size();
  int tried = 0;
  // w = 0 last: homogeneous inputs always split on planes through the origin.
  for (std::uint64_t wi = 1; wi <= q; ++wi) {
    const std::uint64_t w = wi % q;
    for (std::uint64_t u = 0; u < q; ++u) {
      for (std::uint64_t v = 0; v < q; ++v) {
        if (tried >= max_sections) return std::nullopt;
        const Elem eu = static_cast<Elem>(u), ev = static_cast<Elem>(v), ew = static_cast<Elem>(w);
        // Substitute z -> u*x + v*y + w term by term.
        const TriPoly plane = x * eu + y * ev + TriPoly::constant(f, ew);
        std::vector<TriPoly> zpow{TriPoly::constant(f, 1)};
        TriPoly section(f);
        for (const auto& t : F.terms()) {
          while (static_cast<int>(zpow.size()) <= static_cast<int>(t.mono.z())) zpow.push_back(zpow.back() * plane);
          section += TriPoly::monomial(f, t.coeff, Monomial(t.mono.x(), t.mono.y(), 0)) * zpow[t.mono.z()];
        }
        if (section.total_degree() != degree) continue;
        ++tried;
        if (bivar_factor(section, f).count_with_multiplicity() == 1) return SectionCertificate{eu, ev, ew};
      }
    }
  }
  return std::nullopt;
}

bool tri_divides(const TriPoly& p, const TriPoly& F) {
  if (p.field() == F.field()) return exact_quotient(F, p).has_value();
  if (F.field().degree() % p.field().degree() == 0) {
    return exact_quotient(F, map_coeffs(p, embedding(p.field(), F.field()))).has_value();
  }
  if (p.field().degree() % F.field().degree() == 0) {
    return exact_quotient(map_coeffs(F, embedding(F.field(), p.field())), p).has_value();
  }
  throw Error(ErrorCode::FieldMismatch, "no common field for " + p.field().to_string() + " and " +
                                            F.field().to_string());
}

}  // namespace apnsurf
