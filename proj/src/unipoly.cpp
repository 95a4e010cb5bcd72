#include "apnsurf/unipoly.hpp"

#include <algorithm>
#include <bit>

#include "rng.hpp"

namespace apnsurf {

UniPoly::UniPoly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_.contains(c)) {
      throw Error(ErrorCode::CoefficientNotInField, format_elem(c) + " is not in " + field_.to_string());
    }
  }
  normalize();
}

UniPoly UniPoly::monomial(const Field& f, Elem c, std::size_t e) {
  std::vector<Elem> v(e + 1, 0);
  v[e] = c;
  return UniPoly(f, std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  require_same_field(field_, o.field_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] ^= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(Elem c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  if (c == 1) return *this;
  for (auto& v : coeffs_) v = field_.mul(v, c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const Field& f = a.field_;
  std::vector<Elem> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const Elem ai = a.coeffs_[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] ^= f.mul(ai, b.coeffs_[j]);
  }
  UniPoly out(f);
  out.coeffs_ = std::move(r);
  out.normalize();
  return out;
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {UniPoly(f), a};
  std::vector<Elem> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Elem> q(a.degree() - b.degree() + 1, 0);
  const auto bc = b.coeffs();
  const Elem inv_lead = f.inv(b.lead());
  const std::size_t db = bc.size() - 1;
  for (std::size_t top = r.size(); top-- > db;) {
    const Elem c = r[top];
    if (c == 0) continue;
    const Elem t = f.mul(c, inv_lead);
    const std::size_t shift = top - db;
    q[shift] = t;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] ^= f.mul(t, bc[i]);
  }
  r.resize(db);
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divrem(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::InvariantViolation, "inexact polynomial division");
  return q;
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero() || p.lead() == 1) return p;
  return p * p.field().inv(p.lead());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  const Field& f = a.field();
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::constant(f, 1), s1(f);
  UniPoly t0(f), t1 = UniPoly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    UniPoly t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv = f.inv(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly pow(const UniPoly& p, std::uint64_t e) {
  UniPoly r = UniPoly::constant(p.field(), 1);
  UniPoly base = p;
  while (e != 0) {
    if (e & 1U) r = r * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return r;
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

UniPoly powmod(const UniPoly& a, std::uint64_t e, const UniPoly& m) {
  UniPoly r = UniPoly::constant(a.field(), 1) % m;
  UniPoly base = a % m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, base, m);
    e >>= 1;
    if (e != 0) base = mulmod(base, base, m);
  }
  return r;
}

UniPoly derivative(const UniPoly& p) {
  std::vector<Elem> d;
  for (int i = 1; i <= p.degree(); i += 2) {
    d.resize(i, 0);
    d[i - 1] = p[i];
  }
  return UniPoly(p.field(), std::move(d));
}

UniPoly sqrt_poly(const UniPoly& p) {
  std::vector<Elem> r((p.degree() + 2) / 2, 0);
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i] == 0) continue;
    if (i % 2 != 0) throw Error(ErrorCode::InvariantViolation, "sqrt_poly of a non-square");
    r[i / 2] = p.field().sqrt(p[i]);
  }
  return UniPoly(p.field(), std::move(r));
}

UniPoly taylor_shift(const UniPoly& p, Elem c) {
  const Field& f = p.field();
  std::vector<Elem> r(p.coeffs().begin(), p.coeffs().end());
  if (c == 0) return p;
  // Horner-style synthetic shifts: r(x) <- r(x + c).
  const int d = p.degree();
  for (int i = 0; i < d; ++i) {
    for (int j = d - 1; j >= i; --j) r[j] ^= f.mul(c, r[j + 1]);
  }
  return UniPoly(f, std::move(r));
}

UniPoly map_coeffs(const UniPoly& p, const Embedding& e) {
  require_same_field(p.field(), e.from());
  std::vector<Elem> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = e.apply(p[i]);
  return UniPoly(e.to(), std::move(r));
}

Elem eval(const UniPoly& p, Elem a) {
  const Field& f = p.field();
  Elem r = 0;
  for (int i = p.degree(); i >= 0; --i) r = f.mul(r, a) ^ p[i];
  return r;
}

FieldElement eval(const UniPoly& p, const FieldElement& a) {
  if (a.field() == p.field()) return {a.field(), eval(p, a.bits())};
  const Embedding& e = embedding(p.field(), a.field());
  const Field& f = a.field();
  Elem r = 0;
  for (int i = p.degree(); i >= 0; --i) r = f.mul(r, a.bits()) ^ e.apply(p[i]);
  return {f, r};
}

namespace {

std::vector<int> prime_divisors(int d) {
  std::vector<int> ps;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      ps.push_back(p);
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) ps.push_back(d);
  return ps;
}

// h^q mod m with q = |field|.
UniPoly frobenius_mod(const UniPoly& h, const UniPoly& m) {
  UniPoly r = h;
  for (int i = 0; i < h.field().degree(); ++i) r = mulmod(r, r, m);
  return r;
}

std::uint64_t poly_seed(const UniPoly& p) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(p.field().modulus());
  for (auto c : p.coeffs()) h = detail::mix64(h ^ c);
  return h;
}

// Splits g (monic squarefree, all irreducible factors of degree d).
void equal_degree_split(const UniPoly& g, int d, detail::CounterRng& rng, std::vector<UniPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const Field& f = g.field();
  const int trace_len = f.degree() * d;
  for (;;) {
    std::vector<Elem> a(g.degree());
    for (auto& c : a) c = static_cast<Elem>(rng.next() & (f.size() - 1));
    UniPoly cur(f, std::move(a));
    if (cur.degree() < 1) continue;
    UniPoly acc = cur;
    for (int i = 1; i < trace_len; ++i) {
      cur = mulmod(cur, cur, g);
      acc += cur;
    }
    UniPoly h = gcd(acc, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(exact_div(g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const UniPoly& p) {
  const int d = p.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const UniPoly m = monic(p);
  const UniPoly x = UniPoly::x(p.field());
  std::vector<UniPoly> frob;
  frob.reserve(d + 1);
  frob.push_back(x % m);
  for (int i = 1; i <= d; ++i) frob.push_back(frobenius_mod(frob.back(), m));
  if (frob[d] != x % m) return false;
  for (int r : prime_divisors(d)) {
    if (!gcd(frob[d / r] + x, m).is_one()) return false;
  }
  return true;
}

std::vector<UniFactor> squarefree_decomposition(const UniPoly& p) {
  std::vector<UniFactor> out;
  if (p.degree() < 1) return out;
  const UniPoly f = monic(p);
  UniPoly c = gcd(f, derivative(f));
  UniPoly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly y = gcd(w, c);
    UniPoly fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac, i});
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(sqrt_poly(c))) out.push_back({g, 2 * m});
  }
  return out;
}

UniFactorization factor(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "factor of the zero polynomial");
  UniFactorization result;
  result.unit = p.lead();
  detail::CounterRng rng(poly_seed(p));
  const UniPoly x = UniPoly::x(p.field());
  for (const auto& [w, mult] : squarefree_decomposition(p)) {
    // Distinct-degree splitting.
    UniPoly rest = w;
    UniPoly h = x % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = frobenius_mod(h, rest);
      UniPoly g = gcd(h + x, rest);
      if (g.degree() > 0) {
        std::vector<UniPoly> parts;
        equal_degree_split(g, d, rng, parts);
        for (auto& part : parts) result.factors.push_back({std::move(part), mult});
        rest = exact_div(rest, g);
        h = h % rest;
      }
    }
    if (rest.degree() > 0) result.factors.push_back({rest, mult});
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const UniFactor& a, const UniFactor& b) {
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.multiplicity < b.multiplicity;
  });
  // Merge equal factors coming from different squarefree layers.
  std::vector<UniFactor> merged;
  for (auto& f : result.factors) {
    if (!merged.empty() && merged.back().poly == f.poly) {
      merged.back().multiplicity += f.multiplicity;
    } else {
      merged.push_back(std::move(f));
    }
  }
  result.factors = std::move(merged);
  return result;
}

}  // namespace apnsurf
