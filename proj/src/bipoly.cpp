#include "bipoly.hpp"

#include <algorithm>

namespace apnsurf::detail {

BiPoly::BiPoly(Field field, std::vector<UniPoly> cx) : field_(std::move(field)), cx_(std::move(cx)) {
  for (const auto& c : cx_) require_same_field(field_, c.field());
  normalize();
}

void BiPoly::normalize() {
  while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
}

BiPoly BiPoly::in_y(const UniPoly& c) { return BiPoly(c.field(), {c}); }

BiPoly BiPoly::in_x(const UniPoly& p) {
  std::vector<UniPoly> cx;
  cx.reserve(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) cx.push_back(UniPoly::constant(p.field(), p[i]));
  return BiPoly(p.field(), std::move(cx));
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& c : cx_) d = std::max(d, c.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < cx_.size(); ++i) {
    if (!cx_[i].is_zero()) d = std::max(d, static_cast<int>(i) + cx_[i].degree());
  }
  return d;
}

Elem BiPoly::grlex_lead() const {
  const int d = total_degree();
  for (int i = deg_x(); i >= 0; --i) {
    const int j = d - i;
    if (j >= 0 && cx_[i][j] != 0) return cx_[i][j];
  }
  return 0;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  std::vector<UniPoly> cx(std::max(a.cx_.size(), b.cx_.size()), UniPoly(a.field_));
  for (std::size_t i = 0; i < a.cx_.size(); ++i) cx[i] += a.cx_[i];
  for (std::size_t i = 0; i < b.cx_.size(); ++i) cx[i] += b.cx_[i];
  return BiPoly(a.field_, std::move(cx));
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return BiPoly(a.field_);
  std::vector<UniPoly> cx(a.cx_.size() + b.cx_.size() - 1, UniPoly(a.field_));
  for (std::size_t i = 0; i < a.cx_.size(); ++i) {
    if (a.cx_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.cx_.size(); ++j) {
      if (!b.cx_[j].is_zero()) cx[i + j] += a.cx_[i] * b.cx_[j];
    }
  }
  return BiPoly(a.field_, std::move(cx));
}

BiPoly operator*(const BiPoly& a, const UniPoly& c_in_y) {
  std::vector<UniPoly> cx;
  cx.reserve(a.cx_.size());
  for (const auto& c : a.cx_) cx.push_back(c * c_in_y);
  return BiPoly(a.field_, std::move(cx));
}

BiPoly operator*(BiPoly a, Elem c) {
  for (auto& v : a.cx_) v *= c;
  a.normalize();
  return a;
}

bool operator<(const BiPoly& a, const BiPoly& b) { return to_tri(a) < to_tri(b); }

BiPoly from_tri(const TriPoly& p) {
  if (p.degree_in(2) > 0) throw Error(ErrorCode::InvalidArgument, "expected a polynomial free of z");
  const int dx = std::max(p.degree_in(0), 0);
  const int dy = std::max(p.degree_in(1), 0);
  std::vector<std::vector<Elem>> raw(dx + 1, std::vector<Elem>(dy + 1, 0));
  for (const auto& t : p.terms()) raw[t.mono.x()][t.mono.y()] = t.coeff;
  std::vector<UniPoly> cx;
  cx.reserve(raw.size());
  for (auto& r : raw) cx.emplace_back(p.field(), std::move(r));
  return BiPoly(p.field(), std::move(cx));
}

TriPoly to_tri(const BiPoly& p) {
  std::vector<Term> terms;
  for (int i = 0; i <= p.deg_x(); ++i) {
    const UniPoly& c = p[i];
    for (int j = 0; j <= c.degree(); ++j) {
      if (c[j] != 0) terms.push_back({Monomial(i, j, 0), c[j]});
    }
  }
  return TriPoly(p.field(), std::move(terms));
}

BiPoly monic_grlex(const BiPoly& p) {
  if (p.is_zero()) return p;
  const Elem lead = p.grlex_lead();
  return lead == 1 ? p : p * p.field().inv(lead);
}

BiPoly transpose(const BiPoly& p) {
  const int dy = p.deg_y();
  if (dy < 0) return BiPoly(p.field());
  std::vector<std::vector<Elem>> raw(dy + 1, std::vector<Elem>(p.deg_x() + 1, 0));
  for (int i = 0; i <= p.deg_x(); ++i) {
    for (int j = 0; j <= p[i].degree(); ++j) raw[j][i] = p[i][j];
  }
  std::vector<UniPoly> cx;
  for (auto& r : raw) cx.emplace_back(p.field(), std::move(r));
  return BiPoly(p.field(), std::move(cx));
}

BiPoly diff_x(const BiPoly& p) {
  std::vector<UniPoly> cx;
  for (int i = 1; i <= p.deg_x(); ++i) cx.push_back(i % 2 == 1 ? p[i] : UniPoly(p.field()));
  return BiPoly(p.field(), std::move(cx));
}

BiPoly diff_y(const BiPoly& p) {
  std::vector<UniPoly> cx;
  for (const auto& c : p.coeffs()) cx.push_back(derivative(c));
  return BiPoly(p.field(), std::move(cx));
}

UniPoly eval_y(const BiPoly& p, Elem y0) {
  std::vector<Elem> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = eval(p[i], y0);
  return UniPoly(p.field(), std::move(v));
}

BiPoly shift_y(const BiPoly& p, Elem c) {
  if (c == 0) return p;
  std::vector<UniPoly> cx;
  for (const auto& v : p.coeffs()) cx.push_back(taylor_shift(v, c));
  return BiPoly(p.field(), std::move(cx));
}

BiPoly map_coeffs(const BiPoly& p, const Embedding& e) {
  std::vector<UniPoly> cx;
  for (const auto& v : p.coeffs()) cx.push_back(apnsurf::map_coeffs(v, e));
  return BiPoly(e.to(), std::move(cx));
}

BiPoly frobenius_coeffs(const BiPoly& p, int i) {
  std::vector<UniPoly> cx;
  for (const auto& v : p.coeffs()) {
    std::vector<Elem> w(v.coeffs().begin(), v.coeffs().end());
    for (auto& c : w) c = p.field().frobenius(c, i);
    cx.emplace_back(p.field(), std::move(w));
  }
  return BiPoly(p.field(), std::move(cx));
}

std::optional<BiPoly> restrict_coeffs(const BiPoly& p, const Embedding& e) {
  std::vector<UniPoly> cx;
  for (const auto& v : p.coeffs()) {
    std::vector<Elem> w(v.coeffs().size());
    for (std::size_t j = 0; j < w.size(); ++j) {
      auto r = e.restrict(v[j]);
      if (!r) return std::nullopt;
      w[j] = *r;
    }
    cx.emplace_back(e.from(), std::move(w));
  }
  return BiPoly(e.from(), std::move(cx));
}

UniPoly content_x(const BiPoly& p) {
  UniPoly g(p.field());
  for (const auto& c : p.coeffs()) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly divide_by_y_poly(const BiPoly& p, const UniPoly& c) {
  std::vector<UniPoly> cx;
  for (const auto& v : p.coeffs()) cx.push_back(exact_div(v, c));
  return BiPoly(p.field(), std::move(cx));
}

BiPoly primitive_x(const BiPoly& p) {
  if (p.is_zero()) return p;
  const UniPoly c = content_x(p);
  return c.degree() > 0 ? divide_by_y_poly(p, c) : p;
}

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "bivariate division by zero");
  const Field& f = a.field();
  if (a.is_zero()) return BiPoly(f);
  if (a.deg_x() < b.deg_x()) return std::nullopt;
  std::vector<UniPoly> rem = a.coeffs();
  std::vector<UniPoly> quo(a.deg_x() - b.deg_x() + 1, UniPoly(f));
  const int db = b.deg_x();
  for (int top = a.deg_x(); top >= db; --top) {
    if (rem[top].is_zero()) continue;
    auto [t, r] = divrem(rem[top], b.lc_x());
    if (!r.is_zero()) return std::nullopt;
    const int shift = top - db;
    for (int i = 0; i <= db; ++i) {
      if (!b[i].is_zero()) rem[shift + i] += t * b[i];
    }
    quo[shift] = std::move(t);
  }
  for (int i = 0; i < db; ++i) {
    if (!rem[i].is_zero()) return std::nullopt;
  }
  return BiPoly(f, std::move(quo));
}

BiPoly sqrt_bivariate(const BiPoly& p) {
  std::vector<UniPoly> cx;
  for (int i = 0; i <= p.deg_x(); ++i) {
    if (i % 2 == 1) {
      if (!p[i].is_zero()) throw Error(ErrorCode::InvariantViolation, "sqrt of a non-square bivariate");
      continue;
    }
    cx.push_back(sqrt_poly(p[i]));
  }
  return BiPoly(p.field(), std::move(cx));
}

namespace {

BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const int db = b.deg_x();
  const BiPoly lcb = BiPoly::in_y(b.lc_x());
  while (!a.is_zero() && a.deg_x() >= db) {
    const int shift = a.deg_x() - db;
    std::vector<UniPoly> mono(shift + 1, UniPoly(a.field()));
    mono[shift] = a.lc_x();
    a = a * lcb.lc_x() + BiPoly(a.field(), std::move(mono)) * b;
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return monic_grlex(b);
  if (b.is_zero()) return monic_grlex(a);
  const UniPoly c = gcd(content_x(a), content_x(b));
  BiPoly u = primitive_x(a);
  BiPoly v = primitive_x(b);
  if (u.deg_x() < v.deg_x()) std::swap(u, v);
  while (!v.is_zero() && v.deg_x() > 0) {
    BiPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? r : primitive_x(r);
  }
  if (!v.is_zero()) return monic_grlex(BiPoly::in_y(c));
  return monic_grlex(u * c);
}

}  // namespace apnsurf::detail
