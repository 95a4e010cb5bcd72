#include "apnsurf/tripoly.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace apnsurf {

namespace {

constexpr unsigned kMaxExponent = 0xFFFF;

std::uint64_t pack(unsigned ex, unsigned ey, unsigned ez) {
  return (static_cast<std::uint64_t>(ex + ey + ez) << 48) | (static_cast<std::uint64_t>(ex) << 32) |
         (static_cast<std::uint64_t>(ey) << 16) | ez;
}

void sort_desc(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
}

std::vector<Term> from_accumulator(const std::unordered_map<std::uint64_t, Elem>& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [k, c] : acc) {
    if (c != 0) out.push_back({Monomial::from_key(k), c});
  }
  sort_desc(out);
  return out;
}

}  // namespace

Monomial::Monomial(unsigned ex, unsigned ey, unsigned ez) {
  if (ex > kMaxExponent || ey > kMaxExponent || ez > kMaxExponent || ex + ey + ez > kMaxExponent) {
    throw Error(ErrorCode::InvalidArgument, "exponent exceeds 16 bits");
  }
  key_ = pack(ex, ey, ez);
}

Monomial operator*(Monomial a, Monomial b) {
  return Monomial(a.x() + b.x(), a.y() + b.y(), a.z() + b.z());
}

TriPoly::TriPoly(Field field, std::vector<Term> terms) : field_(std::move(field)) {
  std::unordered_map<std::uint64_t, Elem> acc;
  for (const auto& t : terms) {
    if (!field_.contains(t.coeff)) {
      throw Error(ErrorCode::CoefficientNotInField, format_elem(t.coeff) + " is not in " + field_.to_string());
    }
    acc[t.mono.key()] ^= t.coeff;
  }
  terms_ = from_accumulator(acc);
}

TriPoly TriPoly::constant(const Field& f, Elem c) { return monomial(f, c, Monomial{}); }

TriPoly TriPoly::monomial(const Field& f, Elem c, Monomial m) { return TriPoly(f, {{m, c}}); }

TriPoly TriPoly::var(const Field& f, int index) {
  return monomial(f, 1, Monomial(index == 0, index == 1, index == 2));
}

TriPoly TriPoly::from_uni(const UniPoly& p, int var) {
  std::vector<Term> t;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p[i] == 0) continue;
    const unsigned e = static_cast<unsigned>(i);
    t.push_back({Monomial(var == 0 ? e : 0, var == 1 ? e : 0, var == 2 ? e : 0), p[i]});
  }
  return TriPoly(p.field(), std::move(t));
}

Elem TriPoly::coeff(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  return (it != terms_.end() && it->mono == m) ? it->coeff : 0;
}

int TriPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exp(var)));
  return d;
}

bool TriPoly::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  require_same_field(field_, o.field_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      const Elem c = a->coeff ^ b->coeff;
      if (c != 0) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

TriPoly& TriPoly::operator*=(Elem c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coeff = field_.mul(t.coeff, c);
  }
  return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  require_same_field(a.field_, b.field_);
  TriPoly out(a.field_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.total_degree() + b.total_degree() > static_cast<int>(kMaxExponent)) {
    throw Error(ErrorCode::InvalidArgument, "product degree exceeds 16 bits");
  }
  const Field& f = a.field_;
  std::unordered_map<std::uint64_t, Elem> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) acc[ta.mono.key() + tb.mono.key()] ^= f.mul(ta.coeff, tb.coeff);
  }
  out.terms_ = from_accumulator(acc);
  return out;
}

bool operator<(const TriPoly& a, const TriPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono) return a.terms_[i].mono < b.terms_[i].mono;
    if (a.terms_[i].coeff != b.terms_[i].coeff) return a.terms_[i].coeff < b.terms_[i].coeff;
  }
  return a.size() < b.size();
}

TriPoly pow(const TriPoly& p, std::uint64_t e) {
  TriPoly r = TriPoly::constant(p.field(), 1);
  TriPoly base = p;
  while (e != 0) {
    if (e & 1U) r = r * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return r;
}

TriPoly monic(const TriPoly& p) {
  if (p.is_zero() || p.lead().coeff == 1) return p;
  return p * p.field().inv(p.lead().coeff);
}

std::optional<TriPoly> exact_quotient(const TriPoly& numerator, const TriPoly& divisor) {
  require_same_field(numerator.field(), divisor.field());
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const Field& f = numerator.field();
  std::map<std::uint64_t, Elem, std::greater<>> rem;
  for (const auto& t : numerator.terms()) rem.emplace(t.mono.key(), t.coeff);
  const Term lead = divisor.lead();
  const Elem inv_lead = f.inv(lead.coeff);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    const auto top = rem.begin();
    const Monomial m = Monomial::from_key(top->first);
    if (!lead.mono.divides(m)) return std::nullopt;
    const Monomial qm = m / lead.mono;
    const Elem qc = f.mul(top->second, inv_lead);
    quotient.push_back({qm, qc});
    for (const auto& t : divisor.terms()) {
      const std::uint64_t k = t.mono.key() + qm.key();
      auto [it, inserted] = rem.try_emplace(k, 0);
      it->second ^= f.mul(qc, t.coeff);
      if (it->second == 0) rem.erase(it);
    }
  }
  return TriPoly(f, std::move(quotient));
}

HomogeneousDecomposition homogeneous_parts(const TriPoly& p) {
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : p.terms()) buckets[static_cast<int>(t.mono.degree())].push_back(t);
  HomogeneousDecomposition out;
  for (auto& [d, terms] : buckets) out.emplace(d, TriPoly(p.field(), std::move(terms)));
  return out;
}

namespace {

// Returns the target field of an assignment and checks all values share it.
Field assignment_field(const TriPoly& p, const Assignment& a) {
  std::optional<Field> target;
  for (int v = 0; v < 3; ++v) {
    if (!a[v]) continue;
    if (target && *target != a[v]->field()) {
      throw Error(ErrorCode::FieldMismatch, "assignment values live in different fields");
    }
    target = a[v]->field();
  }
  return target ? *target : p.field();
}

}  // namespace

TriPoly specialize(const TriPoly& p, const Assignment& a) {
  const Field target = assignment_field(p, a);
  const TriPoly src = (target == p.field()) ? p : map_coeffs(p, embedding(p.field(), target));
  // Power tables per assigned variable.
  std::array<std::vector<Elem>, 3> powers;
  for (int v = 0; v < 3; ++v) {
    if (!a[v]) continue;
    const int d = std::max(src.degree_in(v), 0);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (int i = 1; i <= d; ++i) powers[v][i] = target.mul(powers[v][i - 1], a[v]->bits());
  }
  std::unordered_map<std::uint64_t, Elem> acc;
  for (const auto& t : src.terms()) {
    Elem c = t.coeff;
    std::array<unsigned, 3> e{t.mono.x(), t.mono.y(), t.mono.z()};
    for (int v = 0; v < 3; ++v) {
      if (a[v]) {
        c = target.mul(c, powers[v][e[v]]);
        e[v] = 0;
      }
    }
    if (c != 0) acc[Monomial(e[0], e[1], e[2]).key()] ^= c;
  }
  std::vector<Term> terms;
  for (const auto& [k, c] : acc) terms.push_back({Monomial::from_key(k), c});
  return TriPoly(target, std::move(terms));
}

UniPoly specialize_univariate(const TriPoly& p, const Assignment& a) {
  int kept = -1;
  int count = 0;
  for (int v = 0; v < 3; ++v) {
    if (!a[v]) {
      kept = v;
      ++count;
    }
  }
  if (count != 1) throw Error(ErrorCode::InvalidArgument, "exactly one variable must be kept");
  const TriPoly s = specialize(p, a);
  std::vector<Elem> coeffs(std::max(s.degree_in(kept), 0) + 1, 0);
  for (const auto& t : s.terms()) coeffs[t.mono.exp(kept)] ^= t.coeff;
  return UniPoly(s.field(), std::move(coeffs));
}

FieldElement evaluate(const TriPoly& p, const FieldElement& x, const FieldElement& y, const FieldElement& z) {
  const TriPoly s = specialize(p, Assignment{x, y, z});
  return {s.field(), s.is_zero() ? Elem{0} : s.lead().coeff};
}

TriPoly map_coeffs(const TriPoly& p, const Embedding& e) {
  require_same_field(p.field(), e.from());
  std::vector<Term> t(p.terms().begin(), p.terms().end());
  for (auto& term : t) term.coeff = e.apply(term.coeff);
  return TriPoly(e.to(), std::move(t));
}

TriPoly frobenius_coeffs(const TriPoly& p, int i) {
  std::vector<Term> t(p.terms().begin(), p.terms().end());
  for (auto& term : t) term.coeff = p.field().frobenius(term.coeff, i);
  return TriPoly(p.field(), std::move(t));
}

TriPoly permute(const TriPoly& p, const std::array<int, 3>& perm) {
  std::vector<Term> t;
  t.reserve(p.size());
  for (const auto& term : p.terms()) {
    std::array<unsigned, 3> e{};
    for (int v = 0; v < 3; ++v) e[perm[v]] = term.mono.exp(v);
    t.push_back({Monomial(e[0], e[1], e[2]), term.coeff});
  }
  return TriPoly(p.field(), std::move(t));
}

TriPoly e3(const Field& f) {
  const TriPoly x = TriPoly::x(f), y = TriPoly::y(f), z = TriPoly::z(f);
  return (x + y) * (y + z) * (z + x);
}

}  // namespace apnsurf
