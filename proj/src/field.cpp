#include "apnsurf/field.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace apnsurf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::CoefficientNotInField: return "CoefficientNotInField";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

// GF(2)[x] helpers on packed words (degree <= 63).

int gf2_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t clmul32(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  std::uint64_t aa = a;
  while (b != 0) {
    if (b & 1U) r ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t gf2_mod(std::uint64_t p, std::uint64_t m) {
  const int dm = gf2_degree(m);
  for (int i = gf2_degree(p); i >= dm; --i) {
    if ((p >> i) & 1U) p ^= m << (i - dm);
  }
  return p;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return gf2_mod(clmul32(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), m);
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = gf2_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  return ps;
}

// Rabin's test over GF(2): x^(2^n) = x mod m and gcd(x^(2^(n/p)) - x, m) = 1.
bool gf2_irreducible(std::uint64_t m) {
  const int n = gf2_degree(m);
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<std::uint64_t> frob(n + 1);
  frob[0] = 2;  // x
  for (int i = 1; i <= n; ++i) frob[i] = gf2_mulmod(frob[i - 1], frob[i - 1], m);
  if (frob[n] != 2) return false;
  for (auto p : prime_factors(static_cast<std::uint64_t>(n))) {
    if (gf2_gcd(m, frob[n / p] ^ 2) != 1) return false;
  }
  return true;
}

}  // namespace

namespace detail {

struct FieldData {
  int n = 0;
  std::uint64_t modulus = 0;
  std::uint64_t order = 0;  // 2^n - 1
  Elem primitive = 1;
  bool tables = false;
  std::vector<Elem> exp;            // 2*order entries
  std::vector<std::uint32_t> log;   // 2^n entries

  Elem slow_mul(Elem a, Elem b) const {
    std::uint64_t p = clmul32(a, b);
    for (int i = 2 * n - 2; i >= n; --i) {
      if ((p >> i) & 1U) p ^= modulus << (i - n);
    }
    return static_cast<Elem>(p);
  }

  Elem slow_pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e != 0) {
      if (e & 1U) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

}  // namespace detail

namespace {

std::shared_ptr<detail::FieldData> build_field(int n, std::uint64_t modulus) {
  auto d = std::make_shared<detail::FieldData>();
  d->n = n;
  d->modulus = modulus;
  d->order = (std::uint64_t{1} << n) - 1;
  if (n > 1) {
    const auto ps = prime_factors(d->order);
    for (Elem g = 2;; ++g) {
      bool ok = true;
      for (auto p : ps) {
        if (d->slow_pow(g, d->order / p) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        d->primitive = g;
        break;
      }
    }
  }
  if (n <= 16) {
    d->tables = true;
    d->exp.resize(2 * d->order + 1);
    d->log.assign(std::size_t{1} << n, 0);
    Elem v = 1;
    for (std::uint64_t i = 0; i < d->order; ++i) {
      d->exp[i] = v;
      d->log[v] = static_cast<std::uint32_t>(i);
      v = d->slow_mul(v, d->primitive);
    }
    for (std::uint64_t i = d->order; i < d->exp.size(); ++i) d->exp[i] = d->exp[i - d->order];
  }
  return d;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::uint64_t Field::default_modulus(int n) {
  if (n < 1 || n > 32) {
    throw Error(ErrorCode::UnsupportedDegree, "field degree must be in 1..32, got " + std::to_string(n));
  }
  for (std::uint64_t m = (std::uint64_t{1} << n) | 1U;; m += 2) {
    if (gf2_irreducible(m)) return m;
  }
}

Field Field::make(int n, std::optional<std::uint64_t> modulus) {
  if (n < 1 || n > 32) {
    throw Error(ErrorCode::UnsupportedDegree, "field degree must be in 1..32, got " + std::to_string(n));
  }
  std::uint64_t m = 0;
  if (modulus) {
    m = *modulus;
    if (gf2_degree(m) != n) {
      throw Error(ErrorCode::DegreeMismatch, "modulus " + format_elem(static_cast<Elem>(m)) +
                                                 " does not have degree " + std::to_string(n));
    }
    if ((m & 1U) == 0 || !gf2_irreducible(m)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(2)");
    }
  }

  static std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const detail::FieldData>> registry;
  static std::map<int, std::uint64_t> defaults;
  std::lock_guard lock(registry_mutex());
  if (!modulus) {
    auto it = defaults.find(n);
    if (it == defaults.end()) it = defaults.emplace(n, default_modulus(n)).first;
    m = it->second;
  }
  auto key = std::make_pair(n, m);
  auto it = registry.find(key);
  if (it == registry.end()) it = registry.emplace(key, build_field(n, m)).first;
  return Field(it->second);
}

int Field::degree() const { return data_->n; }
std::uint64_t Field::modulus() const { return data_->modulus; }

Elem Field::mul(Elem a, Elem b) const {
  const auto& d = *data_;
  if (d.tables) {
    if (a == 0 || b == 0) return 0;
    return d.exp[d.log[a] + d.log[b]];
  }
  return d.slow_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const auto& d = *data_;
  if (d.tables) return d.exp[(d.order - d.log[a]) % d.order];
  return d.slow_pow(a, d.order - 1);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const auto& d = *data_;
  if (d.tables) return d.exp[(static_cast<std::uint64_t>(d.log[a]) * (e % d.order)) % d.order];
  return d.slow_pow(a, e % d.order == 0 ? d.order : e % d.order);
}

Elem Field::frobenius(Elem a, int i) const {
  const int n = degree();
  i %= n;
  if (i < 0) i += n;
  for (int s = 0; s < i; ++s) a = mul(a, a);
  return a;
}

Elem Field::generator() const { return degree() == 1 ? 1 : 2; }
Elem Field::primitive() const { return data_->primitive; }

bool Field::in_subfield(Elem a, int m) const {
  if (m < 1 || degree() % m != 0) {
    throw Error(ErrorCode::NotASubfield,
                "GF(2^" + std::to_string(m) + ") is not a subfield of GF(2^" + std::to_string(degree()) + ")");
  }
  return frobenius(a, m) == a;
}

int Field::subfield_degree(Elem a) const {
  for (int m = 1; m <= degree(); ++m) {
    if (degree() % m == 0 && frobenius(a, m) == a) return m;
  }
  return degree();
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "2^" << degree() << "/0x" << std::uppercase << std::hex << modulus();
  return os.str();
}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) throw Error(ErrorCode::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

FieldElement::FieldElement(Field field, Elem bits) : field_(std::move(field)), bits_(bits) {
  if (!field_.contains(bits_)) {
    throw Error(ErrorCode::CoefficientNotInField, format_elem(bits_) + " is not in " + field_.to_string());
  }
}

FieldElement FieldElement::inv() const { return {field_, field_.inv(bits_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(bits_, e)}; }
FieldElement FieldElement::frobenius(int i) const { return {field_, field_.frobenius(bits_, i)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.bits_ ^ b.bits_};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.mul(a.bits_, b.bits_)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field_, b.field_);
  return {a.field_, a.field_.div(a.bits_, b.bits_)};
}

std::vector<FieldElement> enumerate(const Field& f) {
  std::vector<FieldElement> out;
  out.reserve(f.size());
  for (std::uint64_t v = 0; v < f.size(); ++v) out.emplace_back(f, static_cast<Elem>(v));
  return out;
}

namespace {

// Minimal dense polynomial helpers over a Field, used only to locate roots of
// a GF(2) modulus in a larger field (equal-degree splitting into linear
// factors).
using Dense = std::vector<Elem>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dmod(Dense a, const Dense& m, const Field& f) {
  trim(a);
  const Elem inv_lead = f.inv(m.back());
  while (a.size() >= m.size()) {
    const Elem c = f.mul(a.back(), inv_lead);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] ^= f.mul(c, m[i]);
    trim(a);
  }
  return a;
}

Dense dmulmod(const Dense& a, const Dense& b, const Dense& m, const Field& f) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= f.mul(a[i], b[j]);
  }
  return dmod(std::move(r), m, f);
}

Dense dgcd(Dense a, Dense b, const Field& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = dmod(std::move(a), b, f);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Elem inv_lead = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv_lead);
  }
  return a;
}

Dense ddiv_exact(Dense a, const Dense& b, const Field& f) {
  trim(a);
  Dense q(a.size() - b.size() + 1, 0);
  const Elem inv_lead = f.inv(b.back());
  while (a.size() >= b.size()) {
    const Elem c = f.mul(a.back(), inv_lead);
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] ^= f.mul(c, b[i]);
    trim(a);
  }
  return q;
}

// Roots of a squarefree polynomial that splits into linear factors over f.
void split_roots(const Dense& p, const Field& f, std::vector<Elem>& roots) {
  if (p.size() <= 1) return;
  if (p.size() == 2) {
    roots.push_back(f.div(p[0], p[1]));
    return;
  }
  for (Elem beta = 1;; ++beta) {
    // Tr(beta*x) mod p
    Dense t{0, beta};
    Dense acc = dmod(t, p, f);
    Dense cur = acc;
    for (int i = 1; i < f.degree(); ++i) {
      cur = dmulmod(cur, cur, p, f);
      if (acc.size() < cur.size()) acc.resize(cur.size(), 0);
      for (std::size_t k = 0; k < cur.size(); ++k) acc[k] ^= cur[k];
    }
    trim(acc);
    Dense g = dgcd(p, acc, f);
    if (g.size() > 1 && g.size() < p.size()) {
      split_roots(g, f, roots);
      split_roots(ddiv_exact(p, g, f), f, roots);
      return;
    }
  }
}

}  // namespace

Embedding::Embedding(const Field& from, const Field& to) : from_(from), to_(to) {
  const int m = from.degree();
  const int n = to.degree();
  if (n % m != 0) {
    throw Error(ErrorCode::NotASubfield,
                "GF(2^" + std::to_string(m) + ") does not embed into GF(2^" + std::to_string(n) + ")");
  }
  Elem root = 1;
  if (from == to) {
    root = from.generator();
  } else if (m > 1) {
    Dense p(m + 1);
    for (int i = 0; i <= m; ++i) p[i] = static_cast<Elem>((from.modulus() >> i) & 1U);
    std::vector<Elem> roots;
    split_roots(p, to, roots);
    root = *std::min_element(roots.begin(), roots.end());
  }
  images_.resize(m);
  Elem v = 1;
  for (int i = 0; i < m; ++i) {
    images_[i] = v;
    v = to.mul(v, root);
  }
  // Echelon basis of the image for preimage lookup.
  for (int i = 0; i < m; ++i) {
    Elem vec = images_[i];
    Elem pre = Elem{1} << i;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const int lead = 31 - std::countl_zero(pivots_[r]);
      if ((vec >> lead) & 1U) {
        vec ^= pivots_[r];
        pre ^= pre_[r];
      }
    }
    if (vec == 0) throw Error(ErrorCode::InvariantViolation, "embedding is not injective");
    const int lead = 31 - std::countl_zero(vec);
    auto pos = std::find_if(pivots_.begin(), pivots_.end(),
                            [&](Elem p) { return 31 - std::countl_zero(p) < lead; });
    const auto idx = pos - pivots_.begin();
    pivots_.insert(pos, vec);
    pre_.insert(pre_.begin() + idx, pre);
  }
}

Elem Embedding::apply(Elem a) const {
  Elem r = 0;
  for (std::size_t i = 0; a != 0; ++i, a >>= 1) {
    if (a & 1U) r ^= images_[i];
  }
  return r;
}

FieldElement Embedding::operator()(const FieldElement& a) const {
  require_same_field(a.field(), from_);
  return {to_, apply(a.bits())};
}

std::optional<Elem> Embedding::restrict(Elem b) const {
  Elem acc = 0;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const int lead = 31 - std::countl_zero(pivots_[r]);
    if ((b >> lead) & 1U) {
      b ^= pivots_[r];
      acc ^= pre_[r];
    }
  }
  if (b != 0) return std::nullopt;
  return acc;
}

const Embedding& embedding(const Field& from, const Field& to) {
  using Key = std::tuple<int, std::uint64_t, int, std::uint64_t>;
  static std::map<Key, std::unique_ptr<Embedding>> cache;
  static std::mutex mu;
  Key key{from.degree(), from.modulus(), to.degree(), to.modulus()};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto e = std::make_unique<Embedding>(from, to);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(e));
  return *it->second;
}

std::string format_elem(Elem a) {
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << a;
  return os.str();
}

Field parse_field(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.compare(i, 2, "2^") != 0) throw SyntaxError(i, "'2^'");
  i += 2;
  const std::size_t digits_at = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_at) throw SyntaxError(i, "field degree");
  const int n = std::stoi(text.substr(digits_at, i - digits_at));
  skip_ws();
  std::optional<std::uint64_t> modulus;
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    if (text.compare(i, 2, "0x") != 0 && text.compare(i, 2, "0X") != 0) throw SyntaxError(i, "hex modulus '0x...'");
    i += 2;
    const std::size_t hex_at = i;
    while (i < text.size() && std::isxdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == hex_at || i - hex_at > 16) throw SyntaxError(hex_at, "hex digits");
    modulus = std::stoull(text.substr(hex_at, i - hex_at), nullptr, 16);
    skip_ws();
  }
  if (i != text.size()) throw SyntaxError(i, "end of field specification");
  return Field::make(n, modulus);
}

}  // namespace apnsurf
