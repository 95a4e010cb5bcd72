#include "apnsurf/unipoly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "apnsurf/text.hpp"
#include "oracle.hpp"

using namespace apnsurf;

namespace {

UniPoly random_poly(const Field& f, int degree, std::mt19937_64& rng) {
  std::vector<Elem> c(degree + 1);
  for (auto& v : c) v = static_cast<Elem>(rng() % f.size());
  if (c.back() == 0) c.back() = 1;
  return UniPoly(f, c);
}

std::uint64_t mask_of(const UniPoly& p) {
  std::uint64_t m = 0;
  for (int i = 0; i <= p.degree(); ++i) m |= std::uint64_t{p[i]} << i;
  return m;
}

}  // namespace

TEST(UniPoly, Basics) {
  const Field f = Field::make(2);
  const UniPoly p = parse_poly("x^3 + a*x + 1", f);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p[1], 2u);
  EXPECT_EQ(UniPoly(f).degree(), -1);
  EXPECT_TRUE((p + p).is_zero());
  EXPECT_EQ(format(p * p), "x^6 + 0x3*x^2 + 0x1");
}

TEST(UniPoly, DivisionIdentity) {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 4, 8}) {
    const Field f = Field::make(n);
    for (int t = 0; t < 50; ++t) {
      const UniPoly a = random_poly(f, static_cast<int>(rng() % 20), rng);
      const UniPoly b = random_poly(f, static_cast<int>(rng() % 8), rng);
      const auto [q, r] = divrem(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
      EXPECT_EQ(exact_div(a * b, b), a);
    }
  }
  const Field f = Field::gf2();
  EXPECT_THROW(divrem(UniPoly::x(f), UniPoly(f)), Error);
  EXPECT_THROW(exact_div(UniPoly::x(f), parse_poly("x+1", f)), Error);
}

TEST(UniPoly, GcdBezout) {
  std::mt19937_64 rng(5);
  const Field f = Field::make(3);
  for (int t = 0; t < 50; ++t) {
    const UniPoly c = random_poly(f, 3, rng);
    const UniPoly a = random_poly(f, 5, rng) * c;
    const UniPoly b = random_poly(f, 4, rng) * c;
    const auto e = extended_gcd(a, b);
    EXPECT_EQ(e.g, gcd(a, b));
    EXPECT_EQ(e.g.lead(), 1u);
    EXPECT_EQ(e.s * a + e.t * b, e.g);
    EXPECT_TRUE((a % e.g).is_zero());
    EXPECT_TRUE((monic(c) % e.g).is_zero() || e.g.degree() >= c.degree());
  }
}

TEST(UniPoly, IrreducibleCountsOverGF2) {
  // Monic irreducibles of degree d over GF(2), counted by trial division.
  for (int d = 1; d <= 10; ++d) {
    int lib = 0, ref = 0;
    for (std::uint64_t m = std::uint64_t{1} << d; m < (std::uint64_t{2} << d); ++m) {
      std::vector<Elem> c(d + 1);
      for (int i = 0; i <= d; ++i) c[i] = (m >> i) & 1;
      lib += is_irreducible(UniPoly(Field::gf2(), c));
      ref += oracle::gf2_irreducible(m);
    }
    EXPECT_EQ(lib, ref) << d;
  }
}

TEST(UniPoly, IrreducibleCountsOverGF4) {
  // Frozen from exhaustive enumeration: 4, 6, 20 monic irreducibles.
  const Field f = Field::make(2);
  const int expected[] = {0, 4, 6, 20};
  for (int d = 1; d <= 3; ++d) {
    int count = 0;
    std::vector<Elem> c(d + 1, 0);
    c[d] = 1;
    const int total = 1 << (2 * d);
    for (int m = 0; m < total; ++m) {
      for (int i = 0; i < d; ++i) c[i] = (m >> (2 * i)) & 3;
      count += is_irreducible(UniPoly(f, c));
    }
    EXPECT_EQ(count, expected[d]);
  }
}

TEST(UniPoly, FactorRoundTrip) {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 3, 5, 8}) {
    const Field f = Field::make(n);
    for (int t = 0; t < 40; ++t) {
      UniPoly p = random_poly(f, 1 + static_cast<int>(rng() % 4), rng);
      p = p * p * random_poly(f, static_cast<int>(rng() % 12), rng);  // force repeated factors
      const UniFactorization fac = factor(p);
      UniPoly back = UniPoly::constant(f, fac.unit);
      for (const auto& [g, m] : fac.factors) {
        EXPECT_TRUE(is_irreducible(g));
        EXPECT_EQ(g.lead(), 1u);
        back = back * pow(g, m);
      }
      EXPECT_EQ(back, p);
      for (std::size_t i = 1; i < fac.factors.size(); ++i) EXPECT_TRUE(fac.factors[i - 1].poly < fac.factors[i].poly);
    }
  }
}

TEST(UniPoly, FactorGF2MatchesTrialDivision) {
  for (std::uint64_t m = 2; m < 2048; ++m) {
    std::vector<Elem> c;
    for (int i = 0; (m >> i) != 0; ++i) c.push_back((m >> i) & 1);
    const UniFactorization fac = factor(UniPoly(Field::gf2(), c));
    std::uint64_t rest = m;
    for (const auto& [g, e] : fac.factors) {
      ASSERT_TRUE(oracle::gf2_irreducible(mask_of(g)));
      for (int i = 0; i < e; ++i) {
        ASSERT_EQ(oracle::clmod(rest, mask_of(g)), 0u);
        // exact quotient by long division
        std::uint64_t q = 0, r = rest;
        const int dg = oracle::bit_degree(mask_of(g));
        for (int d = oracle::bit_degree(r); d >= dg; d = oracle::bit_degree(r)) {
          q |= std::uint64_t{1} << (d - dg);
          r ^= mask_of(g) << (d - dg);
        }
        rest = q;
      }
    }
    ASSERT_EQ(rest, 1u) << m;
  }
}

TEST(UniPoly, FactorIsDeterministic) {
  const Field f = Field::make(8);
  const UniPoly p = parse_poly("x^40 + 0x53*x^17 + a*x^3 + 0x1", f);
  const auto a = factor(p);
  const auto b = factor(p);
  ASSERT_EQ(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < a.factors.size(); ++i) EXPECT_EQ(a.factors[i].poly, b.factors[i].poly);
}

TEST(UniPoly, SquarefreeCharTwo) {
  const Field f = Field::gf2();
  const UniPoly p = parse_poly("x^2+x+1", f);
  const UniPoly q = parse_poly("x+1", f);
  const auto sqf = squarefree_decomposition(pow(p, 4) * pow(q, 3) * UniPoly::x(f));
  UniPoly back = UniPoly::constant(f, 1);
  for (const auto& [g, m] : sqf) back = back * pow(g, m);
  EXPECT_EQ(back, pow(p, 4) * pow(q, 3) * UniPoly::x(f));
  EXPECT_EQ(sqrt_poly(pow(p, 2)), p);
  EXPECT_TRUE(derivative(pow(p, 2)).is_zero());
}

TEST(UniPoly, ShiftEvalAndMaps) {
  std::mt19937_64 rng(13);
  const Field f = Field::make(4);
  const UniPoly p = random_poly(f, 9, rng);
  for (Elem c = 0; c < 16; ++c) {
    const UniPoly s = taylor_shift(p, c);
    for (Elem x = 0; x < 16; ++x) EXPECT_EQ(eval(s, x), eval(p, x ^ c));
  }
  const Field big = Field::make(8);
  const UniPoly up = map_coeffs(p, embedding(f, big));
  const Embedding& e = embedding(f, big);
  for (Elem x = 0; x < 16; ++x) EXPECT_EQ(eval(up, e.apply(x)), e.apply(eval(p, x)));
  EXPECT_EQ(eval(p, FieldElement(big, e.apply(3))).bits(), e.apply(eval(p, 3)));
  EXPECT_EQ(powmod(UniPoly::x(f), 16, p), pow(UniPoly::x(f), 16) % p);
}
