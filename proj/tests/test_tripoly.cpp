#include "apnsurf/tripoly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "apnsurf/text.hpp"

using namespace apnsurf;

namespace {

TriPoly random_tri(const Field& f, int degree, int terms, std::mt19937_64& rng) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    const unsigned d = static_cast<unsigned>(rng() % (degree + 1));
    const unsigned ex = static_cast<unsigned>(rng() % (d + 1));
    const unsigned ey = static_cast<unsigned>(rng() % (d - ex + 1));
    t.push_back({Monomial(ex, ey, d - ex - ey), static_cast<Elem>(1 + rng() % (f.size() - 1))});
  }
  return TriPoly(f, t);
}

}  // namespace

TEST(Monomial, GradedLexOrder) {
  EXPECT_LT(Monomial(0, 0, 2), Monomial(0, 1, 1));
  EXPECT_LT(Monomial(0, 1, 1), Monomial(1, 0, 1));
  EXPECT_LT(Monomial(5, 0, 0), Monomial(0, 0, 6));
  EXPECT_EQ(Monomial(1, 2, 3) * Monomial(3, 2, 1), Monomial(4, 4, 4));
  EXPECT_EQ(Monomial(4, 4, 4) / Monomial(1, 2, 3), Monomial(3, 2, 1));
  EXPECT_THROW(Monomial(70000, 0, 0), Error);
}

TEST(TriPoly, RingLaws) {
  std::mt19937_64 rng(17);
  const Field f = Field::make(3);
  for (int t = 0; t < 30; ++t) {
    const TriPoly a = random_tri(f, 5, 6, rng), b = random_tri(f, 4, 5, rng), c = random_tri(f, 3, 4, rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a + a).is_zero());
    if (!b.is_zero()) {
      EXPECT_EQ(exact_quotient(a * b, b), a);
      if (!a.is_zero() && b.total_degree() > 0) {
        EXPECT_FALSE(exact_quotient(a * b + TriPoly::constant(f, 1), b).has_value());
      }
    }
  }
}

TEST(TriPoly, Homogeneity) {
  const Field f = Field::gf2();
  const TriPoly p = parse_tripoly("x^3 + x*y*z + y^2 + z + 1", f);
  const auto parts = homogeneous_parts(p);
  ASSERT_EQ(parts.size(), 4u);
  EXPECT_EQ(parts.at(3), parse_tripoly("x^3 + x*y*z", f));
  TriPoly sum(f);
  for (const auto& [d, q] : parts) {
    EXPECT_TRUE(q.is_homogeneous());
    sum += q;
  }
  EXPECT_EQ(sum, p);
  EXPECT_EQ(p.degree_in(0), 3);
  EXPECT_EQ(p.degree_in(2), 1);
}

TEST(TriPoly, SpecializeIntoExtension) {
  const Field g2 = Field::gf2();
  const Field f4 = Field::make(2);
  const TriPoly p = parse_tripoly("x^2 + x*y + y^2", g2);
  // x^2 + x + 1 has the roots of GF(4) \ GF(2).
  const UniPoly u = specialize_univariate(p, Assignment{std::nullopt, FieldElement::one(f4), FieldElement::zero(f4)});
  EXPECT_EQ(u.field(), f4);
  EXPECT_EQ(eval(u, 2), 0u);
  EXPECT_EQ(eval(u, 3), 0u);
  EXPECT_EQ(evaluate(p, FieldElement(f4, 2), FieldElement::one(f4), FieldElement::zero(f4)).bits(), 0u);
  EXPECT_THROW(specialize(p, Assignment{FieldElement::one(f4), FieldElement::one(Field::make(3)), std::nullopt}),
               Error);
}

TEST(TriPoly, Symmetries) {
  const Field f = Field::gf2();
  const TriPoly e = e3(f);
  EXPECT_EQ(e.total_degree(), 3);
  EXPECT_EQ(permute(e, {1, 0, 2}), e);
  EXPECT_EQ(permute(e, {2, 0, 1}), e);
  const Field f8 = Field::make(3);
  const TriPoly q = parse_tripoly("a*x + a^2*y", f8);
  EXPECT_EQ(frobenius_coeffs(q, 1), parse_tripoly("a^2*x + a^4*y", f8));
  EXPECT_EQ(monic(q), parse_tripoly("x + a*y", f8));
  EXPECT_EQ(pow(TriPoly::x(f) + TriPoly::y(f), 4), parse_tripoly("x^4 + y^4", f));
}
