#include "apnsurf/phi.hpp"

#include <gtest/gtest.h>

#include <random>

#include "apnsurf/text.hpp"
#include "oracle.hpp"

using namespace apnsurf;

TEST(Phi, SmallMonomials) {
  const Field f = Field::gf2();
  EXPECT_EQ(phi_mono(3), TriPoly::constant(f, 1));
  EXPECT_EQ(phi_mono(5), parse_tripoly("x^2 + x*y + x*z + y^2 + y*z + z^2", f));
  for (unsigned j : {0u, 1u, 2u, 4u, 8u, 64u}) EXPECT_TRUE(phi_mono(j).is_zero()) << j;
  for (unsigned j = 3; j <= 80; ++j) {
    const TriPoly p = phi_mono(j);
    if ((j & (j - 1)) == 0) continue;
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.total_degree(), static_cast<int>(j) - 3);
    EXPECT_EQ(permute(p, {1, 2, 0}), p);
    EXPECT_EQ(permute(p, {1, 0, 2}), p);
  }
}

TEST(Phi, NumeratorFactorsThroughE3) {
  std::mt19937_64 rng(19);
  const Field f = Field::make(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<Elem> c(2 + rng() % 20);
    for (auto& v : c) v = static_cast<Elem>(rng() % 4);
    c.back() = 1;
    const UniPoly g(f, c);
    const PhiSurface s = phi_of(g);
    EXPECT_EQ(s.phi * e3(f), phi_numerator(g));
    // Linear combination of monomial phis.
    TriPoly sum(f);
    for (int j = 0; j <= g.degree(); ++j) {
      if (g[j] != 0) sum += map_coeffs(phi_mono(j), embedding(Field::gf2(), f)) * g[j];
    }
    EXPECT_EQ(sum, s.phi);
  }
}

TEST(Phi, PointwiseAgainstDirectEvaluation) {
  // phi(x,y,z) * (x+y)(x+z)(y+z) = f(x)+f(y)+f(z)+f(x+y+z) at points of GF(16).
  const Field f4 = Field::make(2);
  const Field f16 = Field::make(4);
  const UniPoly g = parse_poly("x^11 + a*x^6 + x^5 + a^2*x^3 + 0x1", f4);
  const TriPoly phi = phi_of(g).phi;
  const Embedding& e = embedding(f4, f16);
  std::vector<std::uint64_t> coeffs;
  for (Elem c : g.coeffs()) coeffs.push_back(e.apply(c));
  auto fv = [&](std::uint64_t v) { return oracle::gf_eval(coeffs, v, f16.modulus(), 4); };
  auto mul = [&](std::uint64_t a, std::uint64_t b) { return oracle::gf_mul(a, b, f16.modulus(), 4); };
  for (Elem x = 0; x < 16; x += 3) {
    for (Elem y = 0; y < 16; ++y) {
      for (Elem z = 0; z < 16; z += 5) {
        const Elem v = evaluate(phi, {f16, x}, {f16, y}, {f16, z}).bits();
        const std::uint64_t lhs = mul(mul(mul(v, x ^ y), x ^ z), y ^ z);
        ASSERT_EQ(lhs, fv(x) ^ fv(y) ^ fv(z) ^ fv(x ^ y ^ z));
      }
    }
  }
}

TEST(Phi, DoubleIdentity) {
  for (unsigned j = 0; j <= 32; ++j) EXPECT_TRUE(double_identity_check(j)) << j;
  // k = 3 instance: 2^(2k-1) - 2^(k-1) + 2 = 30 and 2^(2k-2) - 2^(k-2) + 1 = 15.
  const TriPoly p15 = phi_mono(15);
  EXPECT_EQ(phi_mono(30), p15 * p15 * e3(Field::gf2()));
  const TriPoly p13 = phi_mono(13);
  EXPECT_EQ(phi_mono(26), p13 * p13 * e3(Field::gf2()));
}

TEST(Phi, DegreeField) {
  const Field f = Field::make(3);
  EXPECT_FALSE(phi_of(parse_poly("x^2 + x", f)).degree.has_value());
  EXPECT_FALSE(phi_of(parse_poly("x^8 + a*x^4 + x", f)).degree.has_value());
  EXPECT_EQ(phi_of(parse_poly("x^57 + a*x^30 + a^2*x^3", f)).degree, 54);
  EXPECT_EQ(phi_of(parse_poly("x^3", f)).degree, 0);
}
