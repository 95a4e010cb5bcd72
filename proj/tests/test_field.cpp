#include "apnsurf/field.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace apnsurf;

TEST(Field, DefaultModuli) {
  EXPECT_EQ(Field::default_modulus(1), 0x3u);
  EXPECT_EQ(Field::default_modulus(2), 0x7u);
  EXPECT_EQ(Field::default_modulus(3), 0xBu);
  EXPECT_EQ(Field::default_modulus(4), 0x13u);
  EXPECT_EQ(Field::default_modulus(8), 0x11Bu);
  for (int n = 1; n <= 32; ++n) {
    const std::uint64_t m = Field::default_modulus(n);
    EXPECT_EQ(oracle::bit_degree(m), n);
    if (n <= 20) {
      EXPECT_TRUE(oracle::gf2_irreducible(m)) << n;
      // smallest irreducible with constant term 1
      for (std::uint64_t c = (std::uint64_t{1} << n) | 1; c < m; c += 2) EXPECT_FALSE(oracle::gf2_irreducible(c)) << n;
    }
  }
}

TEST(Field, RejectsReducibleModulus) {
  try {
    Field::make(4, 0x11);  // x^4 + 1
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
  }
  EXPECT_THROW(Field::make(0), Error);
  EXPECT_THROW(Field::make(33), Error);
  EXPECT_NO_THROW(Field::make(4, 0x19));  // x^4 + x^3 + 1
}

TEST(Field, AesProduct) {
  const Field f = Field::make(8);
  EXPECT_EQ(f.mul(0x53, 0xCA), 0x01u);
  EXPECT_EQ(f.mul(0x57, 0x83), 0xC1u);
  EXPECT_EQ(f.inv(0x53), 0xCAu);
}

TEST(Field, MatchesShiftAndAdd) {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 5, 8, 13, 16, 17, 24, 31, 32}) {
    const Field f = Field::make(n);
    const std::uint64_t mask = (n == 32) ? 0xFFFFFFFFull : ((std::uint64_t{1} << n) - 1);
    for (int t = 0; t < 300; ++t) {
      const Elem a = static_cast<Elem>(rng() & mask);
      const Elem b = static_cast<Elem>(rng() & mask);
      ASSERT_EQ(f.mul(a, b), oracle::gf_mul(a, b, f.modulus(), n)) << n;
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << n;
    }
  }
}

TEST(Field, Axioms) {
  for (int n : {2, 3, 4, 6}) {
    const Field f = Field::make(n);
    const Elem q = static_cast<Elem>(f.size());
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f.pow(a, f.size()), a);  // Fermat
      EXPECT_EQ(f.sqr(f.sqrt(a)), a);
      EXPECT_EQ(f.frobenius(a, n), a);
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (Elem c = 0; c < q; c += 3) EXPECT_EQ(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
      }
    }
  }
}

TEST(Field, PrimitiveGeneratesGroup) {
  for (int n : {1, 2, 3, 4, 5, 8, 11}) {
    const Field f = Field::make(n);
    const Elem g = f.primitive();
    std::vector<bool> seen(f.size(), false);
    Elem x = 1;
    for (std::uint64_t i = 0; i + 1 < f.size(); ++i) {
      EXPECT_FALSE(seen[x]);
      seen[x] = true;
      x = f.mul(x, g);
    }
    EXPECT_EQ(x, 1u);
  }
}

TEST(Field, Subfields) {
  const Field f = Field::make(4);
  int in_gf4 = 0;
  for (Elem a = 0; a < 16; ++a) in_gf4 += f.in_subfield(a, 2);
  EXPECT_EQ(in_gf4, 4);
  EXPECT_THROW(f.in_subfield(1, 3), Error);
  EXPECT_EQ(f.subfield_degree(0), 1);
  EXPECT_EQ(f.subfield_degree(1), 1);
  EXPECT_EQ(f.subfield_degree(2), 4);
}

TEST(Field, EmbeddingIsHomomorphism) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 6}, {3, 6}, {4, 8}, {3, 12}, {4, 16}}) {
    const Field a = Field::make(m);
    const Field b = Field::make(n);
    const Embedding& e = embedding(a, b);
    for (Elem u = 0; u < a.size(); ++u) {
      for (Elem v = 0; v < a.size(); ++v) {
        ASSERT_EQ(e.apply(a.mul(u, v)), b.mul(e.apply(u), e.apply(v)));
        ASSERT_EQ(e.apply(u ^ v), e.apply(u) ^ e.apply(v));
      }
      ASSERT_EQ(e.restrict(e.apply(u)), u);
      ASSERT_TRUE(b.in_subfield(e.apply(u), m));
    }
    // Elements outside the image have no preimage.
    int outside = 0;
    for (Elem w = 0; w < std::min<std::uint64_t>(b.size(), 4096); ++w) outside += !e.restrict(w).has_value();
    EXPECT_GT(outside, 0);
  }
  EXPECT_THROW(embedding(Field::make(2), Field::make(3)), Error);
}

TEST(Field, EmbeddingPicksSmallestRoot) {
  // GF(4) = GF(2)[w]/(w^2+w+1) into GF(16) with x^4+x+1: roots of w^2+w+1 are 0x6 and 0x7.
  const Embedding& e = embedding(Field::make(2), Field::make(4));
  EXPECT_EQ(e.apply(2), 0x6u);
  EXPECT_EQ(e.apply(3), 0x7u);
}

TEST(Field, ElementArithmetic) {
  const Field f = Field::make(3);
  const FieldElement a(f, 3), b(f, 5);
  EXPECT_EQ((a + b).bits(), 6u);
  EXPECT_EQ((a * b).bits(), oracle::gf_mul(3, 5, 0xB, 3));
  EXPECT_EQ((a / a).bits(), 1u);
  EXPECT_THROW(FieldElement(f, 8), Error);
  try {
    (void)(a + FieldElement(Field::make(2), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_EQ(a.pow(7).bits(), 1u);
  EXPECT_EQ(a.frobenius(3), a);
  EXPECT_THROW((void)(a / FieldElement::zero(f)), Error);
}

TEST(Field, ParseAndFormat) {
  EXPECT_EQ(parse_field("2^8").modulus(), 0x11Bu);
  EXPECT_EQ(parse_field("2^4/0x19").modulus(), 0x19u);
  EXPECT_EQ(parse_field("2^3").to_string(), "2^3/0xB");
  EXPECT_THROW(parse_field("3^2"), SyntaxError);
  EXPECT_THROW(parse_field("2^"), SyntaxError);
  EXPECT_THROW(parse_field("2^4/0x11"), Error);
  EXPECT_EQ(format_elem(0), "0x0");
  EXPECT_EQ(format_elem(0x1f), "0x1F");
  EXPECT_EQ(enumerate(Field::make(2)).size(), 4u);
}
