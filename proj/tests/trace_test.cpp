#include "gf2bl/trace.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gf2bl/errors.hpp"
#include "oracles.hpp"

namespace gf2bl {
namespace {

TEST(TraceLinear, SingleTermIsIdentity) {
  const FieldPtr field = Field::create(12);
  std::mt19937_64 rng(1);
  for (unsigned l : {1u, 2u, 3u, 4u, 6u, 12u}) {
    const Element x = field->element(oracle::random_bits(rng, 12));
    EXPECT_EQ(trace_linear(x, l, l), x);
  }
}

TEST(TraceLinear, Gf16Examples) {
  const FieldPtr field = Field::create(4);
  EXPECT_TRUE(trace_linear(field->one(), 1, 4).is_zero());
  EXPECT_TRUE(trace_linear(field->one(), 1, 2).is_zero());
  // 0x6 = z^2 + z is a root of X^2 + X + 1 under 0x13.
  const Element omega = field->element(0x6);
  ASSERT_TRUE((omega * omega + omega).is_one());
  EXPECT_TRUE(trace_linear(omega, 1, 2).is_one());
}

TEST(TraceLinear, RejectsBadDivisibility) {
  const FieldPtr field = Field::create(12);
  EXPECT_THROW(trace_linear(field->one(), 2, 3), std::invalid_argument);
  EXPECT_THROW(trace_linear(field->one(), 1, 5), std::invalid_argument);
  EXPECT_THROW(trace_linear(field->one(), 0, 4), std::invalid_argument);
}

TEST(AbsTraceBit, Basics) {
  const FieldPtr field = Field::create(4);
  EXPECT_FALSE(abs_trace_bit(field->zero(), 4));
  EXPECT_FALSE(abs_trace_bit(field->zero(), 2));
  int ones = 0;
  for (Word v = 0; v < 16; ++v) ones += abs_trace_bit(field->element(v), 4);
  EXPECT_EQ(ones, 8);
}

TEST(AbsTraceBit, NormLikeValueLiesInSubfield) {
  // k = 1: b^(q^2+1) = b^5 satisfies (b^5)^4 = b^5, so T_2 applies.
  const FieldPtr field = Field::create(4);
  for (Word v = 0; v < 16; ++v) {
    const Element b5 = pow(field->element(v), 5);
    ASSERT_EQ(frobenius(b5, 2), b5);
    EXPECT_NO_THROW(abs_trace_bit(b5, 2));
  }
}

TEST(AbsTraceBit, RejectsElementOutsideSubfield) {
  const FieldPtr field = Field::create(4);
  EXPECT_THROW(abs_trace_bit(field->element(0x2), 2), DomainError);
  EXPECT_THROW(abs_trace_bit(field->element(0x2), 3), std::invalid_argument);
}

// T_l(x + x^2) = x + x^(2^l)
bool first_identity(const Element& x, unsigned l) {
  return trace_linear(x + square(x), 1, l) == x + frobenius(x, l);
}

// T_L(x) = T_l(T_l^L(x)) = T_l^L(T_l(x))
bool second_identity(const Element& x, unsigned l, unsigned L) {
  const Element full = trace_linear(x, 1, L);
  return full == trace_linear(trace_linear(x, l, L), 1, l) &&
         full == trace_linear(trace_linear(x, 1, l), l, L);
}

TEST(TraceIdentities, ExhaustiveUpTo12) {
  for (unsigned n = 1; n <= 12; ++n) {
    const FieldPtr field = Field::create(n);
    for (Word v = 0; v < (Word{1} << n); ++v) {
      const Element x = field->element(v);
      for (unsigned L = 1; L <= n; ++L) {
        if (n % L != 0) continue;
        ASSERT_TRUE(first_identity(x, L)) << "n=" << n << " l=" << L;
        for (unsigned l = 1; l <= L; ++l) {
          if (L % l != 0) continue;
          ASSERT_TRUE(second_identity(x, l, L))
              << "n=" << n << " l=" << l << " L=" << L << " x=" << encode_hex(x);
        }
      }
    }
  }
}

TEST(TraceIdentities, RandomizedLargeFields) {
  for (unsigned n : {16u, 32u}) {
    const FieldPtr field = Field::create(n);
    std::mt19937_64 rng(n);
    for (int i = 0; i < 2000; ++i) {
      const Element x = field->element(oracle::random_bits(rng, n));
      for (unsigned L = 1; L <= n; ++L) {
        if (n % L != 0) continue;
        ASSERT_TRUE(first_identity(x, L));
        for (unsigned l = 1; l <= L; ++l) {
          if (L % l == 0) ASSERT_TRUE(second_identity(x, l, L));
        }
      }
    }
  }
}

TEST(TraceProperties, AdditiveWithImageInSubfield) {
  const unsigned n = 24;
  const FieldPtr field = Field::create(n);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Element x = field->element(oracle::random_bits(rng, n));
    const Element y = field->element(oracle::random_bits(rng, n));
    for (unsigned l : {1u, 2u, 3u, 4u, 6u, 8u, 12u}) {
      ASSERT_EQ(trace_linear(x + y, l, n), trace_linear(x, l, n) + trace_linear(y, l, n));
      ASSERT_TRUE(in_subfield(trace_linear(x, l, n), l));
    }
  }
}

}  // namespace
}  // namespace gf2bl
