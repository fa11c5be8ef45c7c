#pragma once

// Bit-level polynomial arithmetic over GF(2) on 128-bit words.

#include <utility>

#include "gf2bl/field.hpp"

namespace gf2bl::detail {

// Number of significant bits; 0 for 0.
inline unsigned bit_width(Word v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 128 - static_cast<unsigned>(__builtin_clzll(hi));
  const auto lo = static_cast<std::uint64_t>(v);
  return lo == 0 ? 0 : 64 - static_cast<unsigned>(__builtin_clzll(lo));
}

// a * b mod (z^degree + low) with a, b reduced. MSB-first shift-and-add; the
// modulus need not be irreducible.
inline Word mul_mod(Word a, Word b, unsigned degree, Word low) {
  const Word top = Word{1} << (degree - 1);
  const Word mask = low_mask(degree);
  Word r = 0;
  for (int i = static_cast<int>(bit_width(b)) - 1; i >= 0; --i) {
    const bool carry = (r & top) != 0;
    r = (r << 1) & mask;
    if (carry) r ^= low;
    if ((b >> i) & 1) r ^= a;
  }
  return r;
}

// a mod g for g != 0.
inline Word poly_mod(Word a, Word g) {
  const unsigned dg = bit_width(g) - 1;
  for (unsigned w = bit_width(a); w > dg; w = bit_width(a)) {
    a ^= g << (w - 1 - dg);
  }
  return a;
}

inline Word poly_gcd(Word a, Word b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace gf2bl::detail
