#pragma once

// Linearized trace polynomials
//
//   T_l^L(X) = X + X^(2^l) + ... + X^(2^(l(L/l - 1)))
//
// evaluated on elements of GF(2^n). For x in GF(2^L) this is the relative
// trace from GF(2^L) down to GF(2^l); T_L abbreviates T_1^L.

#include "gf2bl/field.hpp"

namespace gf2bl {

struct TraceSpec {
  unsigned sub;  // l
  unsigned ext;  // L

  // Throws std::invalid_argument unless sub | ext and ext | n.
  void validate(unsigned n) const;
};

Element trace_linear(const Element& x, const TraceSpec& spec);

inline Element trace_linear(const Element& x, unsigned sub, unsigned ext) {
  return trace_linear(x, TraceSpec{sub, ext});
}

// Absolute trace T_m(x) of an element of GF(2^m). Throws DomainError when x
// is not in GF(2^m).
bool abs_trace_bit(const Element& x, unsigned m);

}  // namespace gf2bl
