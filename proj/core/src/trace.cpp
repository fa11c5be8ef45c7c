#include "gf2bl/trace.hpp"

#include <stdexcept>
#include <string>

#include "gf2bl/errors.hpp"

namespace gf2bl {

void TraceSpec::validate(unsigned n) const {
  if (sub == 0 || ext == 0 || ext % sub != 0 || n % ext != 0) {
    throw std::invalid_argument("invalid trace T_" + std::to_string(sub) +
                                "^" + std::to_string(ext) + " over GF(2^" +
                                std::to_string(n) + ")");
  }
}

Element trace_linear(const Element& x, const TraceSpec& spec) {
  spec.validate(x.field().degree());
  Element term = x;
  Element acc = x;
  for (unsigned i = 1; i < spec.ext / spec.sub; ++i) {
    term = frobenius(term, spec.sub);
    acc += term;
  }
  return acc;
}

bool abs_trace_bit(const Element& x, unsigned m) {
  if (!in_subfield(x, m)) {
    throw DomainError("T_" + std::to_string(m) + " applied to " +
                      encode_hex(x) + ", which is not in GF(2^" +
                      std::to_string(m) + ")");
  }
  const Element t = trace_linear(x, 1, m);
  if (t.bits() > 1) {
    throw InternalError("absolute trace left the prime field");
  }
  return t.is_one();
}

}  // namespace gf2bl
