#pragma once

// Differential spectrum of X^(q^2+q+1) over GF(q^4) at input difference 1:
// N_i = #{b : f(x) = b has exactly i solutions}.

#include <cstdint>
#include <map>
#include <vector>

#include "gf2bl/bracken_leander.hpp"
#include "gf2bl/field.hpp"

namespace gf2bl {

struct Spectrum {
  Word n0 = 0;
  Word n2 = 0;
  Word n4 = 0;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

// Largest field degree the enumerating routines accept.
inline constexpr unsigned kMaxEnumerationDegree = 24;

// N0 = (5q^4 - q^3)/8, N2 = (q^4 + q^3)/4, N4 = (q^4 - q^3)/8; k in [1, 30].
Spectrum spectrum_formula(unsigned k);

// Histogram of classify(b).count over every b.
Spectrum spectrum_classify(const BLContext& ctx);

// Preimage size -> number of b with that many preimages, from evaluating f
// on every x. Uses nothing but eval_f.
std::map<std::uint32_t, std::uint64_t> preimage_histogram(const BLContext& ctx);

// preimage_histogram folded into a Spectrum. Throws InternalError if a
// preimage size outside {0, 2, 4} occurs.
Spectrum spectrum_brute(const BLContext& ctx);

// {x : f(x) = b} by exhaustive scan, sorted.
std::vector<Element> oracle_solve(const Element& b, const BLContext& ctx);

// All preimage sets at once: table[b] = {x : f(x) = b}, sorted.
std::vector<std::vector<Element>> preimage_table(const BLContext& ctx);

// #{b : T_k^{4k}(b) = 1, T_{2k}(b^(q^2+1)) = i}
std::uint64_t count_prop10(const BLContext& ctx, bool i);

// #{c : T_k^{4k}(c) != 1, T_k((1 + c + c^(q^2))^(q+1)) = 0}
std::uint64_t count_prop11(const BLContext& ctx);

}  // namespace gf2bl
