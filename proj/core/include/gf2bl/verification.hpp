#pragma once

// Self-checks of the solver against brute force and against the algebraic
// identities it relies on. Used by `gf2bl verify`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gf2bl/bracken_leander.hpp"
#include "gf2bl/field.hpp"

namespace gf2bl {

struct CheckResult {
  std::string name;
  bool passed = true;
  // First offending value, empty on success.
  std::string detail;
};

// Uniform element of the field.
Element random_element(const Field& field, std::mt19937_64& rng);

// f(x + alpha) = f(x) + alpha + alpha^2 for alpha in GF(q), and
// f(x + beta) = f(x) + (beta + beta^q)(x + x^(q^2)) + beta^2 + beta^q for
// beta in GF(q^2). Throws std::invalid_argument if alpha or beta is outside
// its subfield.
bool shift_identities_hold(const Element& x, const Element& alpha,
                           const Element& beta, const BLContext& ctx);

// For e != 1 and both roots c of c^2 + (e+1)c = b^q: T_k^{4k}(c) is 1 or e,
// and when it is e,
//   T_k(f(c) + b) = t1 + t2,  T_k(f(c + omega(e+1)) + b) = t2 + 1.
// Vacuously true for e = 1.
bool trace_relations_hold(const Element& b, const BLContext& ctx);

// Structural checks on one solve() result: every root maps to b, the count is
// 0, 2 or 4, the set is closed under x -> x + 1 and T_k^{4k}(x) = e.
bool solution_set_sound(const SolutionReport& report, const BLContext& ctx);

// Every b: solver vs brute force, three spectra, counting identities, shift
// identities (all x at k = 1, `samples` random triples otherwise) and the
// trace relations.
std::vector<CheckResult> verify_exhaustive(const BLContext& ctx,
                                           std::uint64_t samples,
                                           std::uint64_t seed);

// `samples` random b: soundness of solve(), trace relations, shift identities.
std::vector<CheckResult> verify_sampled(const BLContext& ctx,
                                        std::uint64_t samples,
                                        std::uint64_t seed);

}  // namespace gf2bl
