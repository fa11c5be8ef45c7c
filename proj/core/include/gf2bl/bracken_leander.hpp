#pragma once

// Explicit solutions of
//
//   f(X) = X^(q^2+q+1) + (X+1)^(q^2+q+1) = b,   q = 2^k,
//
// over GF(q^4) = GF(2^(4k)).
//
// With e = T_k^{4k}(b):
//  * e = 1: two solutions iff T_{2k}(b^(q^2+1)) = 1, namely b^(q/2) + alpha
//    where alpha^2 + alpha = f(b^(q/2)) + b, alpha in GF(q); otherwise none.
//  * e != 1: let c solve c^2 + (e+1)c = b^q. If T_k^{4k}(c) = 1 there are no
//    solutions. Otherwise, with t1 = T_k((1+c+c^(q^2))^(q+1)) and
//    t2 = T_{2k}(c^(q^2+1)): two solutions if t1 = 0, four if t1 = t2 = 1,
//    none if t1 = 1, t2 = 0. The solutions are c + eps*omega*(e+1) + alpha
//    for eps in {0, 1}, alpha in GF(q), alpha^2 + alpha = f(c + eps*omega*(e+1)) + b.

#include <optional>
#include <string_view>
#include <vector>

#include "gf2bl/field.hpp"
#include "gf2bl/quadratic.hpp"

namespace gf2bl {

enum class Branch { kEEqualsOne, kENotOne };

// "E_EQ_ONE" / "E_NE_ONE"
std::string_view branch_name(Branch branch);

// Trace predicates evaluated while classifying b. Only the ones the chosen
// branch needs are set.
struct Predicates {
  // e = 1: T_{2k}(b^(q^2+1))
  std::optional<bool> trace_b_norm;
  // e != 1: [T_k^{4k}(c) = 1]
  std::optional<bool> c_trace_is_one;
  // e != 1 and T_k^{4k}(c) = e: T_k((1+c+c^(q^2))^(q+1))
  std::optional<bool> t1;
  // e != 1 and T_k^{4k}(c) = e: T_{2k}(c^(q^2+1))
  std::optional<bool> t2;
};

struct SolutionReport {
  Element b;
  Element e;
  Branch branch = Branch::kENotOne;
  std::optional<Element> c;
  Predicates predicates;
  unsigned count = 0;
  // Sorted by integer encoding. Empty for classify().
  std::vector<Element> solutions;
};

// GF(2^(4k)) together with omega in GF(q^2), omega + omega^q = 1.
class BLContext {
 public:
  // Throws std::invalid_argument unless the degree is a multiple of 4.
  explicit BLContext(FieldPtr field);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned k() const { return k_; }
  const Element& omega() const { return omega_; }
  const QuadraticSolver& quadratic() const { return quadratic_; }

 private:
  FieldPtr field_;
  unsigned k_;
  QuadraticSolver quadratic_;
  Element omega_;
};

// Context over GF(2^(4k)) with the default (smallest irreducible) modulus.
BLContext make_context(unsigned k);
BLContext make_context(FieldPtr field);

// f(x) via the expansion
//   x^(q^2+q) + x^(q^2+1) + x^(q+1) + x^(q^2) + x^q + x + 1.
// Throws std::invalid_argument unless the field degree is 4k.
Element eval_f(const Element& x, unsigned k);
inline Element eval_f(const Element& x, const BLContext& ctx) {
  return eval_f(x, ctx.k());
}

// e = T_k^{4k}(b), an element of GF(q).
Element compute_e(const Element& b, const BLContext& ctx);

// The root of c^2 + (e+1)c = b^q with the smaller encoding. Throws
// DomainError if e = 1, InternalError if the equation is unsolvable.
Element find_c(const Element& b, const Element& e, const BLContext& ctx);

// Solution count and predicates; solutions left empty.
SolutionReport classify(const Element& b, const BLContext& ctx);

// classify() plus the explicit solution set. Every produced root is
// re-checked against f; any inconsistency throws InternalError.
SolutionReport solve(const Element& b, const BLContext& ctx);

}  // namespace gf2bl
