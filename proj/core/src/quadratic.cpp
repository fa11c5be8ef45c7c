#include "gf2bl/quadratic.hpp"

#include <algorithm>

#include "gf2bl/errors.hpp"
#include "gf2bl/trace.hpp"

namespace gf2bl {

std::array<Element, 2> QuadResult::sorted_roots() const {
  std::array<Element, 2> r = roots();
  if (r[1] < r[0]) std::swap(r[0], r[1]);
  return r;
}

bool operator==(const QuadResult& a, const QuadResult& b) {
  if (a.has_roots() != b.has_roots()) return false;
  if (!a.has_roots()) return true;
  return a.sorted_roots() == b.sorted_roots();
}

Element find_delta(const Field& field) {
  const unsigned n = field.degree();
  if (n % 2 == 1) return field.one();
  for (unsigned i = 0; i < n; ++i) {
    Element candidate = field.monomial(i);
    if (abs_trace_bit(candidate, n)) return candidate;
  }
  throw InternalError("no basis monomial has absolute trace 1");
}

QuadraticSolver::QuadraticSolver(const Field& field)
    : field_(&field), delta_(find_delta(field)) {
  const unsigned n = field.degree();
  if (n < 2) return;
  std::vector<Element> conj(n);
  conj[0] = delta_;
  for (unsigned j = 1; j < n; ++j) conj[j] = square(conj[j - 1]);
  partial_.resize(n - 1);
  partial_[n - 2] = conj[n - 1];
  for (unsigned i = n - 2; i-- > 0;) partial_[i] = partial_[i + 1] + conj[i + 1];
}

QuadResult QuadraticSolver::solve_artin_schreier(const Element& a) const {
  if (!(a.field() == *field_)) {
    throw FieldMismatch("quadratic solver used with a foreign field");
  }
  const unsigned n = field_->degree();
  if (abs_trace_bit(a, n)) return QuadResult::none();
  Element x0 = field_->zero();
  Element a_conj = a;
  for (unsigned i = 0; i + 1 < n; ++i) {
    x0 += partial_[i] * a_conj;
    a_conj = square(a_conj);
  }
  if (!(square(x0) + x0 == a)) {
    throw InternalError("explicit quadratic root failed for a = " +
                        encode_hex(a));
  }
  return QuadResult::pair(x0, x0 + field_->one());
}

QuadResult QuadraticSolver::solve_scaled(const Element& u,
                                         const Element& v) const {
  if (u.is_zero()) throw DomainError("solve_scaled requires u != 0");
  const Element u_inv = inv(u);
  const QuadResult y = solve_artin_schreier(v * u_inv * u_inv);
  if (!y.has_roots()) return QuadResult::none();
  const Element z0 = u * y.roots()[0];
  return QuadResult::pair(z0, z0 + u);
}

QuadResult solve_artin_schreier(const Element& a) {
  return QuadraticSolver(a.field()).solve_artin_schreier(a);
}

QuadResult solve_scaled(const Element& u, const Element& v) {
  return QuadraticSolver(u.field()).solve_scaled(u, v);
}

}  // namespace gf2bl
