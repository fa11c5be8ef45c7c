#pragma once

// Solving x^2 + x = a and z^2 + u z = v over GF(2^n).
//
// x^2 + x = a is solvable iff T_n(a) = 0. Given delta with T_n(delta) = 1,
//
//   x0 = sum_{i=0}^{n-2} ( sum_{j=i+1}^{n-1} delta^(2^j) ) a^(2^i)
//
// is a root, and the other root is x0 + 1.

#include <array>
#include <optional>
#include <vector>

#include "gf2bl/field.hpp"

namespace gf2bl {

class QuadResult {
 public:
  static QuadResult none() { return QuadResult(); }
  static QuadResult pair(const Element& first, const Element& second) {
    return QuadResult(std::array<Element, 2>{first, second});
  }

  bool has_roots() const { return roots_.has_value(); }
  // In construction order: {x0, x0 + shift}. Throws std::logic_error when
  // there are no roots.
  const std::array<Element, 2>& roots() const { return roots_.value(); }
  // Roots sorted by integer encoding.
  std::array<Element, 2> sorted_roots() const;

  // Pair equality is unordered.
  friend bool operator==(const QuadResult& a, const QuadResult& b);

 private:
  QuadResult() = default;
  explicit QuadResult(std::array<Element, 2> roots) : roots_(roots) {}

  std::optional<std::array<Element, 2>> roots_;
};

// delta with T_n(delta) = 1: 1 for odd n, otherwise the lowest-degree basis
// monomial of absolute trace 1.
Element find_delta(const Field& field);

// Holds delta and the partial sums of its conjugates for one field. The
// field must outlive the solver. Immutable after construction.
class QuadraticSolver {
 public:
  explicit QuadraticSolver(const Field& field);

  const Field& field() const { return *field_; }
  const Element& delta() const { return delta_; }

  QuadResult solve_artin_schreier(const Element& a) const;
  // z^2 + u z = v through z = u y, y^2 + y = v / u^2. Throws DomainError if
  // u = 0.
  QuadResult solve_scaled(const Element& u, const Element& v) const;

 private:
  const Field* field_;
  Element delta_;
  // partial_[i] = sum_{j=i+1}^{n-1} delta^(2^j), i = 0..n-2
  std::vector<Element> partial_;
};

// One-shot conveniences; each builds a QuadraticSolver.
QuadResult solve_artin_schreier(const Element& a);
QuadResult solve_scaled(const Element& u, const Element& v);

}  // namespace gf2bl
