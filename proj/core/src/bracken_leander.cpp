#include "gf2bl/bracken_leander.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "gf2_poly.hpp"
#include "gf2bl/errors.hpp"
#include "gf2bl/trace.hpp"

namespace gf2bl {

namespace {

unsigned bl_k(const Field& field) {
  const unsigned n = field.degree();
  if (n % 4 != 0) {
    throw std::invalid_argument("field degree " + std::to_string(n) +
                                " is not of the form 4k");
  }
  return n / 4;
}

// Solves frob(x, 2k) + x = 0, frob(x, k) + x = 1 over the GF(2) coordinates
// of x and returns the solution with the smallest encoding.
Element compute_omega(const Field& field, unsigned k) {
  const unsigned n = field.degree();

  // One row per output coordinate of the stacked linear map; columns are the
  // input coordinates.
  struct Row {
    Word coeffs = 0;
    bool rhs = false;
  };
  std::vector<Row> rows(2 * n);
  for (unsigned j = 0; j < n; ++j) {
    const Element basis = field.monomial(j);
    const Word first = (frobenius(basis, 2 * k) + basis).bits();
    const Word second = (frobenius(basis, k) + basis).bits();
    for (unsigned r = 0; r < n; ++r) {
      if ((first >> r) & 1) rows[r].coeffs |= Word{1} << j;
      if ((second >> r) & 1) rows[n + r].coeffs |= Word{1} << j;
    }
  }
  rows[n].rhs = true;  // constant 1 in the second block

  // Reduced row echelon form.
  std::vector<int> pivot_row_of(n, -1);
  std::size_t rank = 0;
  for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
    const Word bit = Word{1} << col;
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank),
                           rows.end(),
                           [bit](const Row& r) { return (r.coeffs & bit) != 0; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r].coeffs & bit) != 0) {
        rows[r].coeffs ^= rows[rank].coeffs;
        rows[r].rhs ^= rows[rank].rhs;
      }
    }
    pivot_row_of[col] = static_cast<int>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].rhs) throw InternalError("omega system is inconsistent");
  }

  Word particular = 0;
  std::vector<Word> kernel;
  for (unsigned col = 0; col < n; ++col) {
    if (pivot_row_of[col] >= 0) {
      if (rows[static_cast<std::size_t>(pivot_row_of[col])].rhs) {
        particular |= Word{1} << col;
      }
      continue;
    }
    Word v = Word{1} << col;
    for (unsigned p = 0; p < n; ++p) {
      const int r = pivot_row_of[p];
      if (r >= 0 && ((rows[static_cast<std::size_t>(r)].coeffs >> col) & 1)) {
        v |= Word{1} << p;
      }
    }
    kernel.push_back(v);
  }

  // Kernel basis with distinct leading bits, then greedy reduction from the
  // top gives the minimum of the coset.
  std::vector<Word> basis_by_lead(n, 0);
  for (Word v : kernel) {
    for (unsigned lead = detail::bit_width(v); v != 0;
         lead = detail::bit_width(v)) {
      Word& slot = basis_by_lead[lead - 1];
      if (slot == 0) {
        slot = v;
        break;
      }
      v ^= slot;
    }
  }
  Word best = particular;
  for (unsigned bit = n; bit-- > 0;) {
    if (((best >> bit) & 1) && basis_by_lead[bit] != 0) {
      best ^= basis_by_lead[bit];
    }
  }
  return field.element(best);
}

}  // namespace

std::string_view branch_name(Branch branch) {
  return branch == Branch::kEEqualsOne ? "E_EQ_ONE" : "E_NE_ONE";
}

BLContext::BLContext(FieldPtr field)
    : field_(std::move(field)),
      k_(bl_k(*field_)),
      quadratic_(*field_),
      omega_(compute_omega(*field_, k_)) {
  if (!in_subfield(omega_, 2 * k_) ||
      !(frobenius(omega_, k_) + omega_).is_one()) {
    throw InternalError("omega fails omega + omega^q = 1 in GF(q^2)");
  }
}

BLContext make_context(unsigned k) {
  if (k == 0 || 4 * k > kMaxDegree) {
    throw std::invalid_argument("k must be in [1, 32]");
  }
  return BLContext(Field::create(4 * k));
}

BLContext make_context(FieldPtr field) { return BLContext(std::move(field)); }

Element eval_f(const Element& x, unsigned k) {
  if (x.field().degree() != 4 * k) {
    throw std::invalid_argument("eval_f: field degree is not 4k");
  }
  const Element xq = frobenius(x, k);
  const Element xq2 = frobenius(xq, k);
  return xq2 * xq + xq2 * x + xq * x + xq2 + xq + x + x.field().one();
}

Element compute_e(const Element& b, const BLContext& ctx) {
  return trace_linear(b, ctx.k(), 4 * ctx.k());
}

Element find_c(const Element& b, const Element& e, const BLContext& ctx) {
  const Element e_plus_one = e + ctx.field().one();
  if (e_plus_one.is_zero()) throw DomainError("find_c requires e != 1");
  const QuadResult roots =
      ctx.quadratic().solve_scaled(e_plus_one, frobenius(b, ctx.k()));
  if (!roots.has_roots()) {
    throw InternalError("c^2 + (e+1)c = b^q has no root for b = " +
                        encode_hex(b));
  }
  return roots.sorted_roots()[0];
}

SolutionReport classify(const Element& b, const BLContext& ctx) {
  const unsigned k = ctx.k();
  const Element one = ctx.field().one();

  SolutionReport report;
  report.b = b;
  report.e = compute_e(b, ctx);

  if (report.e.is_one()) {
    report.branch = Branch::kEEqualsOne;
    const bool t = abs_trace_bit(frobenius(b, 2 * k) * b, 2 * k);
    report.predicates.trace_b_norm = t;
    report.count = t ? 2 : 0;
    return report;
  }

  report.branch = Branch::kENotOne;
  const Element c = find_c(b, report.e, ctx);
  report.c = c;
  const Element c_trace = trace_linear(c, k, 4 * k);
  report.predicates.c_trace_is_one = c_trace.is_one();
  if (c_trace.is_one()) {
    report.count = 0;
    return report;
  }
  if (!(c_trace == report.e)) {
    throw InternalError("T_k^{4k}(c) is neither 1 nor e for b = " +
                        encode_hex(b));
  }
  const Element cq2 = frobenius(c, 2 * k);
  const Element w = one + c + cq2;
  const bool t1 = abs_trace_bit(frobenius(w, k) * w, k);
  const bool t2 = abs_trace_bit(cq2 * c, 2 * k);
  report.predicates.t1 = t1;
  report.predicates.t2 = t2;
  if (!t1) {
    report.count = 2;
  } else {
    report.count = t2 ? 4 : 0;
  }
  return report;
}

namespace {

// Appends base + alpha and base + alpha + 1 where alpha in GF(q) solves
// alpha^2 + alpha = f(base) + b, if such alpha exists.
void add_coset(const Element& base, const Element& b, const BLContext& ctx,
               std::vector<Element>& out) {
  const unsigned k = ctx.k();
  const Element rhs = eval_f(base, ctx) + b;
  // T_k(y) lies in GF(2) iff y lies in GF(q).
  if (!trace_linear(rhs, 1, k).is_zero()) return;
  const QuadResult alpha = ctx.quadratic().solve_artin_schreier(rhs);
  if (!alpha.has_roots()) {
    throw InternalError("alpha equation unsolvable although T_k vanishes");
  }
  const Element a0 = alpha.roots()[0];
  if (!in_subfield(a0, k)) {
    throw InternalError("alpha = " + encode_hex(a0) + " is not in GF(q)");
  }
  out.push_back(base + a0);
  out.push_back(base + a0 + ctx.field().one());
}

}  // namespace

SolutionReport solve(const Element& b, const BLContext& ctx) {
  SolutionReport report = classify(b, ctx);
  const unsigned k = ctx.k();

  std::vector<Element> roots;
  if (report.branch == Branch::kEEqualsOne) {
    add_coset(frobenius(b, k - 1), b, ctx, roots);
  } else {
    const Element& c = *report.c;
    const Element shift = ctx.omega() * (report.e + ctx.field().one());
    add_coset(c, b, ctx, roots);
    add_coset(c + shift, b, ctx, roots);
  }

  std::sort(roots.begin(), roots.end());
  if (roots.size() != report.count) {
    throw InternalError("constructed " + std::to_string(roots.size()) +
                        " roots but classification predicts " +
                        std::to_string(report.count) + " for b = " +
                        encode_hex(b));
  }
  for (const Element& x : roots) {
    if (!(eval_f(x, ctx) == b)) {
      throw InternalError("constructed x = " + encode_hex(x) +
                          " does not satisfy f(x) = " + encode_hex(b));
    }
  }
  report.solutions = std::move(roots);
  return report;
}

}  // namespace gf2bl
