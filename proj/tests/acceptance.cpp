// Acceptance suite: one line per criterion, exit status 0 iff all pass.
//
// Every check is exact; runtime budgets are enforced where stated.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gf2bl/bracken_leander.hpp"
#include "gf2bl/field.hpp"
#include "gf2bl/quadratic.hpp"
#include "gf2bl/spectrum.hpp"
#include "gf2bl/trace.hpp"

namespace gf2bl {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void budget(double elapsed, double limit, const std::string& what) {
    if (elapsed >= limit) {
      fail(what + " took " + std::to_string(elapsed) + " s (limit " +
           std::to_string(limit) + " s)");
    }
  }
};

Element random_element(const Field& field, std::mt19937_64& rng) {
  const Word v = (Word{rng()} << 64) | rng();
  return field.element(v & field.mask());
}

std::string spectrum_text(const Spectrum& s) {
  return "(" + decimal_string(s.n0) + "," + decimal_string(s.n2) + "," +
         decimal_string(s.n4) + ")";
}

// 1. Spectrum exactness.
Outcome spectrum_exactness() {
  Outcome o;
  const Spectrum expected[] = {{9, 6, 1}, {152, 80, 24}, {2496, 1152, 448}};
  auto start = Clock::now();
  for (unsigned k = 1; k <= 3; ++k) {
    const BLContext ctx = make_context(k);
    const Spectrum f = spectrum_formula(k);
    const Spectrum c = spectrum_classify(ctx);
    const Spectrum b = spectrum_brute(ctx);
    o.require(f == expected[k - 1] && c == f && b == f,
              "k=" + std::to_string(k) + " formula " + spectrum_text(f) +
                  " classify " + spectrum_text(c) + " brute " + spectrum_text(b));
  }
  o.budget(seconds_since(start), 1.0, "k<=3 spectra");

  start = Clock::now();
  const Spectrum b4 = spectrum_brute(make_context(4));
  o.budget(seconds_since(start), 10.0, "k=4 brute");
  o.require(b4 == spectrum_formula(4), "k=4 brute " + spectrum_text(b4));
  return o;
}

// 2. Per-b oracle equivalence for every b, k = 1..3.
Outcome per_b_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  for (unsigned k = 1; k <= 3 && o.passed; ++k) {
    const BLContext ctx = make_context(k);
    for (Word v = 0; v < (Word{1} << (4 * k)); ++v) {
      const Element b = ctx.field().element(v);
      if (solve(b, ctx).solutions != oracle_solve(b, ctx)) {
        o.fail("k=" + std::to_string(k) + " b=" + encode_hex(b));
        break;
      }
    }
  }
  o.budget(seconds_since(start), 30.0, "per-b equivalence");
  return o;
}

// 3. Sampled soundness at k = 4, 5, 8.
Outcome sampled_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  for (unsigned k : {4u, 5u, 8u}) {
    const BLContext ctx = make_context(k);
    std::mt19937_64 rng(20240000 + k);
    for (int i = 0; i < 1000; ++i) {
      const Element b = random_element(ctx.field(), rng);
      const SolutionReport r = solve(b, ctx);
      const auto& xs = r.solutions;
      bool ok = xs.size() == 0 || xs.size() == 2 || xs.size() == 4;
      for (const Element& x : xs) {
        ok = ok && eval_f(x, ctx) == b &&
             std::binary_search(xs.begin(), xs.end(), x + ctx.field().one());
      }
      if (!ok) {
        o.fail("k=" + std::to_string(k) + " b=" + encode_hex(b));
        break;
      }
    }
  }
  o.budget(seconds_since(start), 10.0, "sampled equivalence");
  return o;
}

// 4. Counting identities.
Outcome counting_identities() {
  Outcome o;
  for (unsigned k = 1; k <= 3; ++k) {
    const BLContext ctx = make_context(k);
    const std::uint64_t q3 = std::uint64_t{1} << (3 * k);
    const std::uint64_t q4 = std::uint64_t{1} << (4 * k);
    for (bool i : {false, true}) {
      const std::uint64_t got = count_prop10(ctx, i);
      o.require(got == q3 / 2, "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                   " count " + std::to_string(got));
    }
    const std::uint64_t got = count_prop11(ctx);
    o.require(got == (q4 - q3) / 2,
              "k=" + std::to_string(k) + " c-count " + std::to_string(got));
  }
  return o;
}

bool quadratic_sound(const QuadraticSolver& solver, const Element& a) {
  const QuadResult r = solver.solve_artin_schreier(a);
  const bool solvable = !abs_trace_bit(a, a.field().degree());
  if (r.has_roots() != solvable) return false;
  if (!solvable) return true;
  return std::all_of(r.roots().begin(), r.roots().end(),
                     [&](const Element& x) { return x * x + x == a; });
}

// 5. Quadratic solver soundness.
Outcome quadratic_soundness() {
  Outcome o;
  for (unsigned n = 2; n <= 12; ++n) {
    const FieldPtr field = Field::create(n);
    const QuadraticSolver solver(*field);
    std::uint64_t solvable = 0;
    for (Word v = 0; v < (Word{1} << n); ++v) {
      const Element a = field->element(v);
      solvable += solver.solve_artin_schreier(a).has_roots();
      if (!quadratic_sound(solver, a)) {
        o.fail("n=" + std::to_string(n) + " a=" + encode_hex(a));
        return o;
      }
    }
    o.require(solvable == (std::uint64_t{1} << (n - 1)),
              "n=" + std::to_string(n) + " solvable count " + std::to_string(solvable));
  }
  for (unsigned n : {16u, 32u, 64u}) {
    const FieldPtr field = Field::create(n);
    const QuadraticSolver solver(*field);
    std::mt19937_64 rng(n);
    for (int i = 0; i < 10000; ++i) {
      const Element a = random_element(*field, rng);
      if (!quadratic_sound(solver, a)) {
        o.fail("n=" + std::to_string(n) + " a=" + encode_hex(a));
        return o;
      }
    }
  }
  return o;
}

bool trace_identities(const Element& x) {
  const unsigned n = x.field().degree();
  for (unsigned L = 1; L <= n; ++L) {
    if (n % L != 0) continue;
    if (!(trace_linear(x + square(x), 1, L) == x + frobenius(x, L))) return false;
    const Element full = trace_linear(x, 1, L);
    for (unsigned l = 1; l <= L; ++l) {
      if (L % l != 0) continue;
      if (!(full == trace_linear(trace_linear(x, l, L), 1, l))) return false;
      if (!(full == trace_linear(trace_linear(x, 1, l), l, L))) return false;
    }
  }
  return true;
}

// 6. Trace identities.
Outcome trace_identity_check() {
  Outcome o;
  for (unsigned n = 1; n <= 12; ++n) {
    const FieldPtr field = Field::create(n);
    for (Word v = 0; v < (Word{1} << n); ++v) {
      if (!trace_identities(field->element(v))) {
        o.fail("n=" + std::to_string(n) + " x=" + hex_string(v));
        return o;
      }
    }
  }
  for (unsigned n : {16u, 32u}) {
    const FieldPtr field = Field::create(n);
    std::mt19937_64 rng(n + 1);
    for (int i = 0; i < 10000; ++i) {
      const Element x = random_element(*field, rng);
      if (!trace_identities(x)) {
        o.fail("n=" + std::to_string(n) + " x=" + encode_hex(x));
        return o;
      }
    }
  }
  return o;
}

bool shift_ok(const Element& x, const Element& alpha, const Element& beta, unsigned k) {
  const Element fx = eval_f(x, k);
  const Element bq = frobenius(beta, k);
  return eval_f(x + alpha, k) == fx + alpha + square(alpha) &&
         eval_f(x + beta, k) ==
             fx + (beta + bq) * (x + frobenius(x, 2 * k)) + square(beta) + bq;
}

// 7. Shift identities.
Outcome shift_identities() {
  Outcome o;
  {
    const FieldPtr field = Field::create(4);
    for (Word x = 0; x < 16; ++x) {
      for (Word a = 0; a < 16; ++a) {
        for (Word b = 0; b < 16; ++b) {
          const Element alpha = field->element(a);
          const Element beta = field->element(b);
          if (!in_subfield(alpha, 1) || !in_subfield(beta, 2)) continue;
          o.require(shift_ok(field->element(x), alpha, beta, 1),
                    "k=1 x=" + hex_string(x));
        }
      }
    }
  }
  for (unsigned k : {2u, 3u, 4u, 8u}) {
    const FieldPtr field = Field::create(4 * k);
    std::mt19937_64 rng(k);
    for (int i = 0; i < 10000; ++i) {
      const Element x = random_element(*field, rng);
      const Element alpha = trace_linear(random_element(*field, rng), k, 4 * k);
      const Element beta = trace_linear(random_element(*field, rng), 2 * k, 4 * k);
      if (!shift_ok(x, alpha, beta, k)) {
        o.fail("k=" + std::to_string(k) + " x=" + encode_hex(x));
        return o;
      }
    }
  }
  return o;
}

// Returns false on violation; counts applicable b.
bool c_relations(const Element& b, const BLContext& ctx, std::uint64_t& applicable) {
  const unsigned k = ctx.k();
  const Element one = ctx.field().one();
  const Element e = compute_e(b, ctx);
  if (e.is_one()) return true;
  const Element c = find_c(b, e, ctx);
  if (!(trace_linear(c, k, 4 * k) == e)) return true;
  ++applicable;
  const Element cq2 = frobenius(c, 2 * k);
  const Element w = one + c + cq2;
  const bool t1 = abs_trace_bit(frobenius(w, k) * w, k);
  const bool t2 = abs_trace_bit(cq2 * c, 2 * k);
  const Element lhs1 = trace_linear(eval_f(c, k) + b, 1, k);
  const Element lhs2 = trace_linear(eval_f(c + ctx.omega() * (e + one), k) + b, 1, k);
  return lhs1.bits() == Word{t1 != t2} && lhs2.bits() == Word{!t2};
}

// 8. Trace relations for c.
Outcome c_relation_check() {
  Outcome o;
  std::uint64_t applicable = 0;
  for (unsigned k = 1; k <= 2; ++k) {
    const BLContext ctx = make_context(k);
    for (Word v = 0; v < (Word{1} << (4 * k)); ++v) {
      const Element b = ctx.field().element(v);
      o.require(c_relations(b, ctx, applicable),
                "k=" + std::to_string(k) + " b=" + encode_hex(b));
    }
  }
  const BLContext ctx = make_context(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    const Element b = random_element(ctx.field(), rng);
    o.require(c_relations(b, ctx, applicable), "k=3 b=" + encode_hex(b));
  }
  o.require(applicable > 0, "no applicable b");
  return o;
}

}  // namespace
}  // namespace gf2bl

int main() {
  using namespace gf2bl;
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "spectrum formula = classify = brute, k=1..3 (+k=4 brute)", spectrum_exactness},
      {"AC2", "solve(b) = brute-force preimages for every b, k=1..3", per_b_equivalence},
      {"AC3", "1000 sampled b at k=4,5,8 give sound solution sets", sampled_equivalence},
      {"AC4", "counting identities q^3/2 and (q^4-q^3)/2, k=1..3", counting_identities},
      {"AC5", "x^2+x=a solvable iff T_n(a)=0, roots verified", quadratic_soundness},
      {"AC6", "trace composition identities, n<=12 exhaustive, n=16,32 sampled",
       trace_identity_check},
      {"AC7", "shift identities for alpha in GF(q), beta in GF(q^2)", shift_identities},
      {"AC8", "T_k(f(c)+b)=t1+t2 and T_k(f(c+omega(e+1))+b)=t2+1", c_relation_check},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    std::printf("%s %s  %s  [%.3f s]%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title,
                elapsed, o.passed ? "" : "  -- ", o.detail.c_str());
    failures += !o.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
