#include "gf2bl/verification.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2bl/spectrum.hpp"
#include "gf2bl/trace.hpp"

namespace gf2bl {

Element random_element(const Field& field, std::mt19937_64& rng) {
  const Word hi = rng();
  const Word lo = rng();
  return field.element(((hi << 64) | lo) & field.mask());
}

bool shift_identities_hold(const Element& x, const Element& alpha,
                           const Element& beta, const BLContext& ctx) {
  const unsigned k = ctx.k();
  if (!in_subfield(alpha, k)) {
    throw std::invalid_argument("alpha is not in GF(q)");
  }
  if (!in_subfield(beta, 2 * k)) {
    throw std::invalid_argument("beta is not in GF(q^2)");
  }
  const Element fx = eval_f(x, ctx);
  if (!(eval_f(x + alpha, ctx) == fx + alpha + square(alpha))) return false;
  const Element beta_q = frobenius(beta, k);
  return eval_f(x + beta, ctx) ==
         fx + (beta + beta_q) * (x + frobenius(x, 2 * k)) + square(beta) +
             beta_q;
}

bool trace_relations_hold(const Element& b, const BLContext& ctx) {
  const unsigned k = ctx.k();
  const Element one = ctx.field().one();
  const Element e = compute_e(b, ctx);
  if (e.is_one()) return true;
  const Element c0 = find_c(b, e, ctx);
  for (const Element& c : {c0, c0 + e + one}) {
    if (!(square(c) + (e + one) * c == frobenius(b, k))) return false;
    const Element tc = trace_linear(c, k, 4 * k);
    if (tc.is_one()) continue;
    if (!(tc == e)) return false;
    const Element cq2 = frobenius(c, 2 * k);
    const Element w = one + c + cq2;
    const bool t1 = abs_trace_bit(frobenius(w, k) * w, k);
    const bool t2 = abs_trace_bit(cq2 * c, 2 * k);
    const Element lhs1 = trace_linear(eval_f(c, ctx) + b, 1, k);
    const Element lhs2 =
        trace_linear(eval_f(c + ctx.omega() * (e + one), ctx) + b, 1, k);
    if (lhs1.bits() != static_cast<Word>(t1 != t2)) return false;
    if (lhs2.bits() != static_cast<Word>(!t2)) return false;
  }
  return true;
}

bool solution_set_sound(const SolutionReport& report, const BLContext& ctx) {
  const auto& xs = report.solutions;
  if (xs.size() != report.count) return false;
  if (xs.size() != 0 && xs.size() != 2 && xs.size() != 4) return false;
  if (!std::is_sorted(xs.begin(), xs.end())) return false;
  const unsigned k = ctx.k();
  for (const Element& x : xs) {
    if (!(eval_f(x, ctx) == report.b)) return false;
    if (!std::binary_search(xs.begin(), xs.end(), x + ctx.field().one())) {
      return false;
    }
    if (!(trace_linear(x, k, 4 * k) == report.e)) return false;
  }
  return true;
}

namespace {

CheckResult fail(std::string name, std::string detail) {
  return CheckResult{std::move(name), false, std::move(detail)};
}

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, {}}; }

// Uniform elements of GF(q) and GF(q^2) as relative traces of random elements.
CheckResult check_shift_sampled(const BLContext& ctx, std::uint64_t samples,
                                std::mt19937_64& rng) {
  const unsigned k = ctx.k();
  const char* name = "shift identities";
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element x = random_element(ctx.field(), rng);
    const Element alpha = trace_linear(random_element(ctx.field(), rng), k, 4 * k);
    const Element beta =
        trace_linear(random_element(ctx.field(), rng), 2 * k, 4 * k);
    if (!shift_identities_hold(x, alpha, beta, ctx)) {
      return fail(name, "x=" + encode_hex(x) + " alpha=" + encode_hex(alpha) +
                            " beta=" + encode_hex(beta));
    }
  }
  return pass(name);
}

CheckResult check_shift_exhaustive(const BLContext& ctx) {
  const Field& field = ctx.field();
  const unsigned k = ctx.k();
  const std::uint64_t size = std::uint64_t{1} << field.degree();
  std::vector<Element> small, medium;
  for (std::uint64_t v = 0; v < size; ++v) {
    const Element y = field.element(v);
    if (in_subfield(y, k)) small.push_back(y);
    if (in_subfield(y, 2 * k)) medium.push_back(y);
  }
  for (std::uint64_t v = 0; v < size; ++v) {
    const Element x = field.element(v);
    for (const Element& alpha : small) {
      for (const Element& beta : medium) {
        if (!shift_identities_hold(x, alpha, beta, ctx)) {
          return fail("shift identities",
                      "x=" + encode_hex(x) + " alpha=" + encode_hex(alpha) +
                          " beta=" + encode_hex(beta));
        }
      }
    }
  }
  return pass("shift identities");
}

}  // namespace

std::vector<CheckResult> verify_exhaustive(const BLContext& ctx,
                                           std::uint64_t samples,
                                           std::uint64_t seed) {
  std::vector<CheckResult> results;
  const Field& field = ctx.field();
  const unsigned k = ctx.k();
  const std::uint64_t size = std::uint64_t{1} << field.degree();

  {
    const auto table = preimage_table(ctx);
    CheckResult r = pass("solver matches brute force for every b");
    for (std::uint64_t v = 0; v < size && r.passed; ++v) {
      const Element b = field.element(v);
      if (solve(b, ctx).solutions != table[v]) r = fail(r.name, "b=" + encode_hex(b));
    }
    results.push_back(r);
  }

  {
    const Spectrum formula = spectrum_formula(k);
    const Spectrum by_class = spectrum_classify(ctx);
    const Spectrum brute = spectrum_brute(ctx);
    results.push_back(formula == by_class && by_class == brute
                          ? pass("spectrum formula = classify = brute")
                          : fail("spectrum formula = classify = brute",
                                 "mismatch at k=" + std::to_string(k)));
  }

  const std::uint64_t q3 = std::uint64_t{1} << (3 * k);
  const std::uint64_t q4 = std::uint64_t{1} << (4 * k);
  for (bool i : {false, true}) {
    const std::uint64_t got = count_prop10(ctx, i);
    const std::string name = std::string("count T_k^4k(b)=1, T_2k(b^(q^2+1))=") +
                             (i ? "1" : "0");
    results.push_back(got == q3 / 2 ? pass(name)
                                    : fail(name, "got " + std::to_string(got)));
  }
  {
    const std::uint64_t got = count_prop11(ctx);
    const std::string name = "count T_k((1+c+c^(q^2))^(q+1))=0";
    results.push_back(got == (q4 - q3) / 2
                          ? pass(name)
                          : fail(name, "got " + std::to_string(got)));
  }

  if (k == 1) {
    results.push_back(check_shift_exhaustive(ctx));
  } else {
    std::mt19937_64 rng(seed);
    results.push_back(check_shift_sampled(ctx, samples, rng));
  }

  {
    CheckResult r = pass("trace relations for c");
    for (std::uint64_t v = 0; v < size && r.passed; ++v) {
      const Element b = field.element(v);
      if (!trace_relations_hold(b, ctx)) r = fail(r.name, "b=" + encode_hex(b));
    }
    results.push_back(r);
  }
  return results;
}

std::vector<CheckResult> verify_sampled(const BLContext& ctx,
                                        std::uint64_t samples,
                                        std::uint64_t seed) {
  std::vector<CheckResult> results;
  std::mt19937_64 rng(seed);

  CheckResult sound = pass("solutions sound for sampled b");
  CheckResult relations = pass("trace relations for sampled b");
  for (std::uint64_t s = 0; s < samples; ++s) {
    const Element b = random_element(ctx.field(), rng);
    if (sound.passed && !solution_set_sound(solve(b, ctx), ctx)) {
      sound = fail(sound.name, "b=" + encode_hex(b));
    }
    if (relations.passed && !trace_relations_hold(b, ctx)) {
      relations = fail(relations.name, "b=" + encode_hex(b));
    }
  }
  results.push_back(sound);
  results.push_back(relations);
  results.push_back(check_shift_sampled(ctx, samples, rng));
  return results;
}

}  // namespace gf2bl
