#include "gf2bl/spectrum.hpp"

#include <stdexcept>
#include <string>

#include "gf2bl/errors.hpp"
#include "gf2bl/trace.hpp"
#include "parallel.hpp"

namespace gf2bl {

namespace {

std::uint64_t field_size(const BLContext& ctx) {
  const unsigned n = ctx.field().degree();
  if (n > kMaxEnumerationDegree) {
    throw std::invalid_argument("exhaustive enumeration over GF(2^" +
                                std::to_string(n) + ") is not supported");
  }
  return std::uint64_t{1} << n;
}

template <class Predicate>
std::uint64_t count_if_all(const BLContext& ctx, Predicate pred) {
  const Field& field = ctx.field();
  std::uint64_t total = 0;
  for (std::uint64_t part : detail::partitioned(
           field_size(ctx), [&](std::uint64_t begin, std::uint64_t end) {
             std::uint64_t count = 0;
             for (std::uint64_t v = begin; v < end; ++v) {
               if (pred(field.element(v))) ++count;
             }
             return count;
           })) {
    total += part;
  }
  return total;
}

// Preimage counts indexed by the encoding of f(x).
std::vector<std::uint32_t> preimage_counts(const BLContext& ctx) {
  const std::uint64_t size = field_size(ctx);
  const Field& field = ctx.field();
  std::vector<std::uint32_t> counts(size, 0);
  for (const auto& part : detail::partitioned(
           size, [&](std::uint64_t begin, std::uint64_t end) {
             std::vector<std::uint32_t> local(size, 0);
             for (std::uint64_t x = begin; x < end; ++x) {
               ++local[static_cast<std::size_t>(
                   eval_f(field.element(x), ctx).bits())];
             }
             return local;
           })) {
    for (std::size_t i = 0; i < size; ++i) counts[i] += part[i];
  }
  return counts;
}

}  // namespace

Spectrum spectrum_formula(unsigned k) {
  if (k < 1 || k > 30) throw std::invalid_argument("k must be in [1, 30]");
  const Word q3 = Word{1} << (3 * k);
  const Word q4 = Word{1} << (4 * k);
  return Spectrum{(5 * q4 - q3) / 8, (q4 + q3) / 4, (q4 - q3) / 8};
}

Spectrum spectrum_classify(const BLContext& ctx) {
  const Field& field = ctx.field();
  Spectrum total;
  for (const Spectrum& part : detail::partitioned(
           field_size(ctx), [&](std::uint64_t begin, std::uint64_t end) {
             Spectrum s;
             for (std::uint64_t b = begin; b < end; ++b) {
               switch (classify(field.element(b), ctx).count) {
                 case 0: ++s.n0; break;
                 case 2: ++s.n2; break;
                 case 4: ++s.n4; break;
                 default: throw InternalError("classification count not in {0,2,4}");
               }
             }
             return s;
           })) {
    total.n0 += part.n0;
    total.n2 += part.n2;
    total.n4 += part.n4;
  }
  return total;
}

std::map<std::uint32_t, std::uint64_t> preimage_histogram(const BLContext& ctx) {
  std::map<std::uint32_t, std::uint64_t> histogram;
  for (std::uint32_t c : preimage_counts(ctx)) ++histogram[c];
  return histogram;
}

Spectrum spectrum_brute(const BLContext& ctx) {
  Spectrum s;
  for (const auto& [size, count] : preimage_histogram(ctx)) {
    switch (size) {
      case 0: s.n0 = count; break;
      case 2: s.n2 = count; break;
      case 4: s.n4 = count; break;
      default:
        throw InternalError(std::to_string(count) + " values of b have " +
                            std::to_string(size) + " preimages");
    }
  }
  return s;
}

std::vector<Element> oracle_solve(const Element& b, const BLContext& ctx) {
  const Field& field = ctx.field();
  std::vector<Element> out;
  for (const auto& part : detail::partitioned(
           field_size(ctx), [&](std::uint64_t begin, std::uint64_t end) {
             std::vector<Element> found;
             for (std::uint64_t v = begin; v < end; ++v) {
               const Element x = field.element(v);
               if (eval_f(x, ctx) == b) found.push_back(x);
             }
             return found;
           })) {
    out.insert(out.end(), part.begin(), part.end());
  }
  // Chunks are in ascending order, so out is already sorted.
  return out;
}

std::vector<std::vector<Element>> preimage_table(const BLContext& ctx) {
  const std::uint64_t size = field_size(ctx);
  const Field& field = ctx.field();
  std::vector<std::vector<Element>> table(size);
  for (std::uint64_t v = 0; v < size; ++v) {
    const Element x = field.element(v);
    table[static_cast<std::size_t>(eval_f(x, ctx).bits())].push_back(x);
  }
  return table;
}

std::uint64_t count_prop10(const BLContext& ctx, bool i) {
  const unsigned k = ctx.k();
  return count_if_all(ctx, [&](const Element& b) {
    if (!trace_linear(b, k, 4 * k).is_one()) return false;
    return abs_trace_bit(frobenius(b, 2 * k) * b, 2 * k) == i;
  });
}

std::uint64_t count_prop11(const BLContext& ctx) {
  const unsigned k = ctx.k();
  const Element one = ctx.field().one();
  return count_if_all(ctx, [&](const Element& c) {
    if (trace_linear(c, k, 4 * k).is_one()) return false;
    const Element w = one + c + frobenius(c, 2 * k);
    return !abs_trace_bit(frobenius(w, k) * w, k);
  });
}

}  // namespace gf2bl
