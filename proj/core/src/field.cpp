#include "gf2bl/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gf2_poly.hpp"
#include "gf2bl/errors.hpp"

namespace gf2bl {

Modulus::Modulus(unsigned degree, Word low) : degree_(degree), low_(low) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("modulus degree must be in [1, 128], got " +
                                std::to_string(degree));
  }
  if ((low & ~low_mask(degree)) != 0) {
    throw std::invalid_argument("modulus low part exceeds its degree");
  }
}

bool Modulus::coefficient(unsigned i) const {
  if (i == degree_) return true;
  if (i > degree_) return false;
  return ((low_ >> i) & 1) != 0;
}

std::string Modulus::to_hex() const {
  if (degree_ == 128) {
    std::string digits = hex_string(low_).substr(2);
    return "0x1" + std::string(32 - digits.size(), '0') + digits;
  }
  return hex_string(low_ | (Word{1} << degree_));
}

Modulus Modulus::from_hex(std::string_view text) {
  const WideValue v = parse_hex_wide(text);
  if (v.bit128) return Modulus(128, v.low);
  const unsigned width = detail::bit_width(v.low);
  if (width < 2) {
    throw ParseError("modulus must have degree >= 1: " + std::string(text));
  }
  const unsigned degree = width - 1;
  return Modulus(degree, v.low ^ (Word{1} << degree));
}

bool is_irreducible(const Modulus& modulus) {
  const unsigned n = modulus.degree();
  const Word low = modulus.low();
  if ((low & 1) == 0) return false;

  // z mod f
  const Word z = n == 1 ? low : Word{2};
  // frob[i] = z^(2^i) mod f
  std::vector<Word> frob(n + 1);
  frob[0] = z;
  for (unsigned i = 1; i <= n; ++i) {
    frob[i] = detail::mul_mod(frob[i - 1], frob[i - 1], n, low);
  }
  if (frob[n] != z) return false;

  unsigned rest = n;
  for (unsigned p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    const Word g = frob[n / p] ^ z;
    if (g == 0) return false;
    if (g == 1) continue;
    // gcd(f, g) with f = z^n + low, computed as gcd(g, f mod g).
    Word zn = 1;
    const Word top = Word{1} << (detail::bit_width(g) - 1);
    for (unsigned i = 0; i < n; ++i) {
      zn <<= 1;
      if (zn & top) zn ^= g;
    }
    const Word f_mod_g = zn ^ detail::poly_mod(low, g);
    if (detail::poly_gcd(g, f_mod_g) != 1) return false;
  }
  return true;
}

Modulus find_irreducible(unsigned n) {
  if (n < 1 || n > kMaxDegree) {
    throw std::invalid_argument("degree must be in [1, 128]");
  }
  for (Word low = 1;; low += 2) {
    Modulus candidate(n, low);
    if (is_irreducible(candidate)) return candidate;
  }
}

Field::Field(const Modulus& modulus)
    : modulus_(modulus), mask_(low_mask(modulus.degree())) {}

std::shared_ptr<const Field> Field::create(unsigned n) {
  return std::shared_ptr<const Field>(new Field(find_irreducible(n)));
}

std::shared_ptr<const Field> Field::create(const Modulus& modulus) {
  if (!is_irreducible(modulus)) {
    throw std::invalid_argument("modulus " + modulus.to_hex() +
                                " is not irreducible");
  }
  return std::shared_ptr<const Field>(new Field(modulus));
}

Element Field::zero() const { return Element(this, 0); }
Element Field::one() const { return Element(this, 1); }

Element Field::monomial(unsigned i) const {
  if (i >= degree()) {
    throw std::invalid_argument("monomial index out of range");
  }
  return Element(this, Word{1} << i);
}

Element Field::element(Word bits) const {
  if ((bits & ~mask_) != 0) {
    throw DomainError("value does not fit in GF(2^" +
                      std::to_string(degree()) + ")");
  }
  return Element(this, bits);
}

Word Field::mul_bits(Word a, Word b) const {
  return detail::mul_mod(a, b, degree(), modulus_.low());
}

const Field& Element::field() const {
  if (field_ == nullptr) throw FieldMismatch("element is not bound to a field");
  return *field_;
}

bool Element::same_field(const Element& a, const Element& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return false;
  return a.field_ == b.field_ || *a.field_ == *b.field_;
}

namespace {

void require_same_field(const Element& a, const Element& b) {
  if (!Element::same_field(a, b)) {
    throw FieldMismatch("operands belong to different fields");
  }
}

}  // namespace

Element& Element::operator+=(const Element& other) {
  require_same_field(*this, other);
  bits_ ^= other.bits_;
  return *this;
}

Element& Element::operator*=(const Element& other) {
  require_same_field(*this, other);
  bits_ = field_->mul_bits(bits_, other.bits_);
  return *this;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element mul(const Element& a, const Element& b) { return a * b; }
Element square(const Element& a) { return a * a; }

Element frobenius(const Element& a, unsigned i) {
  const Field& f = a.field();
  Word bits = a.bits();
  for (i %= f.degree(); i > 0; --i) bits = f.mul_bits(bits, bits);
  return f.element(bits);
}

Element inv(const Element& a) {
  if (a.is_zero()) throw DomainError("zero has no multiplicative inverse");
  // a^(2^n - 2) = prod_{i=1}^{n-1} a^(2^i)
  const Field& f = a.field();
  Element power = a;
  Element result = f.one();
  for (unsigned i = 1; i < f.degree(); ++i) {
    power = square(power);
    result *= power;
  }
  return result;
}

Element sqrt(const Element& a) { return frobenius(a, a.field().degree() - 1); }

Element pow(const Element& a, Word exponent) {
  Element result = a.field().one();
  Element base = a;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1) result *= base;
    base = square(base);
  }
  return result;
}

bool in_subfield(const Element& a, unsigned m) {
  const unsigned n = a.field().degree();
  if (m == 0 || n % m != 0) {
    throw std::invalid_argument("subfield degree " + std::to_string(m) +
                                " does not divide " + std::to_string(n));
  }
  return frobenius(a, m) == a;
}

std::string hex_string(Word value) {
  static constexpr char kDigits[] = "0123456789abcdef";
  if (value == 0) return "0x0";
  std::string out;
  for (; value != 0; value >>= 4) out.push_back(kDigits[value & 0xF]);
  out += "x0";
  std::reverse(out.begin(), out.end());
  return out;
}

WideValue parse_hex_wide(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' &&
      (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  if (digits.empty()) {
    throw ParseError("empty hex value: '" + std::string(text) + "'");
  }
  WideValue v;
  for (char ch : digits) {
    unsigned d;
    if (ch >= '0' && ch <= '9') {
      d = static_cast<unsigned>(ch - '0');
    } else if (ch >= 'a' && ch <= 'f') {
      d = static_cast<unsigned>(ch - 'a' + 10);
    } else if (ch >= 'A' && ch <= 'F') {
      d = static_cast<unsigned>(ch - 'A' + 10);
    } else {
      throw ParseError("malformed hex value: '" + std::string(text) + "'");
    }
    if (v.bit128 || (v.low >> 125) != 0) {
      throw ParseError("hex value too large: '" + std::string(text) + "'");
    }
    v.bit128 = ((v.low >> 124) & 1) != 0;
    v.low = (v.low << 4) | d;
  }
  return v;
}

std::string encode_hex(const Element& a) { return hex_string(a.bits()); }

Element decode_hex(std::string_view text, const Field& field) {
  const WideValue v = parse_hex_wide(text);
  if (v.bit128 || (v.low & ~field.mask()) != 0) {
    throw ParseError("value " + std::string(text) + " is not below 2^" +
                     std::to_string(field.degree()));
  }
  return field.element(v.low);
}

std::string decimal_string(Word value) {
  if (value == 0) return "0";
  std::string out;
  for (; value != 0; value /= 10) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace gf2bl
