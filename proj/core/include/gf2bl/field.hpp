#pragma once

// Arithmetic in GF(2^n), 1 <= n <= 128, in polynomial basis.
//
// An element is the residue of a polynomial over GF(2) modulo a fixed
// irreducible polynomial of degree n; bit i of its integer encoding is the
// coefficient of z^i. Representations are always reduced, so equality is
// bitwise.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace gf2bl {

using Word = unsigned __int128;

inline constexpr unsigned kMaxDegree = 128;

// Mask of the low n bits, n in [0, 128].
constexpr Word low_mask(unsigned n) {
  return n >= 128 ? ~Word{0} : ((Word{1} << n) - 1);
}

// The polynomial z^degree + low over GF(2), with deg(low) < degree.
class Modulus {
 public:
  Modulus(unsigned degree, Word low);

  unsigned degree() const { return degree_; }
  Word low() const { return low_; }
  bool coefficient(unsigned i) const;

  // Hex of the full (degree+1)-bit encoding, e.g. "0x13" for z^4+z+1.
  std::string to_hex() const;
  // Accepts an optional 0x/0X prefix and either case. The degree is the
  // position of the highest set bit.
  static Modulus from_hex(std::string_view text);

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  unsigned degree_;
  Word low_;
};

// Irreducibility over GF(2) (Rabin's test). Polynomials with a zero constant
// term are rejected, including z itself.
bool is_irreducible(const Modulus& modulus);

// The degree-n irreducible polynomial with the smallest integer encoding.
Modulus find_irreducible(unsigned n);

class Element;

// Field parameters. Immutable once created; elements keep a raw pointer to
// their field, so the Field must outlive every Element bound to it.
class Field {
 public:
  // GF(2^n) with the smallest irreducible modulus of degree n.
  static std::shared_ptr<const Field> create(unsigned n);
  // Throws std::invalid_argument if the modulus is not irreducible.
  static std::shared_ptr<const Field> create(const Modulus& modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned degree() const { return modulus_.degree(); }
  const Modulus& modulus() const { return modulus_; }
  Word mask() const { return mask_; }

  Element zero() const;
  Element one() const;
  // z^i reduced, i < n.
  Element monomial(unsigned i) const;
  // Throws DomainError if bits >= 2^n.
  Element element(Word bits) const;

  Word mul_bits(Word a, Word b) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  explicit Field(const Modulus& modulus);

  Modulus modulus_;
  Word mask_;
};

using FieldPtr = std::shared_ptr<const Field>;

class Element {
 public:
  // Unbound element; any arithmetic on it throws FieldMismatch.
  Element() = default;

  const Field& field() const;
  const Field* field_ptr() const { return field_; }
  Word bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }
  bool is_one() const { return bits_ == 1; }

  Element& operator+=(const Element& other);
  Element& operator*=(const Element& other);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }

  friend bool operator==(const Element& a, const Element& b) {
    return a.bits_ == b.bits_ && same_field(a, b);
  }
  // Ordering is by integer encoding.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.bits_ <=> b.bits_;
  }

  static bool same_field(const Element& a, const Element& b);

 private:
  friend class Field;
  Element(const Field* field, Word bits) : field_(field), bits_(bits) {}

  const Field* field_ = nullptr;
  Word bits_ = 0;
};

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element square(const Element& a);
// a^(2^i); i may exceed n.
Element frobenius(const Element& a, unsigned i);
// Throws DomainError on zero.
Element inv(const Element& a);
// The unique square root, a^(2^(n-1)).
Element sqrt(const Element& a);
// a^exponent by square-and-multiply; 0^0 = 1.
Element pow(const Element& a, Word exponent);
// True iff a lies in GF(2^m). Throws std::invalid_argument unless m | n.
bool in_subfield(const Element& a, unsigned m);

// Lowercase, 0x-prefixed, no leading zeros: "0x0", "0x1b".
std::string encode_hex(const Element& a);
// Inverse of encode_hex. Prefix optional, case-insensitive. Throws ParseError
// on malformed text or a value >= 2^n.
Element decode_hex(std::string_view text, const Field& field);

// Hex helpers shared by the element and modulus codecs.
std::string hex_string(Word value);
// Parses into a 129-bit value {bit128, low}. Throws ParseError.
struct WideValue {
  bool bit128 = false;
  Word low = 0;
};
WideValue parse_hex_wide(std::string_view text);

// Decimal rendering of a 128-bit unsigned value.
std::string decimal_string(Word value);

}  // namespace gf2bl
