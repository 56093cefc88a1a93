#ifndef CURLED_FIELD_HPP
#define CURLED_FIELD_HPP

// Exact scalars over a prime field GF(p) or the rationals.
//
// A FieldElement always carries the descriptor of the field it lives in;
// binary operations between elements of different fields throw
// FieldMismatchError. Prime residues are kept in [0, p); rationals are
// kept fully reduced with a positive denominator.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "curled/error.hpp"

namespace curled {

using Integer = mpz_class;
using Rational = mpq_class;

class FieldDescriptor {
 public:
  /// Largest supported prime modulus is below 2^31.
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

  /// Throws InvalidFieldError unless p is a prime below 2^31.
  static FieldDescriptor prime(std::uint64_t p);
  static FieldDescriptor rational() noexcept { return FieldDescriptor{}; }

  bool is_prime() const noexcept { return modulus_ != 0; }
  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_finite() const noexcept { return is_prime(); }

  /// p for GF(p), 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return modulus_; }

  /// Number of elements, empty for the rationals.
  std::optional<std::uint64_t> order() const noexcept {
    if (is_rational()) return std::nullopt;
    return modulus_;
  }

  /// "GF(p)" or "Q".
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  constexpr FieldDescriptor() noexcept = default;
  explicit constexpr FieldDescriptor(std::uint32_t p) noexcept : modulus_(p) {}

  std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldDescriptor& desc);

bool is_prime_number(std::uint64_t n) noexcept;

class FieldElement {
 public:
  static FieldElement zero(FieldDescriptor desc);
  static FieldElement one(FieldDescriptor desc);

  /// Image of n under the canonical ring map Z -> K.
  static FieldElement from_integer(const Integer& n, FieldDescriptor desc);
  static FieldElement from_integer(std::int64_t n, FieldDescriptor desc);

  /// num/den in the rationals, or num * den^-1 in GF(p).
  static FieldElement from_fraction(const Integer& num, const Integer& den, FieldDescriptor desc);

  /// Residue class of r (any value, reduced mod p). Requires a prime field.
  static FieldElement residue(std::uint64_t r, FieldDescriptor desc);

  FieldDescriptor descriptor() const noexcept { return desc_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Canonical residue in [0, p). Throws UnsupportedFieldError over Q.
  std::uint32_t as_residue() const;
  /// The value as a reduced fraction. Throws UnsupportedFieldError over GF(p).
  const Rational& as_rational() const;

  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }
  FieldElement operator-() const;

  /// Elements of different fields compare unequal.
  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

  /// Residue as decimal for GF(p); "n" or "n/d" for rationals.
  std::string to_string() const;

 private:
  FieldElement(FieldDescriptor desc, std::uint32_t r) noexcept : desc_(desc), value_(r) {}
  FieldElement(FieldDescriptor desc, Rational q) : desc_(desc), value_(std::move(q)) {}

  void require_same_field(const FieldElement& other) const {
    if (desc_ != other.desc_) throw_field_mismatch(other);
  }
  [[noreturn]] void throw_field_mismatch(const FieldElement& other) const;

  std::uint32_t residue_unchecked() const noexcept { return *std::get_if<std::uint32_t>(&value_); }
  Rational& rational_unchecked() noexcept { return *std::get_if<Rational>(&value_); }
  const Rational& rational_unchecked() const noexcept { return *std::get_if<Rational>(&value_); }

  FieldDescriptor desc_;
  std::variant<std::uint32_t, Rational> value_;
};

// Prime-field arithmetic is inline; it dominates the enumeration harness.

inline bool FieldElement::is_zero() const noexcept {
  if (desc_.is_prime()) return residue_unchecked() == 0;
  return sgn(rational_unchecked()) == 0;
}

inline bool FieldElement::is_one() const noexcept {
  if (desc_.is_prime()) return residue_unchecked() == 1;
  return rational_unchecked() == 1;
}

inline FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (desc_.is_prime()) {
    const std::uint32_t p = desc_.characteristic();
    std::uint32_t s = residue_unchecked() + rhs.residue_unchecked();
    if (s >= p) s -= p;
    value_ = s;
  } else {
    rational_unchecked() += rhs.rational_unchecked();
  }
  return *this;
}

inline FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (desc_.is_prime()) {
    const std::uint32_t p = desc_.characteristic();
    const std::uint32_t a = residue_unchecked();
    const std::uint32_t b = rhs.residue_unchecked();
    value_ = a >= b ? a - b : a + (p - b);
  } else {
    rational_unchecked() -= rhs.rational_unchecked();
  }
  return *this;
}

inline FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (desc_.is_prime()) {
    const std::uint64_t prod =
        std::uint64_t{residue_unchecked()} * std::uint64_t{rhs.residue_unchecked()};
    value_ = static_cast<std::uint32_t>(prod % desc_.characteristic());
  } else {
    rational_unchecked() *= rhs.rational_unchecked();
  }
  return *this;
}

inline FieldElement FieldElement::operator-() const {
  if (desc_.is_prime()) {
    const std::uint32_t a = residue_unchecked();
    return FieldElement(desc_, a == 0 ? 0u : desc_.characteristic() - a);
  }
  return FieldElement(desc_, Rational(-rational_unchecked()));
}

inline bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.desc_ != rhs.desc_) return false;
  if (lhs.desc_.is_prime()) return lhs.residue_unchecked() == rhs.residue_unchecked();
  return lhs.rational_unchecked() == rhs.rational_unchecked();
}

inline bool is_zero(const FieldElement& x) noexcept { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// All p elements of GF(p) in the order 0, 1, ..., p-1.
/// Throws UnsupportedFieldError for the rationals.
std::vector<FieldElement> enumerate_field(FieldDescriptor desc);

/// Parses "n" or "n/d" (optional leading sign) as an element of desc.
/// Throws ParseError on malformed text or a zero denominator.
FieldElement parse_field_element(const std::string& text, FieldDescriptor desc);

}  // namespace curled

#endif  // CURLED_FIELD_HPP
