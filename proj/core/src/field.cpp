#include "curled/field.hpp"

#include <cctype>
#include <sstream>

namespace curled {

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p > kMaxPrime) {
    throw InvalidFieldError("prime modulus " + std::to_string(p) + " exceeds 2^31 - 1");
  }
  if (!is_prime_number(p)) {
    throw InvalidFieldError(std::to_string(p) + " is not a prime");
  }
  return FieldDescriptor(static_cast<std::uint32_t>(p));
}

std::string FieldDescriptor::to_string() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldDescriptor& desc) {
  return os << desc.to_string();
}

namespace {

std::uint32_t reduce_integer(const Integer& n, std::uint32_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

FieldElement FieldElement::zero(FieldDescriptor desc) {
  if (desc.is_prime()) return FieldElement(desc, 0u);
  return FieldElement(desc, Rational(0));
}

FieldElement FieldElement::one(FieldDescriptor desc) {
  if (desc.is_prime()) return FieldElement(desc, desc.characteristic() == 1 ? 0u : 1u);
  return FieldElement(desc, Rational(1));
}

FieldElement FieldElement::from_integer(const Integer& n, FieldDescriptor desc) {
  if (desc.is_prime()) return FieldElement(desc, reduce_integer(n, desc.characteristic()));
  return FieldElement(desc, Rational(n));
}

FieldElement FieldElement::from_integer(std::int64_t n, FieldDescriptor desc) {
  if (desc.is_prime()) {
    const std::int64_t p = desc.characteristic();
    std::int64_t r = n % p;
    if (r < 0) r += p;
    return FieldElement(desc, static_cast<std::uint32_t>(r));
  }
  return FieldElement(desc, Rational(Integer(static_cast<long>(n))));
}

FieldElement FieldElement::from_fraction(const Integer& num, const Integer& den, FieldDescriptor desc) {
  if (den == 0) throw DivisionByZeroError("fraction with zero denominator");
  if (desc.is_prime()) return from_integer(num, desc) / from_integer(den, desc);
  Rational q(num, den);
  q.canonicalize();
  return FieldElement(desc, std::move(q));
}

FieldElement FieldElement::residue(std::uint64_t r, FieldDescriptor desc) {
  if (!desc.is_prime()) throw UnsupportedFieldError("residue() requires a prime field");
  return FieldElement(desc, static_cast<std::uint32_t>(r % desc.characteristic()));
}

std::uint32_t FieldElement::as_residue() const {
  if (!desc_.is_prime()) throw UnsupportedFieldError("as_residue() on a rational element");
  return residue_unchecked();
}

const Rational& FieldElement::as_rational() const {
  if (desc_.is_prime()) throw UnsupportedFieldError("as_rational() on a prime-field element");
  return rational_unchecked();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZeroError("zero has no multiplicative inverse in " + desc_.to_string());
  if (desc_.is_prime()) {
    const std::uint32_t p = desc_.characteristic();
    return FieldElement(desc_, pow_mod(residue_unchecked(), p - 2, p));
  }
  Rational inv = 1 / rational_unchecked();
  inv.canonicalize();
  return FieldElement(desc_, std::move(inv));
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

void FieldElement::throw_field_mismatch(const FieldElement& other) const {
  throw FieldMismatchError("field mismatch: " + desc_.to_string() + " vs " + other.desc_.to_string());
}

std::string FieldElement::to_string() const {
  if (desc_.is_prime()) return std::to_string(residue_unchecked());
  return rational_unchecked().get_str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

std::vector<FieldElement> enumerate_field(FieldDescriptor desc) {
  if (!desc.is_finite()) throw UnsupportedFieldError("cannot enumerate the infinite field " + desc.to_string());
  std::vector<FieldElement> out;
  out.reserve(desc.characteristic());
  for (std::uint32_t r = 0; r < desc.characteristic(); ++r) out.push_back(FieldElement::residue(r, desc));
  return out;
}

namespace {

Integer parse_integer(const std::string& text, const std::string& whole) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw ParseError("malformed scalar literal '" + whole + "'");
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("malformed scalar literal '" + whole + "'");
    }
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace

FieldElement parse_field_element(const std::string& text, FieldDescriptor desc) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return FieldElement::from_integer(parse_integer(text, text), desc);
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("denominator must be an unsigned integer in '" + text + "'");
  }
  const Integer den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  return FieldElement::from_fraction(num, den, desc);
}

}  // namespace curled
