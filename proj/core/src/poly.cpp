#include "curled/poly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace curled {

char var_name(Var v) noexcept { return "abcuvwijk"[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(char c) noexcept {
  switch (c) {
    case 'a': return Var::a;
    case 'b': return Var::b;
    case 'c': return Var::c;
    case 'u': return Var::u;
    case 'v': return Var::v;
    case 'w': return Var::w;
    case 'i': return Var::i;
    case 'j': return Var::j;
    case 'k': return Var::k;
    default: return std::nullopt;
  }
}

Monomial::Monomial(std::initializer_list<std::pair<Var, unsigned>> powers) {
  for (const auto& [v, n] : powers) *this = *this * of(v, n);
}

Monomial Monomial::of(Var v, unsigned power) {
  Monomial m;
  if (is_type_var(v) && power > 1) power = 1;
  m.exps_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return m;
}

unsigned Monomial::total_degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

bool Monomial::is_one() const noexcept {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  for (std::size_t n = 0; n < kVarCount; ++n) {
    unsigned e = lhs.exps_[n] + rhs.exps_[n];
    if (is_type_var(kAllVars[n]) && e > 1) e = 1;
    out.exps_[n] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::restricted_to_scalars() const {
  Monomial out = *this;
  for (Var v : {Var::i, Var::j, Var::k}) out.exps_[static_cast<std::size_t>(v)] = 0;
  return out;
}

Monomial Monomial::restricted_to_types() const {
  Monomial out = *this;
  for (Var v : kScalarVars) out.exps_[static_cast<std::size_t>(v)] = 0;
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out = *this;
  out.exps_[static_cast<std::size_t>(v)] = 0;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t n = 0; n < kVarCount; ++n) {
    if (exps_[n] == 0) continue;
    out += var_name(kAllVars[n]);
    if (exps_[n] > 1) out += "^" + std::to_string(exps_[n]);
  }
  return out.empty() ? "1" : out;
}

ScalarPoly scalar_constant(const Integer& n) { return ScalarPoly::term(Monomial{}, n); }

ScalarPoly scalar_var(Var v) { return ScalarPoly::term(Monomial::of(v), Integer(1)); }

namespace {

// Renders sign-aware terms; coefficient text comes from the caller.
template <class Poly, class IsNegative, class AbsText>
std::string render(const Poly& p, IsNegative is_negative, AbsText abs_text) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = is_negative(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string coeff = abs_text(c);
    if (m.is_one()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff;
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace

std::string to_string(const ScalarPoly& p) {
  return render(
      p, [](const Integer& c) { return sgn(c) < 0; },
      [](const Integer& c) { return Integer(abs(c)).get_str(); });
}

std::string to_string(const FieldPoly& p) {
  return render(
      p,
      [](const FieldElement& c) {
        return c.descriptor().is_rational() && sgn(c.as_rational()) < 0;
      },
      [](const FieldElement& c) {
        if (c.descriptor().is_rational() && sgn(c.as_rational()) < 0) return (-c).to_string();
        const std::string s = c.to_string();
        return s.find('/') != std::string::npos ? "(" + s + ")" : s;
      });
}

std::ostream& operator<<(std::ostream& os, const ScalarPoly& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  ScalarPoly parse() {
    ScalarPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  ScalarPoly expr() {
    skip_space();
    ScalarPoly acc;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      get();
      ScalarPoly t = term();
      if (c == '+') acc += t; else acc -= t;
    }
    return acc;
  }

  ScalarPoly term() {
    ScalarPoly acc = scalar_constant(1);
    bool any = false;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        if (!any) fail("'*' without a left factor");
        get();
        continue;
      }
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '(' || var_from_name(c))) break;
      acc = acc * factor();
      any = true;
    }
    if (!any) fail("expected a factor");
    return acc;
  }

  ScalarPoly factor() {
    const char c = peek();
    ScalarPoly base;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      base = scalar_constant(Integer(digits(), 10));
    } else if (c == '(') {
      get();
      base = expr();
      skip_space();
      if (get() != ')') fail("expected ')'");
    } else {
      base = scalar_var(*var_from_name(get()));
    }
    skip_space();
    if (peek() == '^') {
      get();
      skip_space();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      const unsigned long n = std::stoul(digits());
      ScalarPoly out = scalar_constant(1);
      for (unsigned long r = 0; r < n; ++r) out = out * base;
      return out;
    }
    return base;
  }

  std::string digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += get();
    return s;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarPoly parse_scalar_poly(std::string_view text) { return PolyParser(text).parse(); }

ScalarPoly substitute(const ScalarPoly& p, const std::map<Var, Integer>& bindings) {
  if (bindings.empty()) return p;
  ScalarPoly out;
  for (const auto& [m, c] : p.terms()) {
    Integer coeff = c;
    Monomial rest = m;
    for (const auto& [v, value] : bindings) {
      const unsigned e = m.degree(v);
      if (e == 0) continue;
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), value.get_mpz_t(), e);
      coeff *= power;
      rest = rest.without(v);
    }
    out.add_term(rest, coeff);
  }
  return out;
}

FieldPoly to_field(const ScalarPoly& p, FieldDescriptor desc) {
  FieldPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, FieldElement::from_integer(c, desc));
  return out;
}

namespace {

FieldElement monomial_value(const Monomial& m, const std::map<Var, FieldElement>& values, FieldDescriptor desc) {
  FieldElement acc = FieldElement::one(desc);
  for (Var v : kAllVars) {
    const unsigned e = m.degree(v);
    if (e == 0) continue;
    auto it = values.find(v);
    if (it == values.end()) {
      throw MissingBindingError(std::string("no value bound for variable '") + var_name(v) + "'");
    }
    for (unsigned r = 0; r < e; ++r) acc *= it->second;
  }
  return acc;
}

}  // namespace

FieldElement evaluate(const ScalarPoly& p, const std::map<Var, FieldElement>& values, FieldDescriptor desc) {
  FieldElement acc = FieldElement::zero(desc);
  for (const auto& [m, c] : p.terms()) acc += FieldElement::from_integer(c, desc) * monomial_value(m, values, desc);
  return acc;
}

FieldElement evaluate(const FieldPoly& p, const std::map<Var, FieldElement>& values, FieldDescriptor desc) {
  FieldElement acc = FieldElement::zero(desc);
  for (const auto& [m, c] : p.terms()) acc += c * monomial_value(m, values, desc);
  return acc;
}

}  // namespace curled
