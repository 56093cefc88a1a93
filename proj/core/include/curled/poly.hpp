#ifndef CURLED_POLY_HPP
#define CURLED_POLY_HPP

// Sparse multivariate polynomials in the nine indeterminates
// a, b, c, u, v, w (scalar coordinates of x and y) and i, j, k (type bits).
//
// i, j and k are idempotent: every product caps their exponents at 1.
// Terms are kept in descending lexicographic order with a > b > c > u > v
// > w > i > j > k, which is also the canonical printing order.

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "curled/field.hpp"

namespace curled {

enum class Var : std::uint8_t { a, b, c, u, v, w, i, j, k };

inline constexpr std::size_t kVarCount = 9;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::a, Var::b, Var::c, Var::u, Var::v,
                                                        Var::w, Var::i, Var::j, Var::k};
/// The six scalar coordinates of x = ae + bf + cg and y = ue + vf + wg.
inline constexpr std::array<Var, 6> kScalarVars = {Var::a, Var::b, Var::c, Var::u, Var::v, Var::w};

char var_name(Var v) noexcept;
std::optional<Var> var_from_name(char c) noexcept;
constexpr bool is_type_var(Var v) noexcept { return v == Var::i || v == Var::j || v == Var::k; }

class Monomial {
 public:
  constexpr Monomial() noexcept = default;
  Monomial(std::initializer_list<std::pair<Var, unsigned>> powers);
  static Monomial of(Var v, unsigned power = 1);

  unsigned degree(Var v) const noexcept { return exps_[static_cast<std::size_t>(v)]; }
  unsigned total_degree() const noexcept;
  bool is_one() const noexcept;

  /// Product with the idempotent reduction applied to i, j, k.
  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);

  /// The part of the monomial in the given variable set.
  Monomial restricted_to_scalars() const;
  Monomial restricted_to_types() const;
  Monomial without(Var v) const;

  /// "a^2vw", or "1" for the empty monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  const std::array<std::uint8_t, kVarCount>& exponents() const noexcept { return exps_; }

 private:
  std::array<std::uint8_t, kVarCount> exps_{};
};

/// Descending lexicographic order with a as the most significant variable.
struct MonomialOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const noexcept {
    return lhs.exponents() > rhs.exponents();
  }
};

inline bool is_zero(const Integer& n) { return sgn(n) == 0; }

/// Sparse polynomial with no stored zero coefficients. Coeff must provide
/// +=, -=, *, unary minus, ==, and a free function is_zero(Coeff).
template <class Coeff>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Coeff, MonomialOrder>;

  SparsePoly() = default;

  static SparsePoly term(const Monomial& m, Coeff c) {
    SparsePoly p;
    p.add_term(m, std::move(c));
    return p;
  }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Terms& terms() const noexcept { return terms_; }

  /// nullptr when the monomial is absent (coefficient zero).
  const Coeff* coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Monomial& m, const Coeff& c) {
    if (is_zero_coeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
  friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
  SparsePoly operator-() const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }
  friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    SparsePoly out;
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) out.add_term(ml * mr, cl * cr);
    }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

  /// Multiplies every coefficient by c (dropping terms that vanish).
  SparsePoly scaled(const Coeff& c) const {
    SparsePoly out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
  }

  friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) { return lhs.terms_ == rhs.terms_; }

 private:
  static bool is_zero_coeff(const Coeff& c) {
    using curled::is_zero;
    return is_zero(c);
  }

  Terms terms_;
};

/// Integer-coefficient polynomial in a..w, i, j, k.
using ScalarPoly = SparsePoly<Integer>;
/// Polynomial with coefficients in a concrete field K.
using FieldPoly = SparsePoly<FieldElement>;

ScalarPoly scalar_constant(const Integer& n);
ScalarPoly scalar_var(Var v);

/// Canonical text: terms in descending lex order joined by " + " / " - ",
/// e.g. "a^2vw - abuw"; "0" for the zero polynomial.
std::string to_string(const ScalarPoly& p);
std::string to_string(const FieldPoly& p);
std::ostream& operator<<(std::ostream& os, const ScalarPoly& p);

/// Parses products of variables, integers and parenthesised sums, e.g.
/// "av(bu-av)ij", "-v^2ij", "2abuv", "0". Throws ParseError.
ScalarPoly parse_scalar_poly(std::string_view text);

/// Substitutes integers for a subset of the variables and re-normalises.
ScalarPoly substitute(const ScalarPoly& p, const std::map<Var, Integer>& bindings);

/// Maps integer coefficients into K; variables stay symbolic.
FieldPoly to_field(const ScalarPoly& p, FieldDescriptor desc);

/// Evaluates with a value for every variable that occurs in p.
/// Throws MissingBindingError when a needed variable is unbound.
FieldElement evaluate(const ScalarPoly& p, const std::map<Var, FieldElement>& values, FieldDescriptor desc);
FieldElement evaluate(const FieldPoly& p, const std::map<Var, FieldElement>& values, FieldDescriptor desc);

}  // namespace curled

#endif  // CURLED_POLY_HPP
