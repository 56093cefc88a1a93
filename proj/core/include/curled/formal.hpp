#ifndef CURLED_FORMAL_HPP
#define CURLED_FORMAL_HPP

// Formal expansions of xy, x^2, y^2, (xy)^2 and x^2 y^2 for generic
// x = ae + bf + cg and y = ue + vf + wg over a curled table of symbolic type
// (i, j, k) with symbolic parameters A..F.
//
// A FormalVector is a finite sum of FormalWords with ScalarPoly
// coefficients. Words are single symbols (e, f, g, A, ..., F) or ordered
// pairs of them; pairs of two basis vectors never survive because the table
// reduces them (ef -> A, ee -> ie, ...).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curled/algebra.hpp"
#include "curled/poly.hpp"

namespace curled {

enum class Symbol : std::uint8_t { e, f, g, A, B, C, D, E, F };
inline constexpr std::array<Symbol, 9> kAllSymbols = {Symbol::e, Symbol::f, Symbol::g, Symbol::A, Symbol::B,
                                                      Symbol::C, Symbol::D, Symbol::E, Symbol::F};

char symbol_name(Symbol s) noexcept;
std::optional<Symbol> symbol_from_name(char c) noexcept;
constexpr bool is_basis_symbol(Symbol s) noexcept { return s == Symbol::e || s == Symbol::f || s == Symbol::g; }

class FormalWord {
 public:
  static FormalWord single(Symbol s) noexcept { return FormalWord(s, std::nullopt); }
  /// Throws UnsupportedInputError for a pair of two basis vectors.
  static FormalWord pair(Symbol s, Symbol t);
  /// "e", "A", "eA", "AB", "A^2" (same as "AA"). Throws ParseError.
  static FormalWord parse(std::string_view text);

  bool is_single() const noexcept { return !second_.has_value(); }
  Symbol first() const noexcept { return first_; }
  std::optional<Symbol> second() const noexcept { return second_; }

  /// "e", "eA", "AB"; a repeated symbol prints as "A^2".
  std::string to_string() const;

  /// Singles before pairs; symbols ordered e < f < g < A < ... < F.
  friend std::strong_ordering operator<=>(const FormalWord& lhs, const FormalWord& rhs) noexcept;
  friend bool operator==(const FormalWord&, const FormalWord&) = default;

 private:
  FormalWord(Symbol s, std::optional<Symbol> t) noexcept : first_(s), second_(t) {}
  Symbol first_;
  std::optional<Symbol> second_;
};

class FormalVector {
 public:
  using Terms = std::map<FormalWord, ScalarPoly>;

  FormalVector() = default;

  void add(const FormalWord& word, const ScalarPoly& coeff);
  /// Zero polynomial when the word is absent.
  ScalarPoly coefficient(const FormalWord& word) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool singles_only() const noexcept;

  FormalVector& operator+=(const FormalVector& rhs);
  FormalVector& operator-=(const FormalVector& rhs);
  friend FormalVector operator+(FormalVector lhs, const FormalVector& rhs) { return lhs += rhs; }
  friend FormalVector operator-(FormalVector lhs, const FormalVector& rhs) { return lhs -= rhs; }
  FormalVector operator-() const;
  /// Multiplies every coefficient by p.
  FormalVector scaled(const ScalarPoly& p) const;

  friend bool operator==(const FormalVector&, const FormalVector&) = default;

  /// One "word : coefficient" line per term, in word order.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// xy = aui e + av A + aw B + bu C + bvj f + bw D + cu E + cv F + cwk g.
FormalVector generic_product();
/// x^2 = a^2 i e + b^2 j f + c^2 k g + ab(A + C) + ac(B + E) + bc(D + F).
FormalVector generic_square_x();
/// y^2, the same with (u, v, w) in place of (a, b, c).
FormalVector generic_square_y();

/// Distributes the product of two single-symbol vectors, reducing basis
/// pairs through the table. Throws UnsupportedInputError on pair words.
FormalVector formal_multiply(const FormalVector& left, const FormalVector& right);

/// (xy)^2 and x^2 y^2.
FormalVector expand_square_of_product();
FormalVector expand_product_of_squares();
/// (xy)^2 - x^2 y^2.
FormalVector difference_expansion();

enum class GreekName : std::uint8_t {
  alpha, beta, gamma, delta, epsilon, zeta, eta, theta, iota, kappa, lambda, mu, nu, xi, pi
};
inline constexpr std::size_t kGreekCount = 15;
std::array<GreekName, kGreekCount> all_greek_names() noexcept;
std::string_view greek_label(GreekName name) noexcept;
ScalarPoly greek_poly(GreekName name);

/// The difference regrouped after condition (10) is assumed:
/// beta(AE - BC - BA + ieF - EC + iFe) + epsilon(DA - CF + FA - jEf + DC - jfE)
///   + iota(-kCg + DB + FB - ED + FE - kgC).
FormalVector recombination_expansion();

/// Substitutes integers for some of a..w, i, j, k.
FormalVector specialize(const FormalVector& v, const std::map<Var, Integer>& bindings);

/// Splits v by the monomial in a..w of each term; the remaining coefficients
/// only involve i, j, k.
std::map<Monomial, FormalVector, MonomialOrder> group_by_scalar_monomial(const FormalVector& v);

/// Value of every word of v in a concrete table, with the type bits
/// substituted. Built once per (v, table) and evaluated at many scalars.
class FormalEvaluator {
 public:
  FormalEvaluator(const FormalVector& v, const CurledTable& table);

  /// Needs values for all of a, b, c, u, v, w.
  Element at(const std::map<Var, FieldElement>& scalars) const;
  /// Coordinates over {e, f, g} as polynomials in K[a, b, c, u, v, w].
  std::array<FieldPoly, 3> polynomials() const;

 private:
  struct Term {
    FieldPoly coeff;
    Element value;
  };
  FieldDescriptor desc_;
  std::vector<Term> terms_;
};

/// Value of a word in the table: e, f, g, A..F, or the product of two of them.
Element word_value(const FormalWord& word, const CurledTable& table);

/// Evaluates v at a concrete table and scalar assignment.
/// Throws MissingBindingError if any of a..w is missing, FieldMismatchError
/// if a scalar is over a different field than the table.
Element eval_formal(const FormalVector& v, const CurledTable& table, const std::map<Var, FieldElement>& scalars);

/// Substitutes the table but keeps a..w symbolic.
std::array<FieldPoly, 3> eval_to_polynomials(const FormalVector& v, const CurledTable& table);

/// One row of the reference coefficient list: a word with its coefficients
/// in (xy)^2, in x^2 y^2 and in the difference, as polynomial text.
struct LedgerRow {
  std::string_view word;
  std::string_view square_of_product;
  std::string_view product_of_squares;
  std::string_view difference;
};

/// All 81 rows, in the order they are listed (e, f, g, A..F, eA, ..., FE).
const std::vector<LedgerRow>& coefficient_ledger();

}  // namespace curled

#endif  // CURLED_FORMAL_HPP
