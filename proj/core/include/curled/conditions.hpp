#ifndef CURLED_CONDITIONS_HPP
#define CURLED_CONDITIONS_HPP

// Element equations that characterise endo-commutativity of a curled table.
//
// Each equation is kept as text, e.g. "AB+BA = ie(D+F)", and parsed once into
// an expression tree over the symbols e, f, g, A..F. Juxtaposition of two
// operands is the table product; a leading i, j or k multiplies by that type
// bit. The eighteen "10-n" equations and the three "17-n" equations together
// decide endo-commutativity; the four "18-n" checks decide zeropotency.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curled/algebra.hpp"
#include "curled/formal.hpp"

namespace curled {

/// Expression over e, f, g, A..F with type-bit multipliers.
class ConditionExpr {
 public:
  enum class Kind { symbol, sum, product, scale };

  /// Throws ParseError.
  static ConditionExpr parse(std::string_view text);

  Element evaluate(const CurledTable& table) const;
  /// Bilinear expansion into words with i, j, k coefficients.
  FormalVector to_formal() const;

 private:
  friend class ConditionParser;
  Kind kind_ = Kind::symbol;
  Symbol symbol_ = Symbol::e;
  Var type_var_ = Var::i;
  std::vector<std::pair<int, ConditionExpr>> children_;  // sign, operand (sum); factors (product/scale)
};

struct ConditionEquation {
  std::string name;
  std::string lhs_text;
  std::string rhs_text;
  ConditionExpr lhs;
  ConditionExpr rhs;

  /// lhs - rhs as a formal vector.
  FormalVector difference() const { return lhs.to_formal() - rhs.to_formal(); }
  std::string text() const { return lhs_text + " = " + rhs_text; }
};

/// "10-1" ... "10-18".
const std::vector<ConditionEquation>& condition10_equations();
/// "17-1" ... "17-3".
const std::vector<ConditionEquation>& condition17_equations();

struct EquationVerdict {
  std::string name;
  std::string equation;
  bool holds = true;
  /// Both sides when the equation fails.
  std::optional<std::pair<Element, Element>> witness;
};

struct ConditionReport {
  std::vector<EquationVerdict> cond10;
  std::vector<EquationVerdict> cond17;
  std::vector<EquationVerdict> zeropotent18;

  /// Conjunction of every cond10 and cond17 verdict.
  bool theorem_verdict() const noexcept;
  bool zeropotent_verdict() const noexcept;
};

std::vector<EquationVerdict> check_condition_10(const CurledTable& table);
std::vector<EquationVerdict> check_condition_17(const CurledTable& table);
/// "18-1": i = j = k = 0 (witness compares (i, j, k) with zero),
/// "18-2": A + C = 0, "18-3": B + E = 0, "18-4": D + F = 0.
std::vector<EquationVerdict> check_zeropotent_18(const CurledTable& table);
ConditionReport check_conditions(const CurledTable& table);

/// All of (10) and (17) hold; stops at the first failing equation.
bool is_ec_by_theorem(const CurledTable& table);
bool is_zeropotent_by_condition(const CurledTable& table);

}  // namespace curled

#endif  // CURLED_CONDITIONS_HPP
