#include "curled/conditions.hpp"

#include <cctype>
#include <tuple>

namespace curled {

class ConditionParser {
 public:
  explicit ConditionParser(std::string_view text) : text_(text) {}

  ConditionExpr parse() {
    ConditionExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return e;
  }

 private:
  using Kind = ConditionExpr::Kind;

  ConditionExpr expr() {
    ConditionExpr sum;
    sum.kind_ = Kind::sum;
    skip_space();
    int sign = 1;
    if (peek() == '-') {
      get();
      sign = -1;
    }
    sum.children_.emplace_back(sign, term());
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      get();
      sum.children_.emplace_back(c == '+' ? 1 : -1, term());
    }
    if (sum.children_.size() == 1 && sum.children_[0].first == 1) return std::move(sum.children_[0].second);
    return sum;
  }

  // Type bits, then one operand or the product of two.
  ConditionExpr term() {
    std::vector<Var> scales;
    skip_space();
    while (peek() == 'i' || peek() == 'j' || peek() == 'k') {
      scales.push_back(*var_from_name(get()));
      skip_space();
    }
    std::vector<ConditionExpr> operands;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '(') {
        get();
        operands.push_back(expr());
        skip_space();
        if (get() != ')') fail("expected ')'");
      } else if (symbol_from_name(c)) {
        ConditionExpr leaf;
        leaf.kind_ = Kind::symbol;
        leaf.symbol_ = *symbol_from_name(get());
        operands.push_back(std::move(leaf));
      } else {
        break;
      }
      skip_space();
      if (peek() == '^') {
        get();
        if (get() != '2') fail("only ^2 is supported");
        operands.push_back(operands.back());
      }
    }
    if (operands.empty()) fail("expected an operand");
    if (operands.size() > 2) fail("products of more than two operands are ambiguous");
    ConditionExpr body;
    if (operands.size() == 1) {
      body = std::move(operands[0]);
    } else {
      body.kind_ = Kind::product;
      body.children_.emplace_back(1, std::move(operands[0]));
      body.children_.emplace_back(1, std::move(operands[1]));
    }
    for (auto it = scales.rbegin(); it != scales.rend(); ++it) {
      ConditionExpr scaled;
      scaled.kind_ = Kind::scale;
      scaled.type_var_ = *it;
      scaled.children_.emplace_back(1, std::move(body));
      body = std::move(scaled);
    }
    return body;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("condition '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

ConditionExpr ConditionExpr::parse(std::string_view text) { return ConditionParser(text).parse(); }

Element ConditionExpr::evaluate(const CurledTable& table) const {
  const FieldDescriptor desc = table.descriptor();
  switch (kind_) {
    case Kind::symbol:
      if (is_basis_symbol(symbol_)) return Element::basis(static_cast<Basis>(symbol_), desc);
      return table.param(static_cast<Param>(static_cast<std::size_t>(symbol_) - 3));
    case Kind::sum: {
      Element acc = Element::zero(desc);
      for (const auto& [sign, child] : children_) {
        if (sign > 0) acc += child.evaluate(table); else acc -= child.evaluate(table);
      }
      return acc;
    }
    case Kind::product:
      return product(children_[0].second.evaluate(table), children_[1].second.evaluate(table), table);
    case Kind::scale: {
      const int bit = type_var_ == Var::i ? table.type().i() : type_var_ == Var::j ? table.type().j()
                                                                                   : table.type().k();
      if (bit == 0) return Element::zero(desc);
      return children_[0].second.evaluate(table);
    }
  }
  return Element::zero(desc);
}

FormalVector ConditionExpr::to_formal() const {
  switch (kind_) {
    case Kind::symbol: {
      FormalVector out;
      out.add(FormalWord::single(symbol_), scalar_constant(1));
      return out;
    }
    case Kind::sum: {
      FormalVector acc;
      for (const auto& [sign, child] : children_) {
        if (sign > 0) acc += child.to_formal(); else acc -= child.to_formal();
      }
      return acc;
    }
    case Kind::product:
      return formal_multiply(children_[0].second.to_formal(), children_[1].second.to_formal());
    case Kind::scale:
      return children_[0].second.to_formal().scaled(scalar_var(type_var_));
  }
  return {};
}

namespace {

std::vector<ConditionEquation> build(const std::vector<std::tuple<const char*, const char*, const char*>>& rows) {
  std::vector<ConditionEquation> out;
  out.reserve(rows.size());
  for (const auto& [name, lhs, rhs] : rows) {
    out.push_back(ConditionEquation{name, lhs, rhs, ConditionExpr::parse(lhs), ConditionExpr::parse(rhs)});
  }
  return out;
}

std::vector<EquationVerdict> check_all(const std::vector<ConditionEquation>& equations, const CurledTable& table) {
  std::vector<EquationVerdict> out;
  out.reserve(equations.size());
  for (const ConditionEquation& eq : equations) {
    Element lhs = eq.lhs.evaluate(table);
    Element rhs = eq.rhs.evaluate(table);
    EquationVerdict verdict{eq.name, eq.text(), lhs == rhs, std::nullopt};
    if (!verdict.holds) verdict.witness.emplace(std::move(lhs), std::move(rhs));
    out.push_back(std::move(verdict));
  }
  return out;
}

bool all_hold(const std::vector<ConditionEquation>& equations, const CurledTable& table) {
  for (const ConditionEquation& eq : equations) {
    if (!(eq.lhs.evaluate(table) == eq.rhs.evaluate(table))) return false;
  }
  return true;
}

}  // namespace

const std::vector<ConditionEquation>& condition10_equations() {
  static const std::vector<ConditionEquation> equations = build({
      {"10-1", "A^2", "ijA"},
      {"10-2", "B^2", "ikB"},
      {"10-3", "C^2", "ijC"},
      {"10-4", "D^2", "jkD"},
      {"10-5", "E^2", "ikE"},
      {"10-6", "F^2", "jkF"},
      {"10-7", "AB+BA", "ie(D+F)"},
      {"10-8", "CE+EC", "i(D+F)e"},
      {"10-9", "CD+DC", "jf(B+E)"},
      {"10-10", "AF+FA", "j(B+E)f"},
      {"10-11", "EF+FE", "kg(A+C)"},
      {"10-12", "BD+DB", "k(A+C)g"},
      {"10-13", "iAe", "ieC"},
      {"10-14", "iBe", "ieE"},
      {"10-15", "jCf", "jfA"},
      {"10-16", "jDf", "jfF"},
      {"10-17", "kEg", "kgB"},
      {"10-18", "kFg", "kgD"},
  });
  return equations;
}

const std::vector<ConditionEquation>& condition17_equations() {
  static const std::vector<ConditionEquation> equations = build({
      {"17-1", "BC+BA+EC-AE", "i(eF+Fe)"},
      {"17-2", "DA+FA+DC-CF", "j(Ef+fE)"},
      {"17-3", "DB+FB+FE-ED", "k(Cg+gC)"},
  });
  return equations;
}

bool ConditionReport::theorem_verdict() const noexcept {
  for (const auto& v : cond10) {
    if (!v.holds) return false;
  }
  for (const auto& v : cond17) {
    if (!v.holds) return false;
  }
  return true;
}

bool ConditionReport::zeropotent_verdict() const noexcept {
  for (const auto& v : zeropotent18) {
    if (!v.holds) return false;
  }
  return true;
}

std::vector<EquationVerdict> check_condition_10(const CurledTable& table) {
  return check_all(condition10_equations(), table);
}

std::vector<EquationVerdict> check_condition_17(const CurledTable& table) {
  return check_all(condition17_equations(), table);
}

std::vector<EquationVerdict> check_zeropotent_18(const CurledTable& table) {
  const FieldDescriptor desc = table.descriptor();
  std::vector<EquationVerdict> out;
  const CurledType& type = table.type();
  const Element bits = Element::of(type.i(), type.j(), type.k(), desc);
  const Element zero = Element::zero(desc);
  auto push = [&](const char* name, const char* text, const Element& lhs) {
    EquationVerdict v{name, text, lhs == zero, std::nullopt};
    if (!v.holds) v.witness.emplace(lhs, zero);
    out.push_back(std::move(v));
  };
  push("18-1", "i=j=k=0", bits);
  push("18-2", "A+C = 0", table.param(Param::A) + table.param(Param::C));
  push("18-3", "B+E = 0", table.param(Param::B) + table.param(Param::E));
  push("18-4", "D+F = 0", table.param(Param::D) + table.param(Param::F));
  return out;
}

ConditionReport check_conditions(const CurledTable& table) {
  return ConditionReport{check_condition_10(table), check_condition_17(table), check_zeropotent_18(table)};
}

bool is_ec_by_theorem(const CurledTable& table) {
  return all_hold(condition10_equations(), table) && all_hold(condition17_equations(), table);
}

bool is_zeropotent_by_condition(const CurledTable& table) {
  const CurledType& t = table.type();
  if (t.i() != 0 || t.j() != 0 || t.k() != 0) return false;
  return (table.param(Param::A) + table.param(Param::C)).is_zero() &&
         (table.param(Param::B) + table.param(Param::E)).is_zero() &&
         (table.param(Param::D) + table.param(Param::F)).is_zero();
}

}  // namespace curled
