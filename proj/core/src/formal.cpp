#include "curled/formal.hpp"

#include <sstream>

namespace curled {

char symbol_name(Symbol s) noexcept { return "efgABCDEF"[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(char c) noexcept {
  for (Symbol s : kAllSymbols) {
    if (symbol_name(s) == c) return s;
  }
  return std::nullopt;
}

// ------------------------------------------------------------- FormalWord

FormalWord FormalWord::pair(Symbol s, Symbol t) {
  if (is_basis_symbol(s) && is_basis_symbol(t)) {
    throw UnsupportedInputError(std::string("the pair ") + symbol_name(s) + symbol_name(t) +
                                " of basis vectors reduces through the table");
  }
  return FormalWord(s, t);
}

FormalWord FormalWord::parse(std::string_view text) {
  auto symbol = [&](char c) {
    auto s = symbol_from_name(c);
    if (!s) throw ParseError("unknown symbol '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    return *s;
  };
  try {
    if (text.size() == 1) return single(symbol(text[0]));
    if (text.size() == 2) return pair(symbol(text[0]), symbol(text[1]));
    if (text.size() == 3 && text.substr(1) == "^2") {
      const Symbol s = symbol(text[0]);
      return pair(s, s);
    }
  } catch (const UnsupportedInputError& err) {
    throw ParseError(err.what());
  }
  throw ParseError("malformed word '" + std::string(text) + "'");
}

std::string FormalWord::to_string() const {
  std::string out(1, symbol_name(first_));
  if (second_) {
    if (*second_ == first_) {
      out += "^2";
    } else {
      out += symbol_name(*second_);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const FormalWord& lhs, const FormalWord& rhs) noexcept {
  if (lhs.is_single() != rhs.is_single()) return lhs.is_single() ? std::strong_ordering::less
                                                                  : std::strong_ordering::greater;
  if (auto cmp = lhs.first_ <=> rhs.first_; cmp != 0) return cmp;
  if (lhs.is_single()) return std::strong_ordering::equal;
  return *lhs.second_ <=> *rhs.second_;
}

// ----------------------------------------------------------- FormalVector

void FormalVector::add(const FormalWord& word, const ScalarPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarPoly FormalVector::coefficient(const FormalWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? ScalarPoly{} : it->second;
}

bool FormalVector::singles_only() const noexcept {
  for (const auto& [word, coeff] : terms_) {
    if (!word.is_single()) return false;
  }
  return true;
}

FormalVector& FormalVector::operator+=(const FormalVector& rhs) {
  for (const auto& [word, coeff] : rhs.terms_) add(word, coeff);
  return *this;
}

FormalVector& FormalVector::operator-=(const FormalVector& rhs) {
  for (const auto& [word, coeff] : rhs.terms_) add(word, -coeff);
  return *this;
}

FormalVector FormalVector::operator-() const {
  FormalVector out;
  for (const auto& [word, coeff] : terms_) out.terms_.emplace(word, -coeff);
  return out;
}

FormalVector FormalVector::scaled(const ScalarPoly& p) const {
  FormalVector out;
  for (const auto& [word, coeff] : terms_) out.add(word, coeff * p);
  return out;
}

std::string FormalVector::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [word, coeff] : terms_) os << word.to_string() << " : " << curled::to_string(coeff) << '\n';
  return os.str();
}

// ------------------------------------------------------ generic expansions

namespace {

ScalarPoly poly(std::string_view text) { return parse_scalar_poly(text); }

FormalVector singles(std::initializer_list<std::pair<Symbol, std::string_view>> terms) {
  FormalVector out;
  for (const auto& [s, text] : terms) out.add(FormalWord::single(s), poly(text));
  return out;
}

// Reduction of a product of two basis symbols through the table.
std::pair<Symbol, std::optional<Var>> reduce_basis_pair(Symbol s, Symbol t) {
  using S = Symbol;
  if (s == t) {
    switch (s) {
      case S::e: return {S::e, Var::i};
      case S::f: return {S::f, Var::j};
      default: return {S::g, Var::k};
    }
  }
  if (s == S::e) return {t == S::f ? S::A : S::B, std::nullopt};
  if (s == S::f) return {t == S::e ? S::C : S::D, std::nullopt};
  return {t == S::e ? S::E : S::F, std::nullopt};
}

}  // namespace

FormalVector generic_product() {
  using S = Symbol;
  return singles({{S::e, "aui"},
                  {S::A, "av"},
                  {S::B, "aw"},
                  {S::C, "bu"},
                  {S::f, "bvj"},
                  {S::D, "bw"},
                  {S::E, "cu"},
                  {S::F, "cv"},
                  {S::g, "cwk"}});
}

FormalVector generic_square_x() {
  using S = Symbol;
  return singles({{S::e, "a^2i"},
                  {S::f, "b^2j"},
                  {S::g, "c^2k"},
                  {S::A, "ab"},
                  {S::C, "ab"},
                  {S::B, "ac"},
                  {S::E, "ac"},
                  {S::D, "bc"},
                  {S::F, "bc"}});
}

FormalVector generic_square_y() {
  using S = Symbol;
  return singles({{S::e, "u^2i"},
                  {S::f, "v^2j"},
                  {S::g, "w^2k"},
                  {S::A, "uv"},
                  {S::C, "uv"},
                  {S::B, "uw"},
                  {S::E, "uw"},
                  {S::D, "vw"},
                  {S::F, "vw"}});
}

FormalVector formal_multiply(const FormalVector& left, const FormalVector& right) {
  if (!left.singles_only() || !right.singles_only()) {
    throw UnsupportedInputError("formal_multiply takes vectors of single symbols only");
  }
  FormalVector out;
  for (const auto& [lw, lc] : left.terms()) {
    for (const auto& [rw, rc] : right.terms()) {
      const Symbol s = lw.first();
      const Symbol t = rw.first();
      ScalarPoly coeff = lc * rc;
      if (is_basis_symbol(s) && is_basis_symbol(t)) {
        const auto [target, type_var] = reduce_basis_pair(s, t);
        if (type_var) coeff = coeff * scalar_var(*type_var);
        out.add(FormalWord::single(target), coeff);
      } else {
        out.add(FormalWord::pair(s, t), coeff);
      }
    }
  }
  return out;
}

FormalVector expand_square_of_product() {
  const FormalVector xy = generic_product();
  return formal_multiply(xy, xy);
}

FormalVector expand_product_of_squares() { return formal_multiply(generic_square_x(), generic_square_y()); }

FormalVector difference_expansion() { return expand_square_of_product() - expand_product_of_squares(); }

// ------------------------------------------------------------------ Greek

std::array<GreekName, kGreekCount> all_greek_names() noexcept {
  std::array<GreekName, kGreekCount> out{};
  for (std::size_t n = 0; n < kGreekCount; ++n) out[n] = static_cast<GreekName>(n);
  return out;
}

std::string_view greek_label(GreekName name) noexcept {
  static constexpr std::array<std::string_view, kGreekCount> kLabels = {
      "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
      "iota",  "kappa", "lambda", "mu", "nu", "xi", "pi"};
  return kLabels[static_cast<std::size_t>(name)];
}

ScalarPoly greek_poly(GreekName name) {
  static constexpr std::array<std::string_view, kGreekCount> kDefinitions = {
      "aw(av-bu)", "au(cv-bw)", "av(cv-bw)", "av(aw-cu)", "bv(aw-cu)", "cv(av-bu)", "aw(bw-cv)", "bw(aw-cu)",
      "cw(av-bu)", "bw(bu-av)", "bu(cu-aw)", "bu(bw-cv)", "cu(bu-av)", "cv(cu-aw)", "cu(cv-bw)"};
  return parse_scalar_poly(kDefinitions[static_cast<std::size_t>(name)]);
}

FormalVector recombination_expansion() {
  using S = Symbol;
  struct Part {
    std::string_view coeff;
    S first;
    S second;
  };
  // Each group is (sign and type factor, word); the Greek factor is applied below.
  const std::array<std::pair<GreekName, std::vector<Part>>, 3> groups = {{
      {GreekName::beta,
       {{"1", S::A, S::E}, {"-1", S::B, S::C}, {"-1", S::B, S::A}, {"i", S::e, S::F}, {"-1", S::E, S::C},
        {"i", S::F, S::e}}},
      {GreekName::epsilon,
       {{"1", S::D, S::A}, {"-1", S::C, S::F}, {"1", S::F, S::A}, {"-j", S::E, S::f}, {"1", S::D, S::C},
        {"-j", S::f, S::E}}},
      {GreekName::iota,
       {{"-k", S::C, S::g}, {"1", S::D, S::B}, {"1", S::F, S::B}, {"-1", S::E, S::D}, {"1", S::F, S::E},
        {"-k", S::g, S::C}}},
  }};
  FormalVector out;
  for (const auto& [name, parts] : groups) {
    const ScalarPoly g = greek_poly(name);
    for (const Part& part : parts) out.add(FormalWord::pair(part.first, part.second), g * poly(part.coeff));
  }
  return out;
}

// -------------------------------------------------------- specialisations

FormalVector specialize(const FormalVector& v, const std::map<Var, Integer>& bindings) {
  if (bindings.empty()) return v;
  FormalVector out;
  for (const auto& [word, coeff] : v.terms()) out.add(word, substitute(coeff, bindings));
  return out;
}

std::map<Monomial, FormalVector, MonomialOrder> group_by_scalar_monomial(const FormalVector& v) {
  std::map<Monomial, FormalVector, MonomialOrder> groups;
  for (const auto& [word, coeff] : v.terms()) {
    for (const auto& [m, c] : coeff.terms()) {
      groups[m.restricted_to_scalars()].add(word, ScalarPoly::term(m.restricted_to_types(), c));
    }
  }
  for (auto it = groups.begin(); it != groups.end();) {
    it = it->second.is_zero() ? groups.erase(it) : std::next(it);
  }
  return groups;
}

// ------------------------------------------------------------- evaluation

Element word_value(const FormalWord& word, const CurledTable& table) {
  const FieldDescriptor desc = table.descriptor();
  auto symbol_value = [&](Symbol s) {
    switch (s) {
      case Symbol::e: return Element::basis(Basis::e, desc);
      case Symbol::f: return Element::basis(Basis::f, desc);
      case Symbol::g: return Element::basis(Basis::g, desc);
      default: return table.param(static_cast<Param>(static_cast<std::size_t>(s) - 3));
    }
  };
  const Element first = symbol_value(word.first());
  if (word.is_single()) return first;
  return product(first, symbol_value(*word.second()), table);
}

FormalEvaluator::FormalEvaluator(const FormalVector& v, const CurledTable& table) : desc_(table.descriptor()) {
  const std::map<Var, Integer> type_bits = {
      {Var::i, Integer(table.type().i())}, {Var::j, Integer(table.type().j())}, {Var::k, Integer(table.type().k())}};
  for (const auto& [word, coeff] : v.terms()) {
    FieldPoly c = to_field(substitute(coeff, type_bits), desc_);
    if (c.is_zero()) continue;
    Element value = word_value(word, table);
    if (value.is_zero()) continue;
    terms_.push_back(Term{std::move(c), std::move(value)});
  }
}

Element FormalEvaluator::at(const std::map<Var, FieldElement>& scalars) const {
  for (Var v : kScalarVars) {
    auto it = scalars.find(v);
    if (it == scalars.end()) throw MissingBindingError(std::string("no value for scalar '") + var_name(v) + "'");
    if (it->second.descriptor() != desc_) {
      throw FieldMismatchError(std::string("scalar '") + var_name(v) + "' is over " +
                               it->second.descriptor().to_string() + ", table over " + desc_.to_string());
    }
  }
  Element out = Element::zero(desc_);
  for (const Term& t : terms_) out.add_scaled(evaluate(t.coeff, scalars, desc_), t.value);
  return out;
}

std::array<FieldPoly, 3> FormalEvaluator::polynomials() const {
  std::array<FieldPoly, 3> out;
  for (const Term& t : terms_) {
    for (std::size_t r = 0; r < 3; ++r) {
      if (!t.value[r].is_zero()) out[r] += t.coeff.scaled(t.value[r]);
    }
  }
  return out;
}

Element eval_formal(const FormalVector& v, const CurledTable& table, const std::map<Var, FieldElement>& scalars) {
  return FormalEvaluator(v, table).at(scalars);
}

std::array<FieldPoly, 3> eval_to_polynomials(const FormalVector& v, const CurledTable& table) {
  return FormalEvaluator(v, table).polynomials();
}

// ------------------------------------------------------------------ ledger

const std::vector<LedgerRow>& coefficient_ledger() {
  static const std::vector<LedgerRow> rows = {
      {"e", "a^2u^2i", "a^2u^2i", "0"},
      {"f", "b^2v^2j", "b^2v^2j", "0"},
      {"g", "c^2w^2k", "c^2w^2k", "0"},
      {"A", "abuvij", "a^2v^2ij", "av(bu-av)ij"},
      {"B", "acuwik", "a^2w^2ik", "aw(cu-aw)ik"},
      {"C", "abuvij", "b^2u^2ij", "bu(av-bu)ij"},
      {"D", "bcvwjk", "b^2w^2jk", "bw(cv-bw)jk"},
      {"E", "acuwik", "c^2u^2ik", "cu(aw-cu)ik"},
      {"F", "bcvwjk", "c^2v^2jk", "cv(bw-cv)jk"},
      {"eA", "a^2uvi", "a^2uvi", "0"},
      {"eB", "a^2uwi", "a^2uwi", "0"},
      {"eC", "abu^2i", "a^2uvi", "au(bu-av)i"},
      {"eD", "abuwi", "a^2vwi", "aw(bu-av)i"},
      {"eE", "acu^2i", "a^2uwi", "au(cu-aw)i"},
      {"eF", "acuvi", "a^2vwi", "av(cu-aw)i"},
      {"fA", "abv^2j", "b^2uvj", "bv(av-bu)j"},
      {"fB", "abvwj", "b^2uwj", "bw(av-bu)j"},
      {"fC", "b^2uvj", "b^2uvj", "0"},
      {"fD", "b^2vwj", "b^2vwj", "0"},
      {"fE", "bcuvj", "b^2uwj", "bu(cv-bw)j"},
      {"fF", "bcv^2j", "b^2vwj", "bv(cv-bw)j"},
      {"gA", "acvwk", "c^2uvk", "cv(aw-cu)k"},
      {"gB", "acw^2k", "c^2uwk", "cw(aw-cu)k"},
      {"gC", "bcuwk", "c^2uvk", "cu(bw-cv)k"},
      {"gD", "bcw^2k", "c^2vwk", "cw(bw-cv)k"},
      {"gE", "c^2uwk", "c^2uwk", "0"},
      {"gF", "c^2vwk", "c^2vwk", "0"},
      {"Ae", "a^2uvi", "abu^2i", "au(av-bu)i"},
      {"Be", "a^2uwi", "acu^2i", "au(aw-cu)i"},
      {"Ce", "abu^2i", "abu^2i", "0"},
      {"De", "abuwi", "bcu^2i", "bu(aw-cu)i"},
      {"Ee", "acu^2i", "acu^2i", "0"},
      {"Fe", "acuvi", "bcu^2i", "cu(av-bu)i"},
      {"Af", "abv^2j", "abv^2j", "0"},
      {"Bf", "abvwj", "acv^2j", "av(bw-cv)j"},
      {"Cf", "b^2uvj", "abv^2j", "bv(bu-av)j"},
      {"Df", "b^2vwj", "bcv^2j", "bv(bw-cv)j"},
      {"Ef", "bcuvj", "acv^2j", "cv(bu-av)j"},
      {"Ff", "bcv^2j", "bcv^2j", "0"},
      {"Ag", "acvwk", "abw^2k", "aw(cv-bw)k"},
      {"Bg", "acw^2k", "acw^2k", "0"},
      {"Cg", "bcuwk", "abw^2k", "bw(cu-aw)k"},
      {"Dg", "bcw^2k", "bcw^2k", "0"},
      {"Eg", "c^2uwk", "acw^2k", "cw(cu-aw)k"},
      {"Fg", "c^2vwk", "bcw^2k", "cw(cv-bw)k"},
      {"A^2", "a^2v^2", "abuv", "av(av-bu)"},
      {"B^2", "a^2w^2", "acuw", "aw(aw-cu)"},
      {"C^2", "b^2u^2", "abuv", "bu(bu-av)"},
      {"D^2", "b^2w^2", "bcvw", "bw(bw-cv)"},
      {"E^2", "c^2u^2", "acuw", "cu(cu-aw)"},
      {"F^2", "c^2v^2", "bcvw", "cv(cv-bw)"},
      {"AB", "a^2vw", "abuw", "aw(av-bu)"},
      {"AC", "abuv", "abuv", "0"},
      {"AD", "abvw", "abvw", "0"},
      {"AE", "acuv", "abuw", "au(cv-bw)"},
      {"AF", "acv^2", "abvw", "av(cv-bw)"},
      {"BA", "a^2vw", "acuv", "av(aw-cu)"},
      {"CA", "abuv", "abuv", "0"},
      {"DA", "abvw", "bcuv", "bv(aw-cu)"},
      {"EA", "acuv", "acuv", "0"},
      {"FA", "acv^2", "bcuv", "cv(av-bu)"},
      {"BC", "abuw", "acuv", "au(bw-cv)"},
      {"BD", "abw^2", "acvw", "aw(bw-cv)"},
      {"BE", "acuw", "acuw", "0"},
      {"BF", "acvw", "acvw", "0"},
      {"CB", "abuw", "abuw", "0"},
      {"DB", "abw^2", "bcuw", "bw(aw-cu)"},
      {"EB", "acuw", "acuw", "0"},
      {"FB", "acvw", "bcuw", "cw(av-bu)"},
      {"CD", "b^2uw", "abvw", "bw(bu-av)"},
      {"CE", "bcu^2", "abuw", "bu(cu-aw)"},
      {"CF", "bcuv", "abvw", "bv(cu-aw)"},
      {"DC", "b^2uw", "bcuv", "bu(bw-cv)"},
      {"EC", "bcu^2", "acuv", "cu(bu-av)"},
      {"FC", "bcuv", "bcuv", "0"},
      {"DE", "bcuw", "bcuw", "0"},
      {"DF", "bcvw", "bcvw", "0"},
      {"ED", "bcuw", "acvw", "cw(bu-av)"},
      {"FD", "bcvw", "bcvw", "0"},
      {"EF", "c^2uv", "acvw", "cv(cu-aw)"},
      {"FE", "c^2uv", "bcuw", "cu(cv-bw)"},
  };
  return rows;
}

}  // namespace curled
