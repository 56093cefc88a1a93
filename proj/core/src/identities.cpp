#include "curled/identities.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "curled/conditions.hpp"
#include "curled/oracle.hpp"

namespace curled {

std::size_t IdentitySection::passed() const noexcept {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed;
  return n;
}

namespace {

std::string mismatch(const std::string& what, const std::string& expected, const std::string& computed) {
  return what + ": expected " + expected + ", computed " + computed;
}

Monomial monomial_from_text(const std::string& text) {
  const ScalarPoly p = parse_scalar_poly(text);
  if (p.size() != 1) throw ParseError("'" + text + "' is not a single monomial");
  return p.terms().begin()->first;
}

FormalVector bracket_vector(const std::string& text) { return ConditionExpr::parse(text).to_formal(); }

std::string one_line(const FormalVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [word, coeff] : v.terms()) {
    if (!out.empty()) out += "; ";
    out += word.to_string() + " : " + to_string(coeff);
  }
  return out;
}

}  // namespace

IdentitySection check_ledger() {
  IdentitySection section{"coefficient ledger", {}};
  const FormalVector sq = expand_square_of_product();
  const FormalVector prod = expand_product_of_squares();
  const FormalVector diff = difference_expansion();
  std::set<FormalWord> listed;
  for (const LedgerRow& row : coefficient_ledger()) {
    IdentityCheck check{std::string(row.word), true, {}};
    const FormalWord word = FormalWord::parse(row.word);
    listed.insert(word);
    const std::pair<std::string_view, const FormalVector*> parts[] = {
        {row.square_of_product, &sq}, {row.product_of_squares, &prod}, {row.difference, &diff}};
    const char* labels[] = {"(xy)^2", "x^2y^2", "difference"};
    for (std::size_t n = 0; n < 3 && check.passed; ++n) {
      const ScalarPoly expected = parse_scalar_poly(parts[n].first);
      const ScalarPoly computed = parts[n].second->coefficient(word);
      if (!(expected == computed)) {
        check.passed = false;
        check.detail = mismatch(std::string(row.word) + " " + labels[n], to_string(expected), to_string(computed));
      }
    }
    section.checks.push_back(std::move(check));
  }
  IdentityCheck coverage{"no unlisted words", true, {}};
  for (const FormalVector* v : {&sq, &prod, &diff}) {
    for (const auto& [word, coeff] : v->terms()) {
      if (!listed.count(word)) {
        coverage.passed = false;
        coverage.detail = "word " + word.to_string() + " has coefficient " + to_string(coeff) + " but is not listed";
        break;
      }
    }
    if (!coverage.passed) break;
  }
  section.checks.push_back(std::move(coverage));
  return section;
}

IdentitySection check_greek_identities() {
  struct Row {
    GreekName lhs, rhs, result;
    int sign;
  };
  using G = GreekName;
  const Row rows[] = {
      {G::alpha, G::delta, G::beta, 1},      {G::gamma, G::zeta, G::epsilon, -1},
      {G::eta, G::theta, G::iota, -1},       {G::kappa, G::mu, G::epsilon, -1},
      {G::lambda, G::nu, G::beta, 1},        {G::xi, G::pi, G::iota, -1},
  };
  IdentitySection section{"Greek identities", {}};
  for (const Row& r : rows) {
    const std::string name = std::string(greek_label(r.lhs)) + " - " + std::string(greek_label(r.rhs)) + " = " +
                             (r.sign < 0 ? "-" : "") + std::string(greek_label(r.result));
    const ScalarPoly computed = greek_poly(r.lhs) - greek_poly(r.rhs);
    const ScalarPoly expected = r.sign < 0 ? -greek_poly(r.result) : greek_poly(r.result);
    IdentityCheck check{name, computed == expected, {}};
    if (!check.passed) check.detail = mismatch(name, to_string(expected), to_string(computed));
    section.checks.push_back(std::move(check));
  }
  return section;
}

const std::vector<SpecializationCase>& specialization_cases() {
  using G = GreekName;
  static const std::vector<SpecializationCase> cases = {
      {"(i)", {{Var::a, 1}, {Var::b, 0}, {Var::c, 0}}, {G::alpha, G::delta}, "vw",
       {{"v^2", "A^2-ijA", "10-1"},
        {"w^2", "B^2-ikB", "10-2"},
        {"uv", "i(Ae-eC)", "10-13"},
        {"vw", "AB+BA-ie(D+F)", "10-7"},
        {"uw", "i(Be-eE)", "10-14"}}},
      {"(ii)", {{Var::b, 1}, {Var::a, 0}, {Var::c, 0}}, {G::kappa, G::mu}, "uw",
       {{"u^2", "C^2-ijC", "10-3"},
        {"w^2", "D^2-jkD", "10-4"},
        {"uv", "j(Cf-fA)", "10-15"},
        {"uw", "CD+DC-jf(B+E)", "10-9"},
        {"vw", "j(Df-fF)", "10-16"}}},
      {"(iii)", {{Var::c, 1}, {Var::a, 0}, {Var::b, 0}}, {G::xi, G::pi}, "uv",
       {{"u^2", "E^2-ikE", "10-5"},
        {"v^2", "F^2-jkF", "10-6"},
        {"uv", "EF+FE-kg(A+C)", "10-11"},
        {"uw", "k(Eg-gB)", "10-17"},
        {"vw", "k(Fg-gD)", "10-18"}}},
      {"(iv)", {{Var::u, 1}, {Var::v, 0}, {Var::w, 0}}, {G::lambda, G::nu}, "bc",
       {{"b^2", "C^2-ijC", "10-3"},
        {"c^2", "E^2-ikE", "10-5"},
        {"ab", "i(eC-Ae)", "10-13"},
        {"ac", "i(eE-Be)", "10-14"},
        {"bc", "CE+EC-i(D+F)e", "10-8"}}},
      {"(v)", {{Var::v, 1}, {Var::u, 0}, {Var::w, 0}}, {G::gamma, G::zeta}, "ac",
       {{"a^2", "A^2-ijA", "10-1"},
        {"c^2", "F^2-jkF", "10-6"},
        {"ab", "j(fA-Cf)", "10-15"},
        {"bc", "j(fF-Df)", "10-16"},
        {"ac", "AF+FA-j(B+E)f", "10-10"}}},
      {"(vi)", {{Var::w, 1}, {Var::u, 0}, {Var::v, 0}}, {G::eta, G::theta}, "ab",
       {{"a^2", "B^2-ikB", "10-2"},
        {"b^2", "D^2-jkD", "10-4"},
        {"ac", "k(gB-Eg)", "10-17"},
        {"ab", "BD+DB-k(A+C)g", "10-12"},
        {"bc", "k(gD-Fg)", "10-18"}}},
  };
  return cases;
}

IdentitySection check_specializations() {
  IdentitySection section{"specializations", {}};
  const FormalVector diff = difference_expansion();
  std::map<std::string, const ConditionEquation*> equations;
  for (const ConditionEquation& eq : condition10_equations()) equations[eq.name] = &eq;

  for (const SpecializationCase& sc : specialization_cases()) {
    // Greek values.
    IdentityCheck greek{sc.name + " Greek values", true, {}};
    const ScalarPoly value = parse_scalar_poly(sc.surviving_value);
    for (GreekName g : all_greek_names()) {
      const bool survives = std::find(sc.surviving.begin(), sc.surviving.end(), g) != sc.surviving.end();
      const ScalarPoly expected = survives ? value : ScalarPoly{};
      const ScalarPoly computed = substitute(greek_poly(g), sc.bindings);
      if (!(expected == computed)) {
        greek.passed = false;
        greek.detail = mismatch(std::string(greek_label(g)), to_string(expected), to_string(computed));
        break;
      }
    }
    section.checks.push_back(std::move(greek));

    // Grouped difference.
    const auto groups = group_by_scalar_monomial(specialize(diff, sc.bindings));
    std::map<Monomial, FormalVector, MonomialOrder> expected_groups;
    for (const SpecializationGroup& g : sc.groups) expected_groups[monomial_from_text(g.monomial)] = bracket_vector(g.bracket);
    IdentityCheck grouped{sc.name + " grouped difference", true, {}};
    for (const auto& [m, v] : expected_groups) {
      auto it = groups.find(m);
      const FormalVector computed = it == groups.end() ? FormalVector{} : it->second;
      if (!(computed == v)) {
        grouped.passed = false;
        grouped.detail = mismatch(m.to_string() + " group", one_line(v), one_line(computed));
        break;
      }
    }
    if (grouped.passed) {
      for (const auto& [m, v] : groups) {
        if (!expected_groups.count(m)) {
          grouped.passed = false;
          grouped.detail = "unexpected group " + m.to_string() + ": " + one_line(v);
          break;
        }
      }
    }
    section.checks.push_back(std::move(grouped));

    // Each bracket restates an equation of condition (10).
    IdentityCheck restated{sc.name + " brackets restate condition (10)", true, {}};
    for (const SpecializationGroup& g : sc.groups) {
      const FormalVector bracket = bracket_vector(g.bracket);
      const FormalVector eq = equations.at(g.equation)->difference();
      if (!(bracket == eq) && !(bracket == -eq)) {
        restated.passed = false;
        restated.detail = mismatch(g.monomial + " bracket vs " + g.equation, one_line(eq), one_line(bracket));
        break;
      }
    }
    section.checks.push_back(std::move(restated));
  }
  return section;
}

RecombinationSummary check_recombination() {
  const FieldDescriptor gf2 = FieldDescriptor::prime(2);
  const FormalVector diff = difference_expansion();
  const FormalVector regrouped = recombination_expansion();
  const auto& cond10 = condition10_equations();
  const FieldElement zero = FieldElement::zero(gf2);
  const FieldElement one = FieldElement::one(gf2);
  constexpr Var kScalars[] = {Var::a, Var::b, Var::c, Var::u, Var::v, Var::w};

  RecombinationSummary summary;
  for (const CurledType& type : CurledType::all()) {
    enumerate_tables(gf2, type, [&](const CurledTable& table, std::uint64_t index) {
      ++summary.tables_visited;
      for (const ConditionEquation& eq : cond10) {
        if (!(eq.lhs.evaluate(table) == eq.rhs.evaluate(table))) return;
      }
      ++summary.tables_checked;
      const FormalEvaluator lhs(diff, table);
      const FormalEvaluator rhs(regrouped, table);
      for (unsigned bits = 0; bits < 64; ++bits) {
        std::map<Var, FieldElement> scalars;
        for (unsigned n = 0; n < 6; ++n) scalars.emplace(kScalars[n], (bits >> (5 - n)) & 1u ? one : zero);
        ++summary.assignments_checked;
        const Element l = lhs.at(scalars);
        const Element r = rhs.at(scalars);
        if (!(l == r)) {
          ++summary.mismatches;
          if (!summary.first_mismatch) {
            std::ostringstream os;
            os << "type " << type.to_string() << " index " << index << " assignment " << bits << ": difference "
               << l.to_string() << ", regrouped " << r.to_string();
            summary.first_mismatch = os.str();
          }
        }
      }
    });
  }
  return summary;
}

IdentitySection recombination_section(const RecombinationSummary& summary) {
  IdentitySection section{"recombination", {}};
  IdentityCheck check{"GF(2) tables satisfying condition (10): " + std::to_string(summary.tables_checked) +
                          " tables, " + std::to_string(summary.assignments_checked) + " assignments",
                      summary.mismatches == 0 && summary.tables_checked > 0, {}};
  if (summary.first_mismatch) {
    check.detail = std::to_string(summary.mismatches) + " mismatches; first: " + *summary.first_mismatch;
  } else if (summary.tables_checked == 0) {
    check.detail = "no table satisfies condition (10)";
  }
  section.checks.push_back(std::move(check));
  return section;
}

std::vector<IdentitySection> run_identity_suite(bool include_recombination) {
  std::vector<IdentitySection> sections;
  sections.push_back(check_ledger());
  sections.push_back(check_greek_identities());
  sections.push_back(check_specializations());
  if (include_recombination) sections.push_back(recombination_section(check_recombination()));
  return sections;
}

}  // namespace curled
