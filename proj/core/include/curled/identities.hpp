#ifndef CURLED_IDENTITIES_HPP
#define CURLED_IDENTITIES_HPP

// Consistency suite for the formal expansion: the reference coefficient
// list, the six Greek-coefficient identities, the six one-variable
// specializations with their grouped brackets, and the regrouping of the
// difference once condition (10) holds.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curled/formal.hpp"

namespace curled {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  /// First differing polynomial (or other diagnostic) when the check fails.
  std::string detail;
};

struct IdentitySection {
  std::string title;
  std::vector<IdentityCheck> checks;

  std::size_t passed() const noexcept;
  bool all_passed() const noexcept { return passed() == checks.size(); }
};

/// One row per ledger entry: the three listed polynomials equal the computed
/// coefficients of that word. A final row checks that no word outside the
/// ledger has a nonzero coefficient.
IdentitySection check_ledger();

/// alpha - delta = beta, gamma - zeta = -epsilon, eta - theta = -iota,
/// kappa - mu = -epsilon, lambda - nu = beta, xi - pi = -iota.
IdentitySection check_greek_identities();

/// One bracket of a specialized difference: the scalar monomial it
/// multiplies, the bracket as condition-expression text, and the
/// condition (10) equation it restates.
struct SpecializationGroup {
  std::string monomial;
  std::string bracket;
  std::string equation;
};

struct SpecializationCase {
  std::string name;  // "(i)" ... "(vi)"
  std::map<Var, Integer> bindings;
  /// The two Greek coefficients that survive, and their common value.
  std::vector<GreekName> surviving;
  std::string surviving_value;
  std::vector<SpecializationGroup> groups;
};

const std::vector<SpecializationCase>& specialization_cases();

/// Per case: the Greek values, the exact grouped difference, and the sign
/// relation between each bracket and its condition (10) equation.
IdentitySection check_specializations();

struct RecombinationSummary {
  std::uint64_t tables_visited = 0;
  /// Tables satisfying every condition (10) equation.
  std::uint64_t tables_checked = 0;
  std::uint64_t assignments_checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first_mismatch;
};

/// Every GF(2) table of every type satisfying condition (10), at all 64
/// assignments of a, b, c, u, v, w: the evaluated difference equals the
/// evaluated recombination.
RecombinationSummary check_recombination();

IdentitySection recombination_section(const RecombinationSummary& summary);

/// All sections in order: ledger, Greek identities, specializations and,
/// when requested, recombination.
std::vector<IdentitySection> run_identity_suite(bool include_recombination = true);

}  // namespace curled

#endif  // CURLED_IDENTITIES_HPP
