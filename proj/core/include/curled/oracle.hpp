#ifndef CURLED_ORACLE_HPP
#define CURLED_ORACLE_HPP

// Ground-truth deciders and the differential harness.
//
// Three independent routes decide endo-commutativity of a table:
//   * brute force: (xy)^2 == x^2 y^2 for every pair of elements (finite fields),
//   * polynomial identity: the difference expansion vanishes in K[a..w],
//   * the element conditions (10) and (17) from conditions.hpp.
// The harness enumerates or samples tables over small prime fields, runs all
// deciders, and records every disagreement.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "curled/algebra.hpp"
#include "curled/formal.hpp"

namespace curled {

/// Position of a table in the enumeration of all tables of one type over
/// GF(q). Coordinate n of the 18-vector (A_e, A_f, A_g, B_e, ..., F_g) is
/// digit n of index in base q (digit 0 least significant).
struct TableId {
  FieldDescriptor field;
  CurledType type;
  std::uint64_t index = 0;

  friend bool operator==(const TableId&, const TableId&) = default;
};

/// q^18. Throws UnsupportedFieldError over Q and OverflowError when q^18
/// does not fit in 64 bits.
std::uint64_t table_count(FieldDescriptor field);

TableId encode(const CurledTable& table);
/// Throws std::out_of_range when the index is not below table_count.
CurledTable decode(const TableId& id);

/// Every (x, y) with (xy)^2 == x^2 y^2. Throws UnsupportedFieldError over Q.
bool is_ec_bruteforce(const CurledTable& table);
/// First pair (x, y) in enumeration order violating the identity.
std::optional<std::pair<Element, Element>> ec_counterexample(const CurledTable& table);

/// The difference expansion evaluated at the table is the zero polynomial.
bool is_ec_polynomial(const CurledTable& table);

/// x^2 == 0 for all p^3 elements. Throws UnsupportedFieldError over Q.
bool is_zeropotent_bruteforce(const CurledTable& table);

/// Same verdict as is_ec_polynomial, with the difference expansion compiled
/// once per field: every coefficient is pre-mapped into K and bucketed by
/// its monomial in a..w.
class PolynomialEcDecider {
 public:
  explicit PolynomialEcDecider(FieldDescriptor field);
  bool operator()(const CurledTable& table) const;

 private:
  struct Term {
    std::size_t slot;
    std::uint8_t type_mask;  // bit 2: i, bit 1: j, bit 0: k
    FieldElement coeff;
  };
  struct WordTerms {
    FormalWord word;
    std::vector<Term> terms;
  };
  FieldDescriptor field_;
  std::size_t slot_count_ = 0;
  std::vector<WordTerms> words_;
};

/// Calls visit(table, index) for every table of the given type with index
/// in [begin, min(end, q^18)), in increasing index order.
void enumerate_tables(FieldDescriptor field, CurledType type,
                      const std::function<void(const CurledTable&, std::uint64_t)>& visit,
                      std::uint64_t begin = 0, std::uint64_t end = UINT64_MAX);

/// The table drawn for one sample index: coordinates are i.i.d. uniform
/// over GF(q) from std::mt19937_64 seeded through std::seed_seq with
/// (seed low, seed high, q, type code, index low, index high); each
/// coordinate takes one 64-bit draw, rejected and redrawn when it falls
/// above the largest multiple of q, then reduced mod q.
CurledTable sample_table(FieldDescriptor field, CurledType type, std::uint64_t seed, std::uint64_t sample_index);
inline constexpr const char* kSamplerVersion = "mt19937_64-seedseq-reject-v1";

struct ExhaustiveMode {};
struct SampleMode {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};
using EnumerationMode = std::variant<ExhaustiveMode, SampleMode>;

enum class Population { all, curled_only };
std::string to_string(Population p);

struct Verdicts {
  bool curled = false;
  bool ec_bruteforce = false;
  bool ec_theorem = false;
  bool ec_polynomial = false;
  bool zeropotent_bruteforce = false;
  bool zeropotent_condition = false;

  bool ec_agree() const noexcept { return ec_bruteforce == ec_theorem && ec_theorem == ec_polynomial; }
  bool zeropotent_agree() const noexcept { return zeropotent_bruteforce == zeropotent_condition; }
};

struct DeciderCounts {
  std::uint64_t visited = 0;
  std::uint64_t tables = 0;  // tables in the population
  std::uint64_t curled = 0;
  std::uint64_t ec_bruteforce = 0;
  std::uint64_t ec_theorem = 0;
  std::uint64_t ec_polynomial = 0;
  std::uint64_t zeropotent_bruteforce = 0;
  std::uint64_t zeropotent_condition = 0;

  DeciderCounts& operator+=(const DeciderCounts& rhs);
  friend bool operator==(const DeciderCounts&, const DeciderCounts&) = default;
};

struct Mismatch {
  TableId id;
  /// Present in sample mode.
  std::optional<std::uint64_t> sample_index;
  Verdicts verdicts;

  friend bool operator==(const Mismatch& lhs, const Mismatch& rhs) {
    return lhs.id == rhs.id && lhs.sample_index == rhs.sample_index;
  }
};

struct DifferentialReport {
  FieldDescriptor field = FieldDescriptor::rational();
  CurledType type;
  Population population = Population::all;
  EnumerationMode mode;
  DeciderCounts counts;
  std::uint64_t mismatch_total = 0;
  /// The first mismatches in enumeration order, at most the configured cap.
  std::vector<Mismatch> mismatches;

  bool clean() const noexcept { return mismatch_total == 0; }
  /// Appends a report for a later chunk of the same enumeration.
  void merge(const DifferentialReport& later, std::size_t cap);
};

struct HarnessOptions {
  unsigned threads = 1;
  /// Largest q^18 accepted in exhaustive mode.
  std::uint64_t exhaustive_budget = kDefaultExhaustiveBudget;
  std::size_t mismatch_cap = 100;
  /// Tables per work unit handed to a thread.
  std::uint64_t chunk_size = 1u << 14;

  static constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t{1} << 18;
};

/// Budget from CAL_BUDGET_TABLES when set to a positive integer, else the default.
std::uint64_t exhaustive_budget_from_env();

/// Runs every decider on one table.
class DeciderSuite {
 public:
  explicit DeciderSuite(FieldDescriptor field);
  Verdicts operator()(const CurledTable& table) const;

 private:
  FieldDescriptor field_;
  PolynomialEcDecider polynomial_;
};

/// Reports for both populations from a single pass over the tables.
struct PopulationReports {
  DifferentialReport all;
  DifferentialReport curled_only;
};

/// Throws UnsupportedFieldError over Q and BudgetExceededError when
/// exhaustive mode is requested for q^18 above the budget.
PopulationReports differential_test_both(FieldDescriptor field, CurledType type, const EnumerationMode& mode,
                                         const HarnessOptions& options = {});
DifferentialReport differential_test(FieldDescriptor field, CurledType type, const EnumerationMode& mode,
                                     Population population, const HarnessOptions& options = {});

/// One DifferentialReport (population all) per type, in type-code order.
std::vector<DifferentialReport> classify_counts(FieldDescriptor field, const EnumerationMode& mode,
                                                const HarnessOptions& options = {});

}  // namespace curled

#endif  // CURLED_ORACLE_HPP
