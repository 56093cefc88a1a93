#ifndef CURLED_IO_HPP
#define CURLED_IO_HPP

// Algebra files, single-table reports, and harness report serialization.
//
// An algebra file is a JSON document:
//   {
//     "schema_version": 1,
//     "field": {"kind": "prime", "p": 2},          or {"kind": "rational"}
//     "type": [1, 1, 0],
//     "products": {"ef": [0, 0, 1], "eg": [...], "fe": [...],
//                  "fg": [...], "ge": [...], "gf": [...]}
//   }
// Scalars are JSON integers over prime fields; over the rationals they may
// also be "num/den" strings.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curled/algebra.hpp"
#include "curled/conditions.hpp"
#include "curled/oracle.hpp"

namespace curled {

inline constexpr int kSchemaVersion = 1;

/// Throws ParseError when the document is malformed or violates the schema,
/// and InvalidFieldError when the field or a literal is not valid for it
/// (p not prime, a fraction over a prime field, a denominator divisible by p).
CurledTable parse_algebra_json(std::string_view text);
/// Reads and parses a file; an unreadable file is a ParseError.
CurledTable load_algebra_file(const std::string& path);
/// Canonical document: residues over GF(p), reduced fractions over Q.
std::string serialize_algebra_json(const CurledTable& table);

/// Everything the check command reports about one table.
struct AlgebraCheck {
  CurledTable table;
  /// Brute force over finite fields, symbolic over the rationals.
  bool curled = false;
  std::string curled_method;
  /// The symbolic verdict, always computed; over a finite field it only
  /// proves curledness when true.
  bool curled_symbolic = false;
  ConditionReport conditions;
  std::optional<bool> ec_bruteforce;
  std::optional<std::pair<Element, Element>> ec_witness;
  bool ec_theorem = false;
  bool ec_polynomial = false;
  std::optional<bool> zeropotent_bruteforce;
  bool zeropotent_condition = false;
};

inline constexpr const char* kSymbolicCaveat = "sufficient-only over finite fields";

AlgebraCheck run_check(const CurledTable& table);
std::string check_to_json(const AlgebraCheck& check);
std::string check_to_text(const AlgebraCheck& check);

/// One JSON object per report, with field, type, population, mode, counts and
/// the capped mismatch list.
std::string reports_to_json(const std::vector<DifferentialReport>& reports);

inline constexpr const char* kCsvHeader =
    "field,type_i,type_j,type_k,tables,curled,ec_bruteforce,ec_theorem,ec_polynomial,"
    "zeropotent_bruteforce,zeropotent_condition,mismatches";
/// Header line plus one row per report.
std::string reports_to_csv(const std::vector<DifferentialReport>& reports);

}  // namespace curled

#endif  // CURLED_IO_HPP
