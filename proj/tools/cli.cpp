#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "curled/formal.hpp"
#include "curled/identities.hpp"
#include "curled/io.hpp"
#include "curled/oracle.hpp"

namespace curled::cli {

namespace {

// Raised for flag values CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FieldDescriptor parse_harness_field(const std::string& text) {
  std::uint64_t p = 0;
  std::size_t used = 0;
  try {
    p = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw UsageError("--field must be a prime number, got '" + text + "'");
  }
  try {
    return FieldDescriptor::prime(p);
  } catch (const InvalidFieldError& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

std::vector<CurledType> parse_types(const std::string& text) {
  if (text == "all") {
    const auto all = CurledType::all();
    return {all.begin(), all.end()};
  }
  std::vector<CurledType> out;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    int bits[3];
    char c1 = 0, c2 = 0;
    std::istringstream in(group);
    if (!(in >> bits[0] >> c1 >> bits[1] >> c2 >> bits[2]) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
      throw UsageError("--types must be 'all' or i,j,k triples separated by ';', got '" + text + "'");
    }
    try {
      out.emplace_back(bits[0], bits[1], bits[2]);
    } catch (const std::invalid_argument&) {
      throw UsageError("--types entries must be 0 or 1, got '" + group + "'");
    }
  }
  if (out.empty()) throw UsageError("--types is empty");
  return out;
}

struct HarnessFlags {
  std::string field = "2";
  std::string mode;  // empty: exhaustive within budget, else sample
  std::int64_t n = 100000;
  std::uint64_t seed = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string out;
};

void add_harness_flags(CLI::App* cmd, HarnessFlags& f) {
  cmd->add_option("--field", f.field, "Prime characteristic of the field")->capture_default_str();
  cmd->add_option("--mode", f.mode, "exhaustive or sample (default: exhaustive when within budget)")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  cmd->add_option("--n", f.n, "Tables per type in sample mode")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Sampler seed")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "Write the report to this file instead of stdout");
}

EnumerationMode resolve_mode(const HarnessFlags& f, FieldDescriptor field, std::uint64_t budget) {
  if (f.n < 0) throw UsageError("--n must be non-negative, got " + std::to_string(f.n));
  std::string mode = f.mode;
  if (mode.empty()) {
    bool fits = false;
    try {
      fits = table_count(field) <= budget;
    } catch (const OverflowError&) {
    }
    mode = fits ? "exhaustive" : "sample";
  }
  if (mode == "exhaustive") return ExhaustiveMode{};
  return SampleMode{static_cast<std::uint64_t>(f.n), f.seed};
}

HarnessOptions harness_options(const HarnessFlags& f) {
  HarnessOptions options;
  options.threads = f.threads;
  options.exhaustive_budget = exhaustive_budget_from_env();
  return options;
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  if (file) file << content;
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::string mode_label(const EnumerationMode& mode) {
  if (std::holds_alternative<ExhaustiveMode>(mode)) return "exhaustive";
  const SampleMode& s = std::get<SampleMode>(mode);
  return "sample n=" + std::to_string(s.count) + " seed=" + std::to_string(s.seed);
}

// ------------------------------------------------------------------ check

int cmd_check(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  CurledTable table = CurledTable::zero(FieldDescriptor::rational(), CurledType());
  try {
    table = load_algebra_file(path);
  } catch (const InvalidFieldError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadField;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const AlgebraCheck check = run_check(table);
  out << (json ? check_to_json(check) : check_to_text(check));
  return kExitOk;
}

// ----------------------------------------------------------------- expand

int cmd_expand(const std::string& word_text, bool all, std::ostream& out, std::ostream& err) {
  if (all == !word_text.empty()) {
    err << "error: expand needs exactly one of --word or --all\n";
    return kExitUsage;
  }
  std::vector<FormalWord> words;
  try {
    if (all) {
      for (const LedgerRow& row : coefficient_ledger()) words.push_back(FormalWord::parse(row.word));
    } else {
      words.push_back(FormalWord::parse(word_text));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const FormalVector sq = expand_square_of_product();
  const FormalVector prod = expand_product_of_squares();
  const FormalVector diff = difference_expansion();
  std::ostringstream text;
  for (const FormalWord& w : words) {
    text << w.to_string() << " : " << to_string(sq.coefficient(w)) << " | " << to_string(prod.coefficient(w)) << " | "
         << to_string(diff.coefficient(w)) << "\n";
  }
  out << text.str();
  return kExitOk;
}

// ------------------------------------------------------ verify-identities

int cmd_verify_identities(bool skip_recombination, std::ostream& out) {
  const auto sections = run_identity_suite(!skip_recombination);
  std::ostringstream text;
  text << "ledger rows: " << coefficient_ledger().size() << "\n";
  const IdentityCheck* first_failure = nullptr;
  bool all_passed = true;
  for (const IdentitySection& s : sections) {
    text << s.title << ": " << s.passed() << "/" << s.checks.size() << "\n";
    for (const IdentityCheck& c : s.checks) {
      text << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "\n";
      if (!c.passed && !first_failure) first_failure = &c;
    }
    all_passed = all_passed && s.all_passed();
  }
  if (skip_recombination) text << "recombination: skipped\n";
  if (all_passed) {
    text << "all checks passed\n";
  } else {
    text << "first failure: " << first_failure->name << ": " << first_failure->detail << "\n";
  }
  out << text.str();
  return all_passed ? kExitOk : kExitFailed;
}

// --------------------------------------------------------- verify-theorem

int cmd_verify_theorem(const HarnessFlags& f, const std::string& types_text, const std::string& population,
                       std::ostream& out, std::ostream& err) {
  const FieldDescriptor field = parse_harness_field(f.field);
  const std::vector<CurledType> types = parse_types(types_text);
  const HarnessOptions options = harness_options(f);
  const EnumerationMode mode = resolve_mode(f, field, options.exhaustive_budget);

  std::vector<DifferentialReport> reports;
  std::uint64_t tables = 0;
  std::uint64_t mismatches = 0;
  for (const CurledType& type : types) {
    PopulationReports both = differential_test_both(field, type, mode, options);
    tables += both.all.counts.tables;
    if (population != "curled") {
      mismatches += both.all.mismatch_total;
      reports.push_back(std::move(both.all));
    }
    if (population != "all") {
      mismatches += both.curled_only.mismatch_total;
      reports.push_back(std::move(both.curled_only));
    }
  }
  const std::string json = reports_to_json(reports);
  if (f.out.empty()) {
    out << json;
  } else {
    if (!write_file(f.out, json, err)) return kExitUsage;
    out << "verify-theorem: " << field.to_string() << ", " << mode_label(mode) << ", " << types.size()
        << " types, " << tables << " tables, " << mismatches << " mismatches\n";
  }
  if (mismatches != 0) {
    err << "error: " << mismatches << " decider mismatches\n";
    return kExitFailed;
  }
  return kExitOk;
}

// --------------------------------------------------------------- classify

int cmd_classify(const HarnessFlags& f, std::ostream& out, std::ostream& err) {
  const FieldDescriptor field = parse_harness_field(f.field);
  const HarnessOptions options = harness_options(f);
  const EnumerationMode mode = resolve_mode(f, field, options.exhaustive_budget);
  const std::string csv = reports_to_csv(classify_counts(field, mode, options));
  if (f.out.empty()) {
    out << csv;
  } else if (!write_file(f.out, csv, err)) {
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra for 3-dimensional curled algebras", "curled"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Report curledness, conditions and endo-commutativity of an algebra file");
  std::string check_path;
  bool check_json = false;
  check->add_option("path", check_path, "Algebra JSON file")->required();
  check->add_flag("--json", check_json, "Print the report as JSON");

  auto* expand = app.add_subcommand("expand", "Print the coefficients of a word in (xy)^2, x^2y^2 and the difference");
  std::string expand_word;
  bool expand_all = false;
  expand->add_option("--word", expand_word, "Word such as e, A, eA, AB or A^2");
  expand->add_flag("--all", expand_all, "Every word of the coefficient ledger");

  auto* identities = app.add_subcommand("verify-identities", "Run the formal-expansion consistency suite");
  bool skip_recombination = false;
  identities->add_flag("--skip-recombination", skip_recombination, "Skip the GF(2) recombination sweep");

  auto* theorem = app.add_subcommand("verify-theorem", "Differential test of the endo-commutativity deciders");
  HarnessFlags theorem_flags;
  std::string theorem_types = "all";
  std::string theorem_population = "both";
  add_harness_flags(theorem, theorem_flags);
  theorem->add_option("--types", theorem_types, "'all' or i,j,k triples separated by ';'")->capture_default_str();
  theorem->add_option("--population", theorem_population, "all, curled or both")
      ->capture_default_str()
      ->check(CLI::IsMember({"all", "curled", "both"}));

  auto* classify = app.add_subcommand("classify", "Per-type decider counts as CSV");
  HarnessFlags classify_flags;
  add_harness_flags(classify, classify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_path, check_json, out, err);
    if (expand->parsed()) return cmd_expand(expand_word, expand_all, out, err);
    if (identities->parsed()) return cmd_verify_identities(skip_recombination, out);
    if (theorem->parsed()) return cmd_verify_theorem(theorem_flags, theorem_types, theorem_population, out, err);
    if (classify->parsed()) return cmd_classify(classify_flags, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    err << "error: " << e.what() << " (set CAL_BUDGET_TABLES to raise it)\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace curled::cli
