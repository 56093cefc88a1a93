#include "curled/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "curled/conditions.hpp"

namespace curled {

namespace {

constexpr std::size_t kCoordinates = 18;

std::vector<Element> all_elements(FieldDescriptor field) {
  const auto values = enumerate_field(field);
  std::vector<Element> out;
  out.reserve(values.size() * values.size() * values.size());
  for (const auto& a : values) {
    for (const auto& b : values) {
      for (const auto& c : values) out.emplace_back(a, b, c);
    }
  }
  return out;
}

void require_finite(const CurledTable& table, const char* what) {
  if (!table.descriptor().is_finite()) {
    throw UnsupportedFieldError(std::string(what) + " needs a finite field, got " + table.descriptor().to_string());
  }
}

}  // namespace

// ------------------------------------------------------------------ TableId

std::uint64_t table_count(FieldDescriptor field) {
  if (!field.is_finite()) throw UnsupportedFieldError("cannot enumerate tables over " + field.to_string());
  const std::uint64_t q = field.characteristic();
  std::uint64_t n = 1;
  for (std::size_t r = 0; r < kCoordinates; ++r) {
    if (n > std::numeric_limits<std::uint64_t>::max() / q) {
      throw OverflowError("q^18 for q = " + std::to_string(q) + " exceeds the 64-bit index range");
    }
    n *= q;
  }
  return n;
}

TableId encode(const CurledTable& table) {
  const FieldDescriptor field = table.descriptor();
  const std::uint64_t q = field.characteristic();
  table_count(field);
  std::uint64_t index = 0;
  for (std::size_t n = kCoordinates; n-- > 0;) {
    index = index * q + table.param(static_cast<Param>(n / 3))[n % 3].as_residue();
  }
  return TableId{field, table.type(), index};
}

CurledTable decode(const TableId& id) {
  const std::uint64_t total = table_count(id.field);
  if (id.index >= total) throw std::out_of_range("table index out of range");
  const std::uint64_t q = id.field.characteristic();
  std::uint64_t rest = id.index;
  std::array<Element, 6> params = {Element::zero(id.field), Element::zero(id.field), Element::zero(id.field),
                                   Element::zero(id.field), Element::zero(id.field), Element::zero(id.field)};
  for (std::size_t n = 0; n < kCoordinates; ++n) {
    params[n / 3][n % 3] = FieldElement::residue(rest % q, id.field);
    rest /= q;
  }
  return CurledTable(id.field, id.type, std::move(params));
}

// --------------------------------------------------------------- deciders

std::optional<std::pair<Element, Element>> ec_counterexample(const CurledTable& table) {
  require_finite(table, "brute-force endo-commutativity");
  const std::vector<Element> elements = all_elements(table.descriptor());
  std::vector<Element> squares;
  squares.reserve(elements.size());
  for (const Element& x : elements) squares.push_back(square(x, table));
  for (std::size_t n = 0; n < elements.size(); ++n) {
    for (std::size_t m = 0; m < elements.size(); ++m) {
      const Element lhs = square(product(elements[n], elements[m], table), table);
      const Element rhs = product(squares[n], squares[m], table);
      if (!(lhs == rhs)) return std::make_pair(elements[n], elements[m]);
    }
  }
  return std::nullopt;
}

bool is_ec_bruteforce(const CurledTable& table) { return !ec_counterexample(table).has_value(); }

bool is_ec_polynomial(const CurledTable& table) {
  static const FormalVector difference = difference_expansion();
  for (const FieldPoly& coord : eval_to_polynomials(difference, table)) {
    if (!coord.is_zero()) return false;
  }
  return true;
}

bool is_zeropotent_bruteforce(const CurledTable& table) {
  require_finite(table, "brute-force zeropotency");
  const auto values = enumerate_field(table.descriptor());
  for (const auto& a : values) {
    for (const auto& b : values) {
      for (const auto& c : values) {
        if (!square(Element(a, b, c), table).is_zero()) return false;
      }
    }
  }
  return true;
}

PolynomialEcDecider::PolynomialEcDecider(FieldDescriptor field) : field_(field) {
  std::map<Monomial, std::size_t, MonomialOrder> slots;
  const FormalVector difference = difference_expansion();
  for (const auto& [word, coeff] : difference.terms()) {
    WordTerms entry{word, {}};
    for (const auto& [m, c] : coeff.terms()) {
      FieldElement k = FieldElement::from_integer(c, field);
      if (k.is_zero()) continue;
      const auto [it, inserted] = slots.try_emplace(m.restricted_to_scalars(), slots.size());
      const auto mask = static_cast<std::uint8_t>((m.degree(Var::i) << 2) | (m.degree(Var::j) << 1) |
                                                  m.degree(Var::k));
      entry.terms.push_back(Term{it->second, mask, std::move(k)});
    }
    if (!entry.terms.empty()) words_.push_back(std::move(entry));
  }
  slot_count_ = slots.size();
}

bool PolynomialEcDecider::operator()(const CurledTable& table) const {
  if (table.descriptor() != field_) throw FieldMismatchError("PolynomialEcDecider built for another field");
  const unsigned type_code = table.type().code();
  std::vector<Element> acc(slot_count_, Element::zero(field_));
  for (const WordTerms& entry : words_) {
    std::optional<Element> value;
    for (const Term& term : entry.terms) {
      if ((term.type_mask & type_code) != term.type_mask) continue;
      if (!value) {
        value = word_value(entry.word, table);
        if (value->is_zero()) break;
      }
      acc[term.slot].add_scaled(term.coeff, *value);
    }
  }
  return std::all_of(acc.begin(), acc.end(), [](const Element& x) { return x.is_zero(); });
}

// ------------------------------------------------------------ enumeration

void enumerate_tables(FieldDescriptor field, CurledType type,
                      const std::function<void(const CurledTable&, std::uint64_t)>& visit, std::uint64_t begin,
                      std::uint64_t end) {
  const std::uint64_t total = table_count(field);
  end = std::min(end, total);
  for (std::uint64_t index = begin; index < end; ++index) visit(decode(TableId{field, type, index}), index);
}

CurledTable sample_table(FieldDescriptor field, CurledType type, std::uint64_t seed, std::uint64_t sample_index) {
  if (!field.is_finite()) throw UnsupportedFieldError("sampling needs a finite field");
  const std::uint64_t q = field.characteristic();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(type.code()),
                    static_cast<std::uint32_t>(sample_index), static_cast<std::uint32_t>(sample_index >> 32)};
  std::mt19937_64 gen(seq);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % q;
  std::array<Element, 6> params = {Element::zero(field), Element::zero(field), Element::zero(field),
                                   Element::zero(field), Element::zero(field), Element::zero(field)};
  for (std::size_t n = 0; n < kCoordinates; ++n) {
    std::uint64_t draw = gen();
    while (draw >= limit) draw = gen();
    params[n / 3][n % 3] = FieldElement::residue(draw % q, field);
  }
  return CurledTable(field, type, std::move(params));
}

// ----------------------------------------------------------------- reports

std::string to_string(Population p) { return p == Population::all ? "all" : "curled"; }

DeciderCounts& DeciderCounts::operator+=(const DeciderCounts& rhs) {
  visited += rhs.visited;
  tables += rhs.tables;
  curled += rhs.curled;
  ec_bruteforce += rhs.ec_bruteforce;
  ec_theorem += rhs.ec_theorem;
  ec_polynomial += rhs.ec_polynomial;
  zeropotent_bruteforce += rhs.zeropotent_bruteforce;
  zeropotent_condition += rhs.zeropotent_condition;
  return *this;
}

void DifferentialReport::merge(const DifferentialReport& later, std::size_t cap) {
  counts += later.counts;
  mismatch_total += later.mismatch_total;
  for (const Mismatch& m : later.mismatches) {
    if (mismatches.size() >= cap) break;
    mismatches.push_back(m);
  }
}

std::uint64_t exhaustive_budget_from_env() {
  const char* text = std::getenv("CAL_BUDGET_TABLES");
  if (text == nullptr || *text == '\0') return HarnessOptions::kDefaultExhaustiveBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (end == text || *end != '\0' || value == 0) return HarnessOptions::kDefaultExhaustiveBudget;
  return value;
}

DeciderSuite::DeciderSuite(FieldDescriptor field) : field_(field), polynomial_(field) {}

Verdicts DeciderSuite::operator()(const CurledTable& table) const {
  Verdicts v;
  v.curled = is_curled_bruteforce(table);
  v.ec_bruteforce = is_ec_bruteforce(table);
  v.ec_theorem = is_ec_by_theorem(table);
  v.ec_polynomial = polynomial_(table);
  v.zeropotent_bruteforce = is_zeropotent_bruteforce(table);
  v.zeropotent_condition = is_zeropotent_by_condition(table);
  return v;
}

namespace {

void tally(DifferentialReport& report, const Verdicts& v, const TableId& id, std::optional<std::uint64_t> sample,
           std::size_t cap) {
  DeciderCounts& c = report.counts;
  ++c.tables;
  c.curled += v.curled;
  c.ec_bruteforce += v.ec_bruteforce;
  c.ec_theorem += v.ec_theorem;
  c.ec_polynomial += v.ec_polynomial;
  c.zeropotent_bruteforce += v.zeropotent_bruteforce;
  c.zeropotent_condition += v.zeropotent_condition;
  if (!v.ec_agree() || !v.zeropotent_agree()) {
    ++report.mismatch_total;
    if (report.mismatches.size() < cap) report.mismatches.push_back(Mismatch{id, sample, v});
  }
}

DifferentialReport empty_report(FieldDescriptor field, CurledType type, Population population,
                                const EnumerationMode& mode) {
  DifferentialReport r;
  r.field = field;
  r.type = type;
  r.population = population;
  r.mode = mode;
  return r;
}

}  // namespace

PopulationReports differential_test_both(FieldDescriptor field, CurledType type, const EnumerationMode& mode,
                                         const HarnessOptions& options) {
  if (!field.is_finite()) throw UnsupportedFieldError("the differential harness needs a finite field");
  const bool exhaustive = std::holds_alternative<ExhaustiveMode>(mode);
  std::uint64_t total = 0;
  if (exhaustive) {
    std::uint64_t count = 0;
    try {
      count = table_count(field);
    } catch (const OverflowError&) {
      throw BudgetExceededError("exhaustive enumeration over " + field.to_string() + " exceeds the table budget");
    }
    if (count > options.exhaustive_budget) {
      throw BudgetExceededError("exhaustive enumeration over " + field.to_string() + " needs " +
                                std::to_string(count) + " tables per type, budget is " +
                                std::to_string(options.exhaustive_budget));
    }
    total = count;
  } else {
    total = std::get<SampleMode>(mode).count;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(1, options.chunk_size);
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<PopulationReports> partial(chunks, PopulationReports{
                                                     empty_report(field, type, Population::all, mode),
                                                     empty_report(field, type, Population::curled_only, mode)});
  const DeciderSuite deciders(field);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      PopulationReports& out = partial[c];
      const std::uint64_t begin = c * chunk;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t n = begin; n < end; ++n) {
        std::optional<std::uint64_t> sample;
        CurledTable table = exhaustive ? decode(TableId{field, type, n})
                                       : sample_table(field, type, std::get<SampleMode>(mode).seed, n);
        if (!exhaustive) sample = n;
        const TableId id = exhaustive ? TableId{field, type, n} : encode(table);
        const Verdicts v = deciders(table);
        ++out.all.counts.visited;
        ++out.curled_only.counts.visited;
        tally(out.all, v, id, sample, options.mismatch_cap);
        if (v.curled) tally(out.curled_only, v, id, sample, options.mismatch_cap);
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || chunks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  PopulationReports result{empty_report(field, type, Population::all, mode),
                           empty_report(field, type, Population::curled_only, mode)};
  for (const PopulationReports& p : partial) {
    result.all.merge(p.all, options.mismatch_cap);
    result.curled_only.merge(p.curled_only, options.mismatch_cap);
  }
  return result;
}

DifferentialReport differential_test(FieldDescriptor field, CurledType type, const EnumerationMode& mode,
                                     Population population, const HarnessOptions& options) {
  PopulationReports both = differential_test_both(field, type, mode, options);
  return population == Population::all ? std::move(both.all) : std::move(both.curled_only);
}

std::vector<DifferentialReport> classify_counts(FieldDescriptor field, const EnumerationMode& mode,
                                                const HarnessOptions& options) {
  std::vector<DifferentialReport> rows;
  for (const CurledType& type : CurledType::all()) {
    rows.push_back(differential_test(field, type, mode, Population::all, options));
  }
  return rows;
}

}  // namespace curled
