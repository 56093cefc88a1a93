#include "curled/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace curled {

using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kProductKeys[] = {"ef", "eg", "fe", "fg", "ge", "gf"};

[[noreturn]] void schema_error(const std::string& why) { throw ParseError("algebra file: " + why); }

FieldDescriptor parse_field(const Json& j) {
  if (!j.is_object()) schema_error("\"field\" must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) schema_error("\"field.kind\" must be a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "rational") {
    if (j.size() != 1) schema_error("a rational field takes no other keys");
    return FieldDescriptor::rational();
  }
  if (kind != "prime") schema_error("unknown field kind \"" + kind + "\"");
  if (j.size() != 2 || !j.contains("p")) schema_error("a prime field needs exactly the key \"p\"");
  const Json& p = j["p"];
  if (p.is_number_unsigned()) return FieldDescriptor::prime(p.get<std::uint64_t>());
  if (p.is_number_integer()) throw InvalidFieldError("field characteristic " + p.dump() + " is not a prime");
  schema_error("\"field.p\" must be an integer");
}

FieldElement parse_literal(const Json& j, FieldDescriptor desc, const std::string& where) {
  if (j.is_number_unsigned()) return FieldElement::from_integer(Integer(std::to_string(j.get<std::uint64_t>())), desc);
  if (j.is_number_integer()) return FieldElement::from_integer(static_cast<std::int64_t>(j.get<std::int64_t>()), desc);
  if (!j.is_string()) schema_error(where + ": scalar literals are integers or \"num/den\" strings");
  const std::string text = j.get<std::string>();
  // Syntax first, so that a malformed string is a schema error over any field.
  parse_field_element(text, FieldDescriptor::rational());
  if (desc.is_prime()) {
    throw InvalidFieldError(where + ": literal \"" + text + "\" is not an integer, as required over " +
                            desc.to_string());
  }
  return parse_field_element(text, desc);
}

Json literal_json(const FieldElement& x) {
  if (x.descriptor().is_prime()) return x.as_residue();
  const Rational& q = x.as_rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return static_cast<std::int64_t>(q.get_num().get_si());
  return x.to_string();
}

Json element_json(const Element& x) { return Json::array({literal_json(x[0]), literal_json(x[1]), literal_json(x[2])}); }

Json field_json(FieldDescriptor desc) {
  if (desc.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "prime"}, {"p", desc.characteristic()}};
}

Json type_json(const CurledType& t) { return Json::array({t.i(), t.j(), t.k()}); }

Json verdicts_json(const std::vector<EquationVerdict>& verdicts) {
  Json out = Json::array();
  for (const EquationVerdict& v : verdicts) {
    Json row{{"name", v.name}, {"equation", v.equation}, {"holds", v.holds}};
    if (v.witness) row["witness"] = Json{{"lhs", element_json(v.witness->first)}, {"rhs", element_json(v.witness->second)}};
    out.push_back(std::move(row));
  }
  return out;
}

Json decider_verdicts_json(const Verdicts& v) {
  return Json{{"curled", v.curled},
              {"ec_bruteforce", v.ec_bruteforce},
              {"ec_theorem", v.ec_theorem},
              {"ec_polynomial", v.ec_polynomial},
              {"zeropotent_bruteforce", v.zeropotent_bruteforce},
              {"zeropotent_condition", v.zeropotent_condition}};
}

Json mode_json(const EnumerationMode& mode) {
  if (std::holds_alternative<ExhaustiveMode>(mode)) return Json{{"kind", "exhaustive"}};
  const SampleMode& s = std::get<SampleMode>(mode);
  return Json{{"kind", "sample"}, {"n", s.count}, {"seed", s.seed}, {"sampler", kSamplerVersion}};
}

Json report_json(const DifferentialReport& r) {
  const DeciderCounts& c = r.counts;
  Json mismatches = Json::array();
  for (const Mismatch& m : r.mismatches) {
    Json row{{"index", m.id.index}};
    if (m.sample_index) row["sample_index"] = *m.sample_index;
    row["verdicts"] = decider_verdicts_json(m.verdicts);
    mismatches.push_back(std::move(row));
  }
  return Json{{"field", field_json(r.field)},
              {"type", type_json(r.type)},
              {"population", to_string(r.population)},
              {"mode", mode_json(r.mode)},
              {"counts",
               {{"visited", c.visited},
                {"tables", c.tables},
                {"curled", c.curled},
                {"ec_bruteforce", c.ec_bruteforce},
                {"ec_theorem", c.ec_theorem},
                {"ec_polynomial", c.ec_polynomial},
                {"zeropotent_bruteforce", c.zeropotent_bruteforce},
                {"zeropotent_condition", c.zeropotent_condition}}},
              {"mismatch_total", r.mismatch_total},
              {"mismatches", std::move(mismatches)}};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

CurledTable parse_algebra_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    schema_error(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "schema_version" && key != "field" && key != "type" && key != "products") {
      schema_error("unknown key \"" + key + "\"");
    }
  }
  if (doc.contains("schema_version")) {
    const Json& v = doc["schema_version"];
    if (!v.is_number_integer() || v.get<std::int64_t>() != kSchemaVersion) {
      schema_error("unsupported schema_version " + v.dump());
    }
  }
  if (!doc.contains("field")) schema_error("missing \"field\"");
  if (!doc.contains("type")) schema_error("missing \"type\"");
  if (!doc.contains("products")) schema_error("missing \"products\"");

  const Json& type = doc["type"];
  if (!type.is_array() || type.size() != 3) schema_error("\"type\" must be an array of three bits");
  int bits[3];
  for (std::size_t n = 0; n < 3; ++n) {
    if (!type[n].is_number_integer() || (type[n].get<std::int64_t>() != 0 && type[n].get<std::int64_t>() != 1)) {
      schema_error("\"type\" entries must be 0 or 1, got " + type[n].dump());
    }
    bits[n] = static_cast<int>(type[n].get<std::int64_t>());
  }

  const Json& products = doc["products"];
  if (!products.is_object()) schema_error("\"products\" must be an object");
  for (const auto& [key, value] : products.items()) {
    if (std::find(std::begin(kProductKeys), std::end(kProductKeys), key) == std::end(kProductKeys)) {
      schema_error("unknown product key \"" + key + "\"");
    }
  }
  for (const char* key : kProductKeys) {
    if (!products.contains(key)) schema_error(std::string("missing product \"") + key + "\"");
    const Json& entry = products[key];
    if (!entry.is_array() || entry.size() != 3) schema_error(std::string("product \"") + key + "\" must have 3 entries");
  }

  // Field validation comes after the schema checks so that exit codes do not
  // depend on key order.
  const FieldDescriptor desc = parse_field(doc["field"]);
  std::array<Element, 6> params = {Element::zero(desc), Element::zero(desc), Element::zero(desc),
                                   Element::zero(desc), Element::zero(desc), Element::zero(desc)};
  for (std::size_t p = 0; p < 6; ++p) {
    const Json& entry = products[kProductKeys[p]];
    for (std::size_t n = 0; n < 3; ++n) {
      params[p][n] = parse_literal(entry[n], desc, std::string("products.") + kProductKeys[p]);
    }
  }
  return CurledTable(desc, CurledType(bits[0], bits[1], bits[2]), std::move(params));
}

CurledTable load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read algebra file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_json(buffer.str());
}

std::string serialize_algebra_json(const CurledTable& table) {
  Json products = Json::object();
  for (std::size_t p = 0; p < 6; ++p) products[kProductKeys[p]] = element_json(table.params()[p]);
  const Json doc{{"schema_version", kSchemaVersion},
                 {"field", field_json(table.descriptor())},
                 {"type", type_json(table.type())},
                 {"products", std::move(products)}};
  return doc.dump(2) + "\n";
}

AlgebraCheck run_check(const CurledTable& table) {
  AlgebraCheck c{table, false, {}, false, {}, std::nullopt, std::nullopt, false, false, std::nullopt, false};
  const bool finite = table.descriptor().is_finite();
  c.curled_symbolic = is_curled_symbolic(table);
  if (finite) {
    c.curled = is_curled_bruteforce(table);
    c.curled_method = "bruteforce";
    c.ec_witness = ec_counterexample(table);
    c.ec_bruteforce = !c.ec_witness.has_value();
    c.zeropotent_bruteforce = is_zeropotent_bruteforce(table);
  } else {
    c.curled = c.curled_symbolic;
    c.curled_method = "symbolic";
  }
  c.conditions = check_conditions(table);
  c.ec_theorem = c.conditions.theorem_verdict();
  c.ec_polynomial = is_ec_polynomial(table);
  c.zeropotent_condition = c.conditions.zeropotent_verdict();
  return c;
}

std::string check_to_json(const AlgebraCheck& c) {
  Json curled{{"verdict", c.curled}, {"method", c.curled_method}, {"symbolic", c.curled_symbolic}};
  if (c.table.descriptor().is_finite()) curled["symbolic_note"] = kSymbolicCaveat;
  Json ec{{"bruteforce", c.ec_bruteforce ? Json(*c.ec_bruteforce) : Json(nullptr)},
          {"theorem", c.ec_theorem},
          {"polynomial", c.ec_polynomial}};
  if (c.ec_witness) ec["witness"] = Json{{"x", element_json(c.ec_witness->first)}, {"y", element_json(c.ec_witness->second)}};
  const Json doc{
      {"schema_version", kSchemaVersion},
      {"field", field_json(c.table.descriptor())},
      {"type", type_json(c.table.type())},
      {"curled", std::move(curled)},
      {"conditions",
       {{"10", verdicts_json(c.conditions.cond10)},
        {"17", verdicts_json(c.conditions.cond17)},
        {"18", verdicts_json(c.conditions.zeropotent18)}}},
      {"endo_commutative", std::move(ec)},
      {"zeropotent",
       {{"bruteforce", c.zeropotent_bruteforce ? Json(*c.zeropotent_bruteforce) : Json(nullptr)},
        {"condition", c.zeropotent_condition}}},
  };
  return doc.dump(2) + "\n";
}

std::string check_to_text(const AlgebraCheck& c) {
  std::ostringstream os;
  const bool finite = c.table.descriptor().is_finite();
  os << "field: " << c.table.descriptor().to_string() << "\n";
  os << "type: " << c.table.type().to_string() << "\n";
  os << "curled: " << yes_no(c.curled) << " (" << c.curled_method << ")\n";
  if (finite) os << "curled (symbolic): " << yes_no(c.curled_symbolic) << " (" << kSymbolicCaveat << ")\n";
  auto section = [&](const char* title, const std::vector<EquationVerdict>& verdicts) {
    os << title << "\n";
    for (const EquationVerdict& v : verdicts) {
      os << "  " << v.name << "  " << v.equation << "  " << (v.holds ? "holds" : "fails");
      if (v.witness) os << ": " << v.witness->first.to_string() << " != " << v.witness->second.to_string();
      os << "\n";
    }
  };
  section("condition 10:", c.conditions.cond10);
  section("condition 17:", c.conditions.cond17);
  section("zeropotency 18:", c.conditions.zeropotent18);
  os << "endo-commutative:\n";
  if (c.ec_bruteforce) {
    os << "  bruteforce: " << yes_no(*c.ec_bruteforce);
    if (c.ec_witness) os << " (x = " << c.ec_witness->first.to_string() << ", y = " << c.ec_witness->second.to_string() << ")";
    os << "\n";
  } else {
    os << "  bruteforce: n/a (infinite field)\n";
  }
  os << "  theorem: " << yes_no(c.ec_theorem) << "\n";
  os << "  polynomial: " << yes_no(c.ec_polynomial) << "\n";
  os << "zeropotent:\n";
  if (c.zeropotent_bruteforce) {
    os << "  bruteforce: " << yes_no(*c.zeropotent_bruteforce) << "\n";
  } else {
    os << "  bruteforce: n/a (infinite field)\n";
  }
  os << "  condition: " << yes_no(c.zeropotent_condition) << "\n";
  return os.str();
}

std::string reports_to_json(const std::vector<DifferentialReport>& reports) {
  Json list = Json::array();
  std::uint64_t tables = 0;
  std::uint64_t mismatches = 0;
  for (const DifferentialReport& r : reports) {
    tables += r.counts.tables;
    mismatches += r.mismatch_total;
    list.push_back(report_json(r));
  }
  const Json doc{{"schema_version", kSchemaVersion},
                 {"tables", tables},
                 {"mismatch_total", mismatches},
                 {"reports", std::move(list)}};
  return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<DifferentialReport>& reports) {
  std::ostringstream os;
  os << kCsvHeader << "\n";
  for (const DifferentialReport& r : reports) {
    const DeciderCounts& c = r.counts;
    os << r.field.characteristic() << ',' << r.type.i() << ',' << r.type.j() << ',' << r.type.k() << ',' << c.tables
       << ',' << c.curled << ',' << c.ec_bruteforce << ',' << c.ec_theorem << ',' << c.ec_polynomial << ','
       << c.zeropotent_bruteforce << ',' << c.zeropotent_condition << ',' << r.mismatch_total << "\n";
  }
  return os.str();
}

}  // namespace curled
