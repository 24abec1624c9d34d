#include "nilpot/document.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace nilpot {

namespace {

const nlohmann::json& require(const nlohmann::json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(std::string("missing key '") + key + "'");
  return *it;
}

FieldSpec parse_field(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rationals") return FieldSpec::rationals();
    throw DocumentError("unknown field '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.size() == 1 && j.contains("prime")) {
    const auto& p = j["prime"];
    if (!p.is_number_unsigned()) throw DocumentError("field.prime must be a positive integer");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what());
    }
  }
  throw DocumentError("field must be \"rationals\" or {\"prime\": p}");
}

Scalar parse_scalar(const FieldSpec& f, const nlohmann::json& j) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, j.dump());
  } catch (const std::exception& e) {
    throw DocumentError(e.what());
  }
  throw DocumentError("scalar must be a string such as \"-3/4\" or an integer, got " + j.dump());
}

std::size_t parse_index(const nlohmann::json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw DocumentError(std::string("bracket index '") + key + "' must be an integer >= 1");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

ordered_json verdict_json(Verdict v) {
  switch (v) {
    case Verdict::Yes: return true;
    case Verdict::No: return false;
    case Verdict::Undetermined: return "undetermined";
  }
  return nullptr;
}

ordered_json dims_json(const std::vector<Subspace>& chain) {
  ordered_json out = ordered_json::array();
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

LieAlgebra parse_algebra_document(const nlohmann::json& doc) {
  if (!doc.is_object()) throw DocumentError("document must be a JSON object");
  static const std::set<std::string> known = {"field", "dim", "brackets", "labels", "name",
                                              "comment"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw DocumentError("unknown key '" + key + "'");
  }
  const FieldSpec f = parse_field(require(doc, "field"));
  const auto& dim = require(doc, "dim");
  if (!dim.is_number_unsigned()) throw DocumentError("dim must be a non-negative integer");
  const auto n = dim.get<std::size_t>();

  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    const auto& list = doc["brackets"];
    if (!list.is_array()) throw DocumentError("brackets must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& b : list) {
      if (!b.is_object()) throw DocumentError("bracket entries must be objects");
      const std::size_t i = parse_index(b, "i"), j = parse_index(b, "j");
      if (i >= j || j > n) {
        throw DocumentError("bracket (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") must satisfy 1 <= i < j <= dim");
      }
      if (!seen.emplace(i, j).second) {
        throw DocumentError("duplicate bracket pair (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
      }
      const auto& coeffs = require(b, "coeffs");
      if (!coeffs.is_array() || coeffs.size() != n) {
        throw DocumentError("bracket (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") needs exactly dim coefficients");
      }
      Vector v;
      for (const auto& c : coeffs) v.push_back(parse_scalar(f, c));
      entries.push_back({i - 1, j - 1, std::move(v)});
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n) throw DocumentError("labels must list dim strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw DocumentError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }
  try {
    return LieAlgebra(f, n, entries, std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw DocumentError(e.what());
  }
}

LieAlgebra parse_algebra_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  return parse_algebra_document(doc);
}

LieAlgebra load_algebra_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra_document(buf.str());
}

ordered_json field_to_json(const FieldSpec& field) {
  if (field.is_rational()) return "rationals";
  return ordered_json{{"prime", field.characteristic()}};
}

ordered_json algebra_to_json(const LieAlgebra& algebra) {
  ordered_json doc;
  doc["field"] = field_to_json(algebra.field());
  doc["dim"] = algebra.dim();
  ordered_json brackets = ordered_json::array();
  for (const auto& e : algebra.entries()) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : e.coeffs) coeffs.push_back(c.to_string());
    brackets.push_back(ordered_json{{"i", e.i + 1}, {"j", e.j + 1}, {"coeffs", coeffs}});
  }
  doc["brackets"] = brackets;
  if (!algebra.labels().empty()) doc["labels"] = algebra.labels();
  return doc;
}

std::string input_digest(const LieAlgebra& algebra) {
  const std::string text = algebra_to_json(algebra).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

Matrix random_invertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m(field, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint64_t raw = rng();
        m(r, c) = field.is_prime() ? Scalar::residue(field, raw)
                                   : Scalar(field, static_cast<long>(raw % 7) - 3);
      }
    if (rank(m) == n) return m;
  }
}

ordered_json admissible_to_json(const Admissible& a) {
  if (a.is_exact()) return a.value();
  return ordered_json(a.values());
}

// ---------------------------------------------------------------------------

Report build_report(const LieAlgebra& input, const ReportOptions& options) {
  Report report;
  ordered_json& doc = report.document;

  doc["input"] = ordered_json{{"field", field_to_json(input.field())},
                              {"dim", input.dim()},
                              {"brackets", input.entries().size()},
                              {"digest", input_digest(input)}};

  LieAlgebra algebra = input;
  if (options.randomize_basis) {
    std::mt19937_64 rng(options.seed);
    algebra = change_basis(input, random_invertible(input.field(), input.dim(), rng));
  }
  doc["basis"] = ordered_json{{"randomized", options.randomize_basis}, {"seed", options.seed}};

  const SeriesReport s = series(algebra);
  doc["series"] = ordered_json{{"nilpotent", s.nilpotent()},
                               {"class", s.nilpotency_class ? ordered_json(*s.nilpotency_class)
                                                            : ordered_json(nullptr)},
                               {"lower_central_dims", dims_json(s.lower_central)},
                               {"derived_series_dims", dims_json(s.derived)},
                               {"center_dim", s.center.dim()}};

  const std::size_t derived_dim = s.lower_central_dim(2);
  const bool in_scope = s.nilpotent() && derived_dim <= 2;

  if (!in_scope) {
    doc["classification"] =
        ordered_json{{"in_scope", false},
                     {"reason", s.nilpotent() ? "dim L^2 = " + std::to_string(derived_dim) + " > 2"
                                              : std::string("not nilpotent")}};
    doc["formula"] = "not-applicable";
    doc["oracle"] = ordered_json{{"schur", schur_dim_oracle(algebra)}};
    doc["checks"] = ordered_json::array();
    doc["verdict"] = "n/a";
    return report;
  }

  CrossCheckOptions cc;
  cc.capability = options.oracle;
  cc.sweep_prime = options.prime;
  const CrossCheckReport check = cross_check(algebra, cc);
  const Classification& c = check.classification;
  const CatalogId& id = *c.catalog;

  doc["classification"] = ordered_json{{"in_scope", true},
                                       {"family", family_name(id.family)},
                                       {"catalog", id.describe()},
                                       {"abelian_summand", id.abelian_summand},
                                       {"derived_dim", c.derived_dim},
                                       {"class", c.nilpotency_class},
                                       {"center_dim", c.center_dim},
                                       {"lower3_dim", c.lower3_dim},
                                       {"center_meet_derived_dim", c.center_meet_derived_dim},
                                       {"stem_dim", c.stem_dim},
                                       {"capable_by_classification", verdict_json(c.capable_by_classification)}};
  const FunctorReport& fr = *check.formula;
  doc["formula"] = ordered_json{{"rule", fr.rule},
                                {"schur", admissible_to_json(fr.schur)},
                                {"exterior", admissible_to_json(fr.exterior)},
                                {"tensor", admissible_to_json(fr.tensor)},
                                {"square", fr.square},
                                {"corank", admissible_to_json(fr.corank)},
                                {"capable", verdict_json(fr.capable)},
                                {"exterior_abelian", fr.exterior_abelian},
                                {"provenance", fr.provenance}};

  if (!options.oracle) {
    doc["checks"] = ordered_json::array();
    doc["verdict"] = "n/a";
    return report;
  }

  const OracleReport& o = check.oracle;
  ordered_json oracle{{"schur", o.schur}, {"exterior", *o.exterior}, {"tensor", *o.tensor}};
  if (o.epicenter_dim) {
    oracle["epicenter_dim"] = *o.epicenter_dim;
    oracle["capable"] = *o.capable;
    oracle["epicenter_field"] = o.epicenter_field;
  } else {
    oracle["epicenter_dim"] = "unavailable";
    oracle["capable"] = "unavailable";
  }
  oracle["notes"] = check.notes;
  doc["oracle"] = oracle;

  ordered_json lines = ordered_json::array();
  for (const auto& l : check.lines) {
    lines.push_back(ordered_json{{"quantity", l.quantity},
                                 {"formula", l.formula},
                                 {"oracle", l.oracle},
                                 {"verdict", l.pass ? "pass" : "fail"}});
  }
  doc["checks"] = lines;
  report.checks_passed = check.passed();
  doc["verdict"] = report.checks_passed ? "pass" : "fail";
  return report;
}

std::string render_pretty(const ordered_json& r) {
  std::ostringstream os;
  const auto& in = r["input"];
  os << "algebra   dim " << in["dim"] << " over "
     << (in["field"].is_string() ? std::string("Q")
                                 : "GF(" + in["field"]["prime"].dump() + ")")
     << "  " << in["digest"].get<std::string>() << "\n";
  const auto& s = r["series"];
  os << "series    lower central " << s["lower_central_dims"].dump() << ", center "
     << s["center_dim"] << ", class " << s["class"].dump() << "\n";
  const auto& c = r["classification"];
  if (c["in_scope"].get<bool>()) {
    os << "family    " << c["catalog"].get<std::string>() << " (stem dim " << c["stem_dim"]
       << ")\n";
  } else {
    os << "family    out of scope: " << c["reason"].get<std::string>() << "\n";
  }
  if (r["formula"].is_object()) {
    const auto& f = r["formula"];
    os << "formula   [" << f["rule"].get<std::string>() << "]  M " << f["schur"].dump()
       << "  wedge " << f["exterior"].dump() << "  tensor " << f["tensor"].dump() << "  corank "
       << f["corank"].dump() << "  capable " << f["capable"].dump() << "\n";
  }
  if (r.contains("oracle")) {
    const auto& o = r["oracle"];
    os << "oracle    M " << o["schur"].dump();
    if (o.contains("exterior")) os << "  wedge " << o["exterior"] << "  tensor " << o["tensor"];
    if (o.contains("capable")) os << "  capable " << o["capable"].dump();
    os << "\n";
  }
  for (const auto& l : r["checks"]) {
    os << "  " << std::left << std::setw(40) << l["quantity"].get<std::string>() << std::setw(16)
       << l["formula"].get<std::string>() << std::setw(16) << l["oracle"].get<std::string>()
       << l["verdict"].get<std::string>() << "\n";
  }
  os << "verdict   " << r["verdict"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace nilpot
