#include "nilpot/suite.hpp"

#include "nilpot/constructions.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

namespace nilpot {

bool CaseResult::passed() const {
  return error.empty() &&
         std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::function<LieAlgebra()> catalog(Family family, std::size_t size = 0, std::size_t k = 0,
                                    FieldSpec field = FieldSpec::rationals(),
                                    std::optional<long> parameter = std::nullopt) {
  return [=] {
    CatalogId id{family, size, std::nullopt, k};
    if (parameter) id.parameter = Scalar(field, *parameter);
    return make_catalog(id, field);
  };
}

std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

void add_capable_sum(std::vector<SuiteCase>& out, const std::string& name, Family family,
                     std::int64_t schur, std::int64_t exterior, std::int64_t tensor,
                     std::int64_t n, FieldSpec field = FieldSpec::rationals(),
                     std::optional<long> parameter = std::nullopt) {
  out.push_back({name + " + A(1)", "abelian-summands", catalog(family, 0, 1, field, parameter),
                 {schur, exterior, tensor, choose2(n) - schur, true}});
}

}  // namespace

std::vector<SuiteCase> builtin_suite() {
  std::vector<SuiteCase> s;
  const FieldSpec gf2 = FieldSpec::prime(2);
  const FieldSpec gf3 = FieldSpec::prime(3);

  // Named capable stems.
  s.push_back({"L5_8", "catalog", catalog(Family::L58), {6, 8, 14, 4, true}});
  s.push_back({"L6_22(eps=1) over GF(3)", "catalog", catalog(Family::L622, 0, 0, gf3, 1),
               {8, 10, 20, 7, true}});
  s.push_back({"L6_22(eps=1) over Q", "catalog", catalog(Family::L622, 0, 0, Q, 1),
               {8, 10, 20, 7, true}});
  s.push_back({"L6_7_2(eta=0) over GF(2)", "catalog", catalog(Family::L672, 0, 0, gf2, 0),
               {8, 10, 20, 7, true}});
  s.push_back({"L6_7_2(eta=1) over GF(2)", "catalog", catalog(Family::L672, 0, 0, gf2, 1),
               {8, 10, 20, 7, true}});
  s.push_back({"L1", "catalog", catalog(Family::L1), {9, 11, 26, 12, true}});
  s.push_back({"L4_3", "catalog", catalog(Family::L43), {2, 4, 7, 4, true}});
  s.push_back({"L5_5", "catalog", catalog(Family::L55), {4, 6, 12, 6, true}});

  const std::int64_t heisenberg[] = {2, 5, 14, 27};
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto n = static_cast<std::int64_t>(2 * m + 1);
    const std::int64_t schur = heisenberg[m - 1];
    s.push_back({"H(" + std::to_string(m) + ")", "heisenberg", catalog(Family::Heisenberg, m),
                 {schur, schur + 1, schur + 1 + choose2(n), choose2(n) - schur, m == 1}});
  }

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    s.push_back({"A(" + std::to_string(n) + ")", "abelian", catalog(Family::Abelian, n),
                 {choose2(nn), choose2(nn), nn * nn, 0, n > 1}});
  }

  s.push_back({"H(1) + A(1)", "abelian-summands", catalog(Family::Heisenberg, 1, 1),
               {4, 5, 11, 2, true}});
  add_capable_sum(s, "L5_8", Family::L58, 9, 11, 21, 6);
  add_capable_sum(s, "L6_22(eps=1)", Family::L622, 12, 14, 29, 7, gf3, 1);
  add_capable_sum(s, "L6_7_2(eta=1)", Family::L672, 12, 14, 29, 7, gf2, 1);
  add_capable_sum(s, "L1", Family::L1, 14, 16, 37, 8);
  add_capable_sum(s, "L4_3", Family::L43, 4, 6, 12, 5);
  add_capable_sum(s, "L5_5", Family::L55, 7, 9, 19, 6);

  s.push_back({"H(2) + A(1)", "non-capable", catalog(Family::Heisenberg, 2, 1),
               {9, 10, 25, 6, false}});
  s.push_back({"L4_3 with one central pair", "non-capable",
               [] { return l43_with_central_pairs(Q, 1); }, {6, 8, 18, 9, false}});
  s.push_back({"L5_5 with one central pair", "non-capable",
               [] { return l55_with_central_pairs(Q, 1); }, {10, 12, 27, 11, false}});

  // Rank-2 generalized Heisenberg stems: only the admissible set is known.
  s.push_back({"glued H(2), H(1)", "generalized-heisenberg",
               [] { return glued_heisenbergs(Q, {2, 1}, {{1, 0}, {0, 1}}); }, {}});
  s.push_back({"glued H(2), H(2)", "generalized-heisenberg",
               [] { return glued_heisenbergs(Q, {2, 2}, {{1, 0}, {0, 1}}); }, {}});
  s.push_back({"glued H(1), H(1), H(1)", "generalized-heisenberg",
               [] { return glued_heisenbergs(Q, {1, 1, 1}, {{1, 0}, {0, 1}, {1, 1}}); }, {}});
  s.push_back({"L5_8 glued to H(1)", "generalized-heisenberg",
               [] { return l58_glued_heisenberg(Q); }, {}});
  return s;
}

std::vector<SuiteCase> directory_suite(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw DocumentError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SuiteCase> out;
  for (const auto& f : files) {
    LieAlgebra algebra = load_algebra_document(f);
    out.push_back({f.filename().string(), "documents", [algebra] { return algebra; }, {}});
  }
  return out;
}

void apply_golden_overrides(std::vector<SuiteCase>& suite, const nlohmann::json& overrides) {
  if (!overrides.is_object()) throw DocumentError("golden overrides must be a JSON object");
  for (const auto& [name, values] : overrides.items()) {
    auto it = std::find_if(suite.begin(), suite.end(),
                           [&](const SuiteCase& c) { return c.name == name; });
    if (it == suite.end()) throw DocumentError("no suite case named '" + name + "'");
    if (!values.is_object()) throw DocumentError("overrides for '" + name + "' must be an object");
    for (const auto& [key, v] : values.items()) {
      if (key == "capable") {
        if (!v.is_boolean()) throw DocumentError("capable must be true or false");
        it->golden.capable = v.get<bool>();
        continue;
      }
      if (!v.is_number_integer()) throw DocumentError(key + " must be an integer");
      const auto value = v.get<std::int64_t>();
      if (key == "schur") it->golden.schur = value;
      else if (key == "exterior") it->golden.exterior = value;
      else if (key == "tensor") it->golden.tensor = value;
      else if (key == "corank") it->golden.corank = value;
      else throw DocumentError("unknown golden key '" + key + "'");
    }
  }
}

namespace {

CaseResult run_case(const SuiteCase& c, const CrossCheckOptions& options) {
  CaseResult r{c.name, c.group, {}, {}, {}, {}};
  try {
    const LieAlgebra algebra = c.build();
    if (const auto bad = validate(algebra); !bad.empty()) {
      r.error = "Jacobi identity fails on " + std::to_string(bad.size()) + " triple(s)";
      return r;
    }
    if (!series(algebra).nilpotent()) {
      r.error = "not nilpotent";
      return r;
    }
    const CrossCheckReport report = cross_check(algebra, options);
    r.family = report.classification.in_scope() ? report.classification.catalog->describe()
                                                : "out of scope";
    r.lines = report.lines;
    r.notes = report.notes;

    const auto& o = report.oracle;
    const auto n = static_cast<std::int64_t>(algebra.dim());
    auto golden = [&](const char* what, std::optional<std::int64_t> expected,
                      std::optional<std::int64_t> oracle, const Admissible* formula) {
      if (!expected) return;
      const bool ok = oracle == expected && (!formula || formula->contains(*expected));
      r.lines.push_back({std::string("golden ") + what + " = " + std::to_string(*expected),
                         formula ? formula->to_string() : "-",
                         oracle ? std::to_string(*oracle) : "unavailable", ok});
    };
    const FunctorReport* fr = report.formula ? &*report.formula : nullptr;
    golden("schur", c.golden.schur, o.schur, fr ? &fr->schur : nullptr);
    golden("exterior", c.golden.exterior, o.exterior, fr ? &fr->exterior : nullptr);
    golden("tensor", c.golden.tensor, o.tensor, fr ? &fr->tensor : nullptr);
    golden("corank", c.golden.corank, n * (n - 1) / 2 - o.schur, fr ? &fr->corank : nullptr);
    if (c.golden.capable && options.capability) {
      const bool expected = *c.golden.capable;
      const bool ok = o.capable == expected && fr && (fr->capable == Verdict::Yes) == expected;
      r.lines.push_back({std::string("golden capable = ") + (expected ? "true" : "false"),
                         fr ? to_string(fr->capable) : "-",
                         o.capable ? (*o.capable ? "true" : "false") : "unavailable", ok});
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace

SuiteSummary run_suite(const std::vector<SuiteCase>& suite, const CrossCheckOptions& options,
                       unsigned threads) {
  std::vector<CaseResult> results(suite.size());
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, suite.size()));
  CrossCheckOptions per_case = options;
  if (workers > 1) per_case.threads = 1;

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < suite.size();) results[i] = run_case(suite[i], per_case);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::stable_sort(results.begin(), results.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
  SuiteSummary summary;
  for (const auto& r : results) {
    GroupTally& g = summary.groups[r.group];
    ++g.cases;
    const std::size_t checks = r.error.empty() ? r.lines.size() : 1;
    std::size_t failures = r.error.empty() ? 0 : 1;
    for (const auto& l : r.lines) failures += !l.pass;
    g.checks += checks;
    g.failures += failures;
    summary.checks += checks;
    summary.failures += failures;
  }
  summary.cases = std::move(results);
  return summary;
}

std::string render_summary(const SuiteSummary& summary, bool verbose) {
  std::ostringstream os;
  for (const auto& r : summary.cases) {
    os << (r.passed() ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << r.name;
    if (!r.error.empty()) {
      os << "error: " << r.error << "\n";
      continue;
    }
    os << r.family << "\n";
    for (const auto& l : r.lines) {
      if (l.pass && !verbose) continue;
      os << "        " << (l.pass ? "ok   " : "FAIL ") << std::setw(40) << l.quantity
         << " formula " << std::setw(14) << l.formula << " oracle " << l.oracle << "\n";
    }
  }
  os << "\n";
  for (const auto& [group, g] : summary.groups) {
    os << std::left << std::setw(24) << group << std::right << std::setw(4) << g.cases
       << " cases " << std::setw(5) << g.checks - g.failures << "/" << g.checks
       << " checks passed\n";
  }
  os << "total: " << summary.checks - summary.failures << "/" << summary.checks
     << " checks passed\n";
  return os.str();
}

}  // namespace nilpot
