// nilpot: structure-constant documents in, invariants and cross-checks out.
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 Jacobi failure, 3 check mismatch.

#include "nilpot/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace nilpot;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;

FieldSpec field_for(std::uint64_t prime) {
  return prime == 0 ? FieldSpec::rationals() : FieldSpec::prime(prime);
}

int print_violations(const LieAlgebra& algebra, std::ostream& os) {
  const auto bad = validate(algebra);
  for (const auto& v : bad) {
    os << "Jacobi fails on (" << v.i + 1 << ", " << v.j + 1 << ", " << v.k + 1 << "): residual [";
    for (std::size_t t = 0; t < v.residual.size(); ++t) {
      os << (t ? ", " : "") << v.residual[t].to_string();
    }
    os << "]\n";
  }
  return bad.empty() ? kOk : kInvalid;
}

int cmd_validate(const std::string& path) {
  const LieAlgebra algebra = load_algebra_document(path);
  const int status = print_violations(algebra, std::cout);
  if (status == kOk) {
    std::cout << "ok: " << algebra.dim() << "-dimensional Lie algebra over "
              << algebra.field().name() << "\n";
  }
  return status;
}

void print_catalog_list() {
  std::cout << "A       A(n), dimension n (--n)\n"
               "H       Heisenberg H(m), dimension 2m+1 (--m)\n"
               "L4_3    dimension 4\n"
               "L5_5    dimension 5\n"
               "L5_8    dimension 5\n"
               "L6_22   dimension 6, parameter --eps, characteristic != 2\n"
               "L6_7_2  dimension 6, parameter --eta, needs --prime 2\n"
               "L1      dimension 7\n"
               "\nEvery name accepts --abelian k to add A(k) and --prime p for GF(p).\n";
}

struct CatalogArgs {
  std::string name;
  std::size_t m = 1;
  std::size_t n = 1;
  std::string eps;
  std::string eta;
  std::uint64_t prime = 0;
  std::size_t abelian = 0;
  bool list = false;
};

int cmd_catalog(const CatalogArgs& a) {
  if (a.list) {
    print_catalog_list();
    return kOk;
  }
  if (a.name.empty()) {
    std::cerr << "catalog: a name is required (see --list)\n";
    return kInputError;
  }
  const auto family = family_from_name(a.name);
  if (!family) {
    std::cerr << "catalog: unknown name '" << a.name << "' (see --list)\n";
    return kInputError;
  }
  const FieldSpec field = field_for(a.prime);
  CatalogId id{*family, 0, std::nullopt, a.abelian};
  if (*family == Family::Heisenberg) id.size = a.m;
  if (*family == Family::Abelian) id.size = a.n;
  const std::string& parameter = *family == Family::L622 ? a.eps : a.eta;
  if (!parameter.empty()) id.parameter = Scalar::parse(field, parameter);
  std::cout << algebra_to_json(make_catalog(id, field)).dump(2) << "\n";
  return kOk;
}

int cmd_report(const std::string& path, const ReportOptions& options, bool pretty) {
  const LieAlgebra algebra = load_algebra_document(path);
  if (const int status = print_violations(algebra, std::cerr); status != kOk) return status;
  const Report report = build_report(algebra, options);
  if (pretty) {
    std::cout << render_pretty(report.document);
  } else {
    std::cout << report.document.dump(2) << "\n";
  }
  return report.checks_passed ? kOk : kMismatch;
}

int cmd_check(const std::string& suite_name, std::uint64_t prime, const std::string& golden,
              bool verbose) {
  std::vector<SuiteCase> suite =
      suite_name == "builtin" ? builtin_suite() : directory_suite(suite_name);
  if (!golden.empty()) {
    std::ifstream in(golden);
    if (!in) throw DocumentError("cannot read " + golden);
    nlohmann::json overrides;
    try {
      overrides = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw DocumentError(std::string("invalid JSON in ") + golden + ": " + e.what());
    }
    apply_golden_overrides(suite, overrides);
  }
  CrossCheckOptions options;
  options.sweep_prime = prime;
  const SuiteSummary summary = run_suite(suite, options);
  std::cout << render_summary(summary, verbose);
  return summary.passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of nilpotent Lie algebras with small derived subalgebra"};
  app.require_subcommand(1);

  std::string path;
  auto* validate_cmd = app.add_subcommand("validate", "Parse a document and check Jacobi");
  validate_cmd->add_option("path", path, "algebra document")->required();

  CatalogArgs cat;
  auto* catalog_cmd = app.add_subcommand("catalog", "Print a named algebra as a document");
  catalog_cmd->add_option("name", cat.name, "A, H, L4_3, L5_5, L5_8, L6_22, L6_7_2 or L1");
  catalog_cmd->add_option("--m", cat.m, "Heisenberg rank");
  catalog_cmd->add_option("--n", cat.n, "abelian dimension");
  catalog_cmd->add_option("--eps", cat.eps, "L6_22 parameter");
  catalog_cmd->add_option("--eta", cat.eta, "L6_7_2 parameter");
  catalog_cmd->add_option("--prime", cat.prime, "work over GF(p) instead of Q");
  catalog_cmd->add_option("--abelian", cat.abelian, "dimension of an added abelian summand");
  catalog_cmd->add_flag("--list", cat.list, "list the available names");

  ReportOptions report_options;
  bool pretty = false;
  auto* report_cmd = app.add_subcommand("report", "Classify and compute invariants");
  report_cmd->add_option("path", path, "algebra document")->required();
  report_cmd->add_flag("--oracle", report_options.oracle, "run the brute-force oracles");
  report_cmd->add_option("--prime", report_options.prime,
                         "capability sweep prime for rational input");
  report_cmd->add_option("--seed", report_options.seed, "seed for --randomize-basis");
  report_cmd->add_flag("--randomize-basis", report_options.randomize_basis,
                       "apply a random change of basis first");
  report_cmd->add_flag("--pretty", pretty, "human-readable table");

  std::string suite = "builtin";
  std::uint64_t check_prime = 5;
  std::string golden;
  bool verbose = false;
  auto* check_cmd = app.add_subcommand("check", "Formula versus oracle over a suite");
  check_cmd->add_option("suite", suite, "'builtin' or a directory of documents");
  check_cmd->add_option("--prime", check_prime, "capability sweep prime for rational cases");
  check_cmd->add_option("--golden", golden, "JSON file overriding golden values");
  check_cmd->add_flag("--verbose", verbose, "list passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate_cmd) return cmd_validate(path);
    if (*catalog_cmd) return cmd_catalog(cat);
    if (*report_cmd) {
      if (report_options.prime < 2) throw DocumentError("--prime must be a prime");
      FieldSpec::prime(report_options.prime);
      return cmd_report(path, report_options, pretty);
    }
    if (*check_cmd) return cmd_check(suite, check_prime, golden, verbose);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
