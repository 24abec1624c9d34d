// JSON documents: algebra input files and analysis reports.
//
// See docs/document-format.md for the input grammar.

#ifndef NILPOT_DOCUMENT_HPP
#define NILPOT_DOCUMENT_HPP

#include "nilpot/oracle.hpp"

#include <json.hpp>

#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>

namespace nilpot {

using ordered_json = nlohmann::ordered_json;

/// Malformed input document (exit code 1 on the command line).
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LieAlgebra parse_algebra_document(const nlohmann::json& doc);
LieAlgebra parse_algebra_document(const std::string& text);
LieAlgebra load_algebra_document(const std::filesystem::path& path);

ordered_json field_to_json(const FieldSpec& field);
ordered_json algebra_to_json(const LieAlgebra& algebra);

/// "fnv1a64:<16 hex digits>" of the canonical serialization.
std::string input_digest(const LieAlgebra& algebra);

/// Uniform entries until invertible: residues mod p, or integers in [-3, 3]
/// over Q. Consumes raw engine output only, so a seed reproduces the same
/// matrix on every standard library.
Matrix random_invertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng);

struct ReportOptions {
  bool oracle = false;
  /// Capability sweep prime for rational input (prime-field input sweeps
  /// over its own field).
  std::uint64_t prime = 5;
  bool randomize_basis = false;
  std::uint64_t seed = 0;
};

struct Report {
  ordered_json document;
  bool checks_passed = true;
};

Report build_report(const LieAlgebra& algebra, const ReportOptions& options);
std::string render_pretty(const ordered_json& report);

ordered_json admissible_to_json(const Admissible& a);

}  // namespace nilpot

#endif  // NILPOT_DOCUMENT_HPP
