// Brute-force oracles that do not go through classification: the Schur
// multiplier as second cohomology with trivial coefficients, and the
// epicenter by sweeping central lines over a finite field.

#ifndef NILPOT_ORACLE_HPP
#define NILPOT_ORACLE_HPP

#include "nilpot/functors.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilpot {

/// Differentials C^1 -> C^2 -> C^3 of the Chevalley-Eilenberg complex with
/// trivial coefficients. Pairs (i<j) and triples (i<j<k) are ordered
/// lexicographically; d1 is C(n,2) x n and d2 is C(n,3) x C(n,2), acting on
/// column vectors of cochain values.
///   (d1 f)(x_i, x_j)       = -f([x_i, x_j])
///   (d2 w)(x_i, x_j, x_k)  = -w([x_i,x_j], x_k) + w([x_i,x_k], x_j) - w([x_j,x_k], x_i)
struct CochainComplexSlice {
  Matrix d1;
  Matrix d2;
};

/// Index of the pair (i, j), i < j, in lexicographic order among n.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);

CochainComplexSlice cochain_slice(const LieAlgebra& algebra);

/// dim H^2(L, F) = dim ker d2 - rank d1.
std::int64_t schur_dim_oracle(const LieAlgebra& algebra);

/// Raised when an oracle is asked for something outside the regime where
/// its identification is valid.
class OracleUnavailable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// dim M(L) + dim L^2. Requires nilpotent L with dim L^2 <= 2.
std::int64_t exterior_dim_oracle(const LieAlgebra& algebra);
/// exterior + m(m+1)/2, m = dim L/L^2. Same regime.
std::int64_t tensor_dim_oracle(const LieAlgebra& algebra);

/// Z*(L) over GF(p): the central vectors z for which
///   dim M(L) = dim M(L/<z>) - dim(L^2 n <z>),
/// found by testing every one-dimensional central subspace. Throws
/// OracleUnavailable over Q; NotNilpotent for non-nilpotent input; and
/// std::logic_error if the member lines do not close up into a subspace.
/// `threads` = 0 picks the hardware concurrency.
Subspace epicenter(const LieAlgebra& algebra, unsigned threads = 0);
bool capable_oracle(const LieAlgebra& algebra);

/// Copy of a rational table with coefficients reduced mod p. Throws
/// std::domain_error if a denominator vanishes mod p.
LieAlgebra reduce_mod(const LieAlgebra& algebra, const FieldSpec& prime_field);

struct OracleReport {
  std::int64_t schur = 0;
  std::optional<std::int64_t> exterior;  // only in the dim L^2 <= 2 regime
  std::optional<std::int64_t> tensor;
  std::optional<std::int64_t> epicenter_dim;  // only over a prime field
  std::optional<bool> capable;
  std::string epicenter_field;  // field the epicenter sweep ran over
};

struct CheckLine {
  std::string quantity;
  std::string formula;  // rendered value or admissible set
  std::string oracle;
  bool pass = false;
};

struct CrossCheckReport {
  Classification classification;
  std::optional<FunctorReport> formula;  // nullopt out of scope
  OracleReport oracle;
  std::vector<CheckLine> lines;
  std::vector<std::string> notes;

  bool passed() const;
};

struct CrossCheckOptions {
  /// Capability sweep for rational input runs over GF(p) for the first prime
  /// p >= sweep_prime whose reduction keeps the multiplier, L^2 and Z(L).
  /// 0 skips it. Prime-field input always sweeps over its own field.
  std::uint64_t sweep_prime = 5;
  bool capability = true;
  unsigned threads = 0;
};

/// Formula engine versus oracle engine on one algebra. Mismatches are
/// report content, not exceptions.
CrossCheckReport cross_check(const LieAlgebra& algebra, const CrossCheckOptions& options = {});

}  // namespace nilpot

#endif  // NILPOT_ORACLE_HPP
