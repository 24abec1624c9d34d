// Lie algebras given by structure constants on a fixed basis x_1..x_n.

#ifndef NILPOT_LIEALG_HPP
#define NILPOT_LIEALG_HPP

#include "nilpot/exactla.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilpot {

/// One nonzero table entry [x_i, x_j] = coeffs, with 0-based i < j.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;
};

/// Structure-constant table. Antisymmetry and [x, x] = 0 are structural;
/// the Jacobi identity is checked by validate(), not by the constructor, so
/// that broken tables can still be loaded and diagnosed.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Zero brackets (the abelian algebra of dimension n).
  LieAlgebra(const FieldSpec& field, std::size_t n);
  /// Throws std::invalid_argument on out-of-range or repeated pairs, i >= j,
  /// or coefficient vectors of the wrong length or field.
  LieAlgebra(const FieldSpec& field, std::size_t n, const std::vector<BracketEntry>& entries,
             std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Label of basis vector i, defaulting to "x<i+1>".
  std::string label(std::size_t i) const;

  /// c_{ij}^k.
  const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  /// [x_i, x_j] as a coordinate vector.
  Vector bracket(std::size_t i, std::size_t j) const;
  /// Bilinear extension to arbitrary vectors.
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  /// Nonzero entries with i < j, in lexicographic order.
  std::vector<BracketEntry> entries() const;
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> table_;  // n^3, fully antisymmetric in (i, j)
  std::vector<std::string> labels_;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vector residual;      // [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]]
};

/// Empty iff the Jacobi identity holds on every basis triple.
std::vector<JacobiViolation> validate(const LieAlgebra& algebra);

/// [U, V]: span of brackets of basis vectors.
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& u, const Subspace& v);

Subspace derived_subalgebra(const LieAlgebra& algebra);
Subspace center(const LieAlgebra& algebra);

struct SeriesReport {
  std::vector<Subspace> lower_central;  // L, L^2, L^3, ... down to 0 or stabilization
  std::vector<Subspace> derived;        // L, L^(1), L^(2), ...
  Subspace center;
  /// nullopt when the lower central series stabilizes at a nonzero term.
  /// Abelian nonzero algebras have class 1; the zero algebra has class 0.
  std::optional<int> nilpotency_class;

  bool nilpotent() const { return nilpotency_class.has_value(); }
  /// dim L^k, 1-based; 0 past the end of a terminating series.
  std::size_t lower_central_dim(std::size_t k) const;
};

SeriesReport series(const LieAlgebra& algebra);

/// Thrown when an ideal is required but [L, I] is not inside I.
class NotAnIdeal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Quotient {
  LieAlgebra algebra;
  /// (n - dim I) x n; maps column coordinates in L to coordinates in L/I.
  /// Quotient basis vectors are the images of x_c for the non-pivot
  /// columns c of the ideal's RREF basis, in increasing order.
  Matrix projection;
};

Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal);

LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second);

/// Rows of `basis` are the new basis vectors in old coordinates.
/// Throws std::invalid_argument if `basis` is singular.
LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& basis);

/// Restriction to the subalgebra spanned by the first `k` basis vectors.
/// Throws std::invalid_argument if that span is not closed under the bracket.
LieAlgebra leading_subalgebra(const LieAlgebra& algebra, std::size_t k);

}  // namespace nilpot

#endif  // NILPOT_LIEALG_HPP
