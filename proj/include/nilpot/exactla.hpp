// Exact linear algebra over Q and GF(p).
//
// Every quantity computed elsewhere in the library reduces to ranks, kernels
// and subspace arithmetic over one of these fields. Nothing here touches
// floating point.

#ifndef NILPOT_EXACTLA_HPP
#define NILPOT_EXACTLA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace nilpot {

/// Raised when two operands live over different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on a dimension or shape mismatch between operands.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Either the rationals or a prime field GF(p).
class FieldSpec {
 public:
  /// Largest supported prime; residues multiply inside 128 bits.
  static constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 62);

  FieldSpec() = default;  // Q

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws std::invalid_argument unless p is a prime in [2, kMaxPrime).
  static FieldSpec prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An exact field element: a reduced fraction or a canonical residue.
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0L); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1L); }
  /// Residue constructor; `value` is reduced mod the field's prime.
  static Scalar residue(const FieldSpec& field, std::uint64_t value);

  /// Parses "3", "-3/4" over Q, or an integer literal (any sign) mod p.
  /// Fractions are accepted mod p when the denominator is invertible.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Canonical residue; only valid over GF(p).
  std::uint64_t residue_value() const;
  /// Exact rational value; only valid over Q.
  const mpq_class& rational_value() const;

  Scalar inverse() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  void check_same_field(const Scalar& rhs) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t index);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// All rows must have length `cols`.
  static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                          const std::vector<Vector>& rows);
  /// Convenience for tests and catalog tables: integer entries.
  static Matrix from_ints(const FieldSpec& field,
                          const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  void append_row(std::span<const Scalar> v);

  Matrix transpose() const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Row vector times matrix.
Vector operator*(std::span<const Scalar> v, const Matrix& m);

/// Vertical concatenation; column counts and fields must agree.
Matrix stack(const Matrix& top, const Matrix& bottom);

struct RrefResult {
  Matrix form;                       // same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   // pivot column of each of the first `rank` rows
};

/// Gauss-Jordan reduced row-echelon form. Prime fields run on a native
/// residue kernel; rationals run on GMP fractions.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws std::invalid_argument if `m` is singular or non-square.
Matrix inverse(const Matrix& m);

/// A linear subspace of F^n, stored as a reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldSpec& field, std::size_t ambient);
  static Subspace full(const FieldSpec& field, std::size_t ambient);
  /// Row space of `generators` (any rows, possibly dependent).
  static Subspace span(const Matrix& generators);
  static Subspace span(const FieldSpec& field, std::size_t ambient,
                       const std::vector<Vector>& generators);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;

  /// Reduces `v` against the basis: the representative with zeros in all
  /// pivot columns.
  Vector reduce(std::span<const Scalar> v) const;
  /// Coefficients of `v` in the basis; `v` must lie in the subspace.
  Vector coordinates(std::span<const Scalar> v) const;
  /// Columns that are not pivots, in increasing order.
  std::vector<std::size_t> free_columns() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots, std::size_t ambient)
      : basis_(std::move(basis)), pivots_(std::move(pivots)), ambient_(ambient) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
  std::size_t ambient_ = 0;
};

/// Null space {x : m x = 0} inside F^{cols}.
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// W with inner (+) W = outer, spanned by outer basis vectors that are not
/// already reachable. Throws std::invalid_argument unless inner is in outer.
Subspace complement_within(const Subspace& inner, const Subspace& outer);

}  // namespace nilpot

#endif  // NILPOT_EXACTLA_HPP
