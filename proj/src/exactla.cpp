#include "nilpot/exactla.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace nilpot {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128{a} * b) % p); }

u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;  // a, b < p < 2^62, no overflow
  return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// Extended Euclid; `a` must be a nonzero residue.
u64 inv_mod(u64 a, u64 p) {
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<u64>(t);
}

u64 mpz_mod_u64(const mpz_class& z, u64 p) {
  mpz_class m;
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, -1, sizeof(u64), 0, 0, &p);
  mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  u64 out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, -1, sizeof(u64), 0, 0, m.get_mpz_t());
  return count == 0 ? 0 : out;
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// "[-+]?digits(/digits)?" with an optional U+2212 minus sign.
mpq_class parse_fraction(std::string_view text) {
  std::string s(text);
  const std::string unicode_minus = "\xE2\x88\x92";
  if (s.rfind(unicode_minus, 0) == 0) s = "-" + s.substr(unicode_minus.size());
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed scalar literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldSpec

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto pow_mod = [n](u64 base, u64 e) {
    u64 result = 1;
    base %= n;
    while (e) {
      if (e & 1) result = mul_mod(result, base, n);
      base = mul_mod(base, base, n);
      e >>= 1;
    }
    return result;
  };
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime_number(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not a supported prime");
  }
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const FieldSpec& field, long value) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    u64 p = field.characteristic();
    __int128 v = value % static_cast<__int128>(p);
    if (v < 0) v += p;
    value_ = Residue{static_cast<u64>(v), p};
  }
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = q;
    return;
  }
  u64 p = field.characteristic();
  u64 den = mpz_mod_u64(value.get_den(), p);
  if (den == 0) {
    throw std::domain_error("denominator of " + value.get_str() + " vanishes mod " +
                            std::to_string(p));
  }
  value_ = Residue{mul_mod(mpz_mod_u64(value.get_num(), p), inv_mod(den, p), p), p};
}

Scalar Scalar::residue(const FieldSpec& field, std::uint64_t value) {
  if (!field.is_prime()) throw FieldMismatch("residue constructor needs a prime field");
  Scalar s;
  s.value_ = Residue{value % field.characteristic(), field.characteristic()};
  return s;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  return Scalar(field, parse_fraction(text));
}

FieldSpec Scalar::field() const {
  if (auto r = std::get_if<Residue>(&value_)) return FieldSpec(r->modulus);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Scalar::residue_value() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value;
  throw FieldMismatch("residue_value() on a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw FieldMismatch("rational_value() on a residue");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar out = *this;
  if (auto r = std::get_if<Residue>(&out.value_)) {
    r->value = inv_mod(r->value, r->modulus);
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  }
  return out;
}

std::string Scalar::to_string() const {
  if (auto r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

void Scalar::check_same_field(const Scalar& rhs) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&rhs.value_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus)) {
    throw FieldMismatch("arithmetic between " + field().name() + " and " +
                        rhs.field().name());
  }
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (auto r = std::get_if<Residue>(&out.value_)) {
    r->value = r->value == 0 ? 0 : r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(out.value_);
    q = -q;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->value = add_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->value = sub_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (auto r = std::get_if<Residue>(&value_)) {
    r->value = mul_mod(r->value, std::get<Residue>(rhs.value_).value, r->modulus);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* ra = std::get_if<Scalar::Residue>(&a.value_);
  const auto* rb = std::get_if<Scalar::Residue>(&b.value_);
  if (ra && rb) return ra->modulus == rb->modulus && ra->value == rb->value;
  if (ra || rb) return false;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Vector zero_vector(const FieldSpec& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         const std::vector<Vector>& rows) {
  Matrix m(field, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field,
                         const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

void Matrix::append_row(std::span<const Scalar> v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  for (const auto& s : v) {
    if (s.field() != field_) throw FieldMismatch("row entry over a different field");
  }
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionMismatch("row block out of range");
  Matrix m(field_, count, cols_);
  std::copy(data_.begin() + first * cols_, data_.begin() + (first + count) * cols_,
            m.data_.begin());
  return m;
}

bool Matrix::is_zero() const { return nilpot::is_zero(data_); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw FieldMismatch("matrix product across fields");
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.data_ == b.data_;
}

Vector operator*(std::span<const Scalar> v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix shape mismatch");
  Vector out = zero_vector(m.field(), m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
    }
  }
  return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.field() != bottom.field()) throw FieldMismatch("stacking across fields");
  if (top.cols() != bottom.cols()) throw DimensionMismatch("stacking mismatched widths");
  Matrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

// In-place Gauss-Jordan on a row-major buffer. Returns pivot columns.
std::vector<std::size_t> eliminate_mod(std::vector<u64>& a, std::size_t rows,
                                       std::size_t cols, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && a[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols,
                       a.begin() + r * cols);
    }
    u64* prow = &a[r * cols];
    u64 inv = inv_mod(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = mul_mod(prow[j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      u64* row = &a[i * cols];
      u64 f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (prow[j] != 0) row[j] = sub_mod(row[j], mul_mod(f, prow[j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::size_t> eliminate_rational(std::vector<mpq_class>& a, std::size_t rows,
                                            std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  mpq_class t;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && sgn(a[sel * cols + c]) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(a.begin() + sel * cols, a.begin() + (sel + 1) * cols,
                       a.begin() + r * cols);
    }
    mpq_class* prow = &a[r * cols];
    mpq_class inv = 1 / prow[c];
    for (std::size_t j = c; j < cols; ++j) {
      if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      mpq_class* row = &a[i * cols];
      if (sgn(row[c]) == 0) continue;
      mpq_class f = row[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(prow[j]) == 0) continue;
        t = f * prow[j];
        row[j] -= t;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult out{Matrix(m.field(), rows, cols), 0, {}};
  if (m.field().is_prime()) {
    const u64 p = m.field().characteristic();
    std::vector<u64> buf(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) buf[r * cols + c] = m(r, c).residue_value();
    out.pivots = eliminate_mod(buf, rows, cols, p);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (buf[r * cols + c] != 0) out.form(r, c) = Scalar::residue(m.field(), buf[r * cols + c]);
  } else {
    std::vector<mpq_class> buf(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) buf[r * cols + c] = m(r, c).rational_value();
    out.pivots = eliminate_rational(buf, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (sgn(buf[r * cols + c]) != 0) out.form(r, c) = Scalar(m.field(), buf[r * cols + c]);
  }
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionMismatch("inverse of a non-square matrix");
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  auto red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1)) {
    throw std::invalid_argument("matrix is singular");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.form(r, n + c);
  return inv;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(const FieldSpec& field, std::size_t ambient) {
  return Subspace(Matrix(field, 0, ambient), {}, ambient);
}

Subspace Subspace::full(const FieldSpec& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient), std::move(pivots), ambient);
}

Subspace Subspace::span(const Matrix& generators) {
  auto red = rref(generators);
  return Subspace(red.form.row_block(0, red.rank), std::move(red.pivots), generators.cols());
}

Subspace Subspace::span(const FieldSpec& field, std::size_t ambient,
                        const std::vector<Vector>& generators) {
  return span(Matrix::from_rows(field, ambient, generators));
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector outside ambient space");
  Vector out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    Scalar f = out[pivots_[r]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (!basis_(r, c).is_zero()) out[c] -= f * basis_(r, c);
    }
  }
  return out;
}

bool Subspace::contains(std::span<const Scalar> v) const { return nilpot::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  Vector coords;
  coords.reserve(dim());
  for (std::size_t p : pivots_) coords.push_back(v[p]);
  return coords;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  auto red = rref(m);
  const std::size_t n = m.cols();
  const FieldSpec& f = m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(f, n, free);
    for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.form(r, free);
    gens.push_back(std::move(v));
  }
  return Subspace::span(f, n, gens);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("ambient dimension mismatch");
  if (u.field() != v.field()) throw FieldMismatch("subspaces over different fields");
  return Subspace::span(stack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("ambient dimension mismatch");
  if (u.field() != v.field()) throw FieldMismatch("subspaces over different fields");
  const FieldSpec& f = u.field();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(f, u.ambient_dim());
  // (a, b) with a.U + b.V = 0 gives a.U in both.
  Matrix stacked = stack(u.basis(), v.basis());
  Subspace relations = kernel(stacked.transpose());
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    auto rel = relations.basis().row(r);
    gens.push_back(rel.first(u.dim()) * u.basis());
  }
  return Subspace::span(f, u.ambient_dim(), gens);
}

Subspace complement_within(const Subspace& inner, const Subspace& outer) {
  if (!outer.contains(inner)) {
    throw std::invalid_argument("complement_within: inner subspace is not contained in outer");
  }
  Subspace reached = inner;
  std::vector<Vector> chosen;
  for (std::size_t r = 0; r < outer.dim() && reached.dim() < outer.dim(); ++r) {
    auto candidate = outer.basis().row(r);
    if (reached.contains(candidate)) continue;
    chosen.emplace_back(candidate.begin(), candidate.end());
    reached = sum(reached, Subspace::span(outer.field(), outer.ambient_dim(), {chosen.back()}));
  }
  return Subspace::span(outer.field(), outer.ambient_dim(), chosen);
}

}  // namespace nilpot
