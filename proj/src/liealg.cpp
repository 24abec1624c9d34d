#include "nilpot/liealg.hpp"

#include <set>
#include <utility>

namespace nilpot {

LieAlgebra::LieAlgebra(const FieldSpec& field, std::size_t n)
    : field_(field), dim_(n), table_(n * n * n, Scalar::zero(field)) {}

LieAlgebra::LieAlgebra(const FieldSpec& field, std::size_t n,
                       const std::vector<BracketEntry>& entries, std::vector<std::string> labels)
    : LieAlgebra(field, n) {
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " labels, got " +
                                std::to_string(labels.size()));
  }
  labels_ = std::move(labels);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : entries) {
    if (e.i >= e.j || e.j >= n) {
      throw std::invalid_argument("bracket pair (" + std::to_string(e.i + 1) + ", " +
                                  std::to_string(e.j + 1) + ") must satisfy 1 <= i < j <= " +
                                  std::to_string(n));
    }
    if (!seen.emplace(e.i, e.j).second) {
      throw std::invalid_argument("duplicate bracket pair (" + std::to_string(e.i + 1) + ", " +
                                  std::to_string(e.j + 1) + ")");
    }
    if (e.coeffs.size() != n) {
      throw std::invalid_argument("bracket (" + std::to_string(e.i + 1) + ", " +
                                  std::to_string(e.j + 1) + ") has " +
                                  std::to_string(e.coeffs.size()) + " coefficients, expected " +
                                  std::to_string(n));
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (e.coeffs[k].field() != field) throw FieldMismatch("bracket coefficient field mismatch");
      table_[(e.i * n + e.j) * n + k] = e.coeffs[k];
      table_[(e.j * n + e.i) * n + k] = -e.coeffs[k];
    }
  }
}

std::string LieAlgebra::label(std::size_t i) const {
  return labels_.empty() ? "x" + std::to_string(i + 1) : labels_.at(i);
}

Vector LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  auto first = table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector LieAlgebra::bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket operand length");
  Vector out = zero_vector(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = coeff(i, j, k);
        if (!c.is_zero()) out[k] += w * c;
      }
    }
  }
  return out;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vector v = bracket(i, j);
      if (!is_zero(v)) out.push_back({i, j, std::move(v)});
    }
  return out;
}

bool LieAlgebra::is_abelian() const { return is_zero(table_); }

std::vector<JacobiViolation> validate(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec& f = algebra.field();
  std::vector<JacobiViolation> out;
  auto ad = [&](std::size_t a, const Vector& v) { return algebra.bracket(unit_vector(f, n, a), v); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = ad(i, algebra.bracket(j, k));
        Vector t1 = ad(j, algebra.bracket(k, i));
        Vector t2 = ad(k, algebra.bracket(i, j));
        for (std::size_t c = 0; c < n; ++c) r[c] += t1[c] + t2[c];
        if (!is_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& u, const Subspace& v) {
  const std::size_t n = algebra.dim();
  if (u.ambient_dim() != n || v.ambient_dim() != n) {
    throw DimensionMismatch("bracket_span: subspace ambient dimension differs from algebra");
  }
  Matrix gens(algebra.field(), 0, n);
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b)
      gens.append_row(algebra.bracket(u.basis().row(a), v.basis().row(b)));
  return Subspace::span(gens);
}

Subspace derived_subalgebra(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  Matrix gens(algebra.field(), 0, n);
  for (const auto& e : algebra.entries()) gens.append_row(e.coeffs);
  return Subspace::span(gens);
}

Subspace center(const LieAlgebra& algebra) {
  // x is central iff sum_i x_i c_{ij}^k = 0 for every (j, k).
  const std::size_t n = algebra.dim();
  Matrix ad(algebra.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) ad(j * n + k, i) = algebra.coeff(i, j, k);
  return kernel(ad);
}

std::size_t SeriesReport::lower_central_dim(std::size_t k) const {
  if (k == 0) throw std::out_of_range("lower central series is 1-based");
  return k <= lower_central.size() ? lower_central[k - 1].dim() : 0;
}

SeriesReport series(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec& f = algebra.field();
  const Subspace whole = Subspace::full(f, n);
  SeriesReport report;
  report.center = center(algebra);

  report.lower_central.push_back(whole);
  bool nilpotent = true;
  while (report.lower_central.back().dim() > 0) {
    Subspace next = bracket_span(algebra, report.lower_central.back(), whole);
    bool stuck = next.dim() == report.lower_central.back().dim();
    report.lower_central.push_back(std::move(next));
    if (stuck) {
      nilpotent = false;
      break;
    }
  }
  if (nilpotent) report.nilpotency_class = static_cast<int>(report.lower_central.size()) - 1;
  if (n == 0) report.nilpotency_class = 0;

  report.derived.push_back(whole);
  while (report.derived.back().dim() > 0) {
    const Subspace& last = report.derived.back();
    Subspace next = bracket_span(algebra, last, last);
    bool stuck = next.dim() == last.dim();
    report.derived.push_back(std::move(next));
    if (stuck) break;
  }
  return report;
}

Quotient quotient(const LieAlgebra& algebra, const Subspace& ideal) {
  const std::size_t n = algebra.dim();
  const FieldSpec& f = algebra.field();
  if (ideal.ambient_dim() != n) throw DimensionMismatch("quotient: ideal ambient dimension");
  if (!ideal.contains(bracket_span(algebra, Subspace::full(f, n), ideal))) {
    throw NotAnIdeal("quotient: subspace is not an ideal");
  }
  const auto keep = ideal.free_columns();
  const std::size_t q = keep.size();

  // reduce(x) zeroes the pivot columns; read off the kept ones.
  Matrix projection(f, q, n);
  for (std::size_t a = 0; a < q; ++a) {
    projection(a, keep[a]) = Scalar::one(f);
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      projection(a, ideal.pivots()[r]) = -ideal.basis()(r, keep[a]);
    }
  }

  auto project = [&](const Vector& x) {
    Vector reduced = ideal.reduce(x);
    Vector out;
    out.reserve(q);
    for (std::size_t c : keep) out.push_back(reduced[c]);
    return out;
  };
  std::vector<BracketEntry> entries;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    if (!algebra.labels().empty()) labels.push_back(algebra.label(keep[a]));
    for (std::size_t b = a + 1; b < q; ++b) {
      Vector image = project(algebra.bracket(keep[a], keep[b]));
      if (!is_zero(image)) entries.push_back({a, b, std::move(image)});
    }
  }
  return {LieAlgebra(f, q, entries, std::move(labels)), std::move(projection)};
}

LieAlgebra direct_sum(const LieAlgebra& first, const LieAlgebra& second) {
  if (first.field() != second.field()) throw FieldMismatch("direct_sum across fields");
  const FieldSpec& f = first.field();
  const std::size_t n1 = first.dim(), n = n1 + second.dim();
  std::vector<BracketEntry> entries;
  for (const auto& e : first.entries()) {
    Vector v = zero_vector(f, n);
    std::copy(e.coeffs.begin(), e.coeffs.end(), v.begin());
    entries.push_back({e.i, e.j, std::move(v)});
  }
  for (const auto& e : second.entries()) {
    Vector v = zero_vector(f, n);
    std::copy(e.coeffs.begin(), e.coeffs.end(), v.begin() + static_cast<std::ptrdiff_t>(n1));
    entries.push_back({e.i + n1, e.j + n1, std::move(v)});
  }
  std::vector<std::string> labels;
  if (!first.labels().empty() || !second.labels().empty()) {
    for (std::size_t i = 0; i < first.dim(); ++i) labels.push_back(first.label(i));
    for (std::size_t i = 0; i < second.dim(); ++i) {
      labels.push_back(second.labels().empty() ? "x" + std::to_string(n1 + i + 1)
                                               : second.label(i));
    }
  }
  return LieAlgebra(f, n, entries, std::move(labels));
}

LieAlgebra change_basis(const LieAlgebra& algebra, const Matrix& basis) {
  const std::size_t n = algebra.dim();
  if (basis.rows() != n || basis.cols() != n) throw DimensionMismatch("change_basis: shape");
  if (basis.field() != algebra.field()) throw FieldMismatch("change_basis: field");
  const Matrix inv = inverse(basis);
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector image = algebra.bracket(basis.row(a), basis.row(b)) * inv;
      if (!is_zero(image)) entries.push_back({a, b, std::move(image)});
    }
  return LieAlgebra(algebra.field(), n, entries);
}

LieAlgebra leading_subalgebra(const LieAlgebra& algebra, std::size_t k) {
  if (k > algebra.dim()) throw DimensionMismatch("leading_subalgebra: k exceeds dimension");
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vector v = algebra.bracket(i, j);
      for (std::size_t c = k; c < v.size(); ++c) {
        if (!v[c].is_zero()) {
          throw std::invalid_argument("leading_subalgebra: span is not closed under bracket");
        }
      }
      v.resize(k);
      if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  std::vector<std::string> labels;
  if (!algebra.labels().empty()) labels.assign(algebra.labels().begin(), algebra.labels().begin() + static_cast<std::ptrdiff_t>(k));
  return LieAlgebra(algebra.field(), k, entries, std::move(labels));
}

}  // namespace nilpot
