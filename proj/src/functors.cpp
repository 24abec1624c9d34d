#include "nilpot/functors.hpp"

#include <algorithm>
#include <sstream>

namespace nilpot {

Admissible::Admissible(std::initializer_list<std::int64_t> values) {
  for (auto v : values) insert(v);
}

void Admissible::insert(std::int64_t v) {
  auto it = std::lower_bound(values_.begin(), values_.end(), v);
  if (it == values_.end() || *it != v) values_.insert(it, v);
}

std::int64_t Admissible::value() const {
  if (!is_exact()) throw std::logic_error("admissible set " + to_string() + " is not exact");
  return values_.front();
}

bool Admissible::contains(std::int64_t v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::string Admissible::to_string() const {
  if (is_exact()) return std::to_string(values_.front());
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? ", " : "") << values_[i];
  os << '}';
  return os.str();
}

namespace {

const CatalogId& require_scope(const Classification& c) {
  if (!c.catalog) {
    throw OutOfScope("no closed form for dim L^2 = " + std::to_string(c.derived_dim));
  }
  return *c.catalog;
}

// Exact halving; every caller passes an even product.
std::int64_t half(std::int64_t v) { return v / 2; }

}  // namespace

Admissible schur_dim_formula(const Classification& c) {
  const CatalogId& id = require_scope(c);
  const auto n = static_cast<std::int64_t>(c.dim);
  switch (id.family) {
    case Family::Abelian: return half(n * (n - 1));
    case Family::Heisenberg:
      return id.size == 1 ? half((n - 1) * (n - 2)) + 1 : half((n - 1) * (n - 2)) - 1;
    case Family::L58: return half(n * (n - 5)) + 6;
    case Family::L622:
    case Family::L672: return half((n + 1) * (n - 6)) + 8;
    case Family::L1: return half((n + 2) * (n - 7)) + 9;
    case Family::L43: return half((n - 1) * (n - 4)) + 2;
    case Family::L55: return half(n * (n - 5)) + 4;
    case Family::GenHeisenbergRank2: {
      const std::int64_t base = half((n - 2) * (n - 3));
      return {base - 2, base};
    }
    case Family::StemClass3Dim2: return half((n - 2) * (n - 3));
  }
  throw std::logic_error("unhandled family");
}

Admissible exterior_dim_formula(const Classification& c) {
  const CatalogId& id = require_scope(c);
  const auto n = static_cast<std::int64_t>(c.dim);
  switch (id.family) {
    case Family::Abelian: return half(n * (n - 1));
    case Family::Heisenberg:
      return id.size == 1 ? half((n - 1) * (n - 2)) + 2 : half((n - 1) * (n - 2));
    case Family::L58: return half((n - 2) * (n - 3)) + 5;
    case Family::L622:
    case Family::L672: return half((n + 1) * (n - 6)) + 10;
    case Family::L1: return half((n + 2) * (n - 7)) + 11;
    case Family::L43: return half((n - 1) * (n - 4)) + 4;
    case Family::L55: return half(n * (n - 5)) + 6;
    case Family::GenHeisenbergRank2: {
      const std::int64_t base = half((n - 2) * (n - 3));
      return {base, base + 2};
    }
    case Family::StemClass3Dim2: return half((n - 2) * (n - 3)) + 2;
  }
  throw std::logic_error("unhandled family");
}

Admissible tensor_dim_formula(const Classification& c) {
  const CatalogId& id = require_scope(c);
  const auto n = static_cast<std::int64_t>(c.dim);
  switch (id.family) {
    case Family::Abelian: return n * n;
    case Family::Heisenberg: return id.size == 1 ? n * n - 2 * n + 3 : (n - 1) * (n - 1);
    case Family::L58: return n * n - 4 * n + 9;
    case Family::L622:
    case Family::L672: return n * n - 4 * n + 8;
    case Family::L1: return n * n - 4 * n + 5;
    case Family::L43:
    case Family::L55: return n * n - 4 * n + 7;
    case Family::GenHeisenbergRank2: return {(n - 2) * (n - 2), n * n - 4 * n + 6};
    case Family::StemClass3Dim2: return n * n - 4 * n + 6;
  }
  throw std::logic_error("unhandled family");
}

std::int64_t square_dim(std::int64_t n, std::int64_t derived_dim) {
  const std::int64_t m = n - derived_dim;
  return half(m * (m + 1));
}

Admissible corank(const Classification& c) {
  const auto n = static_cast<std::int64_t>(c.dim);
  return schur_dim_formula(c).map([n](std::int64_t m) { return half(n * (n - 1)) - m; });
}

bool is_capable_formula(const Classification& c) {
  const CatalogId& id = require_scope(c);
  switch (id.family) {
    case Family::Abelian: return c.dim > 1;
    case Family::Heisenberg: return id.size == 1;
    case Family::GenHeisenbergRank2:
    case Family::StemClass3Dim2: return false;
    default: return true;
  }
}

bool exterior_is_abelian(const Classification& c) {
  require_scope(c);
  return c.nilpotency_class <= 2 || (c.nilpotency_class == 3 && c.derived_dim == 2);
}

std::string formula_rule(const Classification& c) {
  const CatalogId& id = require_scope(c);
  const std::string suffix = id.abelian_summand > 0 ? "+A" : "";
  switch (id.family) {
    case Family::Abelian: return "abelian";
    case Family::Heisenberg:
      return id.size == 1 ? "capable/H(1)" + suffix : "noncapable/H(m>=2)" + suffix;
    case Family::GenHeisenbergRank2: return "noncapable/class2-rank2" + suffix;
    case Family::StemClass3Dim2: return "noncapable/class3-stem" + suffix;
    default: return "capable/" + family_name(id.family) + suffix;
  }
}

FunctorReport functor_report(const Classification& c) {
  FunctorReport r;
  r.n = static_cast<std::int64_t>(c.dim);
  r.derived_dim = static_cast<std::int64_t>(c.derived_dim);
  r.schur = schur_dim_formula(c);
  r.exterior = exterior_dim_formula(c);
  r.tensor = tensor_dim_formula(c);
  r.square = square_dim(r.n, r.derived_dim);
  r.corank = corank(c);
  r.capable = is_capable_formula(c) ? Verdict::Yes : Verdict::No;
  r.exterior_abelian = exterior_is_abelian(c);
  r.rule = formula_rule(c);
  return r;
}

}  // namespace nilpot
