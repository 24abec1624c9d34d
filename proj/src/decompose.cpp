#include "nilpot/decompose.hpp"

#include <array>
#include <map>
#include <utility>

namespace nilpot {

namespace {

SeriesReport nilpotent_series(const LieAlgebra& algebra) {
  SeriesReport s = series(algebra);
  if (!s.nilpotent()) throw NotNilpotent("algebra is not nilpotent");
  return s;
}

// [x_a, x_b] = x_c entries, 1-based as in the usual presentations.
struct Rel {
  std::size_t a, b;
  std::vector<std::pair<std::size_t, Scalar>> rhs;
};

LieAlgebra from_relations(const FieldSpec& f, std::size_t n, const std::vector<Rel>& rels) {
  std::vector<BracketEntry> entries;
  for (const auto& r : rels) {
    Vector v = zero_vector(f, n);
    for (const auto& [k, c] : r.rhs) v[k - 1] += c;
    if (!is_zero(v)) entries.push_back({r.a - 1, r.b - 1, std::move(v)});
  }
  return LieAlgebra(f, n, entries);
}

Scalar parameter_or_one(const CatalogId& id, const FieldSpec& f) {
  if (!id.parameter) return Scalar::one(f);
  if (id.parameter->field() != f) throw FieldMismatch("catalog parameter over a different field");
  return *id.parameter;
}

Scalar pfaffian4(const std::array<std::array<Scalar, 5>, 5>& m, const std::array<std::size_t, 4>& s) {
  auto at = [&](std::size_t i, std::size_t j) { return m[s[i]][s[j]]; };
  return at(0, 1) * at(2, 3) - at(0, 2) * at(1, 3) + at(0, 3) * at(1, 2);
}

}  // namespace

// ---------------------------------------------------------------------------

StemDecomposition stem_decompose(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec& f = algebra.field();
  const SeriesReport s = nilpotent_series(algebra);
  if (algebra.is_abelian()) {
    throw std::invalid_argument("stem_decompose: abelian algebras have no stem part");
  }
  const Subspace& derived = s.lower_central[1];
  const Subspace meet = intersect(s.center, derived);
  const Subspace summand = complement_within(meet, s.center);

  // T: L^2 extended by standard basis vectors that avoid summand + L^2.
  std::vector<Vector> stem_rows;
  for (std::size_t r = 0; r < derived.dim(); ++r) stem_rows.push_back(derived.basis_vector(r));
  Subspace reached = sum(summand, derived);
  for (std::size_t i = 0; i < n && reached.dim() < n; ++i) {
    Vector e = unit_vector(f, n, i);
    if (reached.contains(e)) continue;
    reached = sum(reached, Subspace::span(f, n, {e}));
    stem_rows.push_back(std::move(e));
  }

  StemDecomposition out;
  out.stem_dim = stem_rows.size();
  out.abelian_dim = summand.dim();
  out.basis_change = Matrix::from_rows(f, n, stem_rows);
  for (std::size_t r = 0; r < summand.dim(); ++r) out.basis_change.append_row(summand.basis().row(r));
  return out;
}

LieAlgebra stem_algebra(const LieAlgebra& algebra, const StemDecomposition& split) {
  return leading_subalgebra(change_basis(algebra, split.basis_change), split.stem_dim);
}

std::size_t heisenberg_rank(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  if (derived_subalgebra(algebra).dim() != 1) {
    throw std::invalid_argument("heisenberg_rank: requires dim L^2 = 1");
  }
  const std::size_t z = center(algebra).dim();
  if (z > n || (n - z) % 2 != 0 || n == z) {
    throw std::invalid_argument("heisenberg_rank: n - dim Z(L) = " + std::to_string(n - z) +
                                " is not a positive even number");
  }
  return (n - z) / 2;
}

// ---------------------------------------------------------------------------
// Catalog

std::string family_name(Family family) {
  switch (family) {
    case Family::Abelian: return "A";
    case Family::Heisenberg: return "H";
    case Family::GenHeisenbergRank2: return "GenHeisenbergRank2";
    case Family::StemClass3Dim2: return "StemClass3Dim2";
    case Family::L43: return "L4_3";
    case Family::L55: return "L5_5";
    case Family::L58: return "L5_8";
    case Family::L622: return "L6_22";
    case Family::L672: return "L6_7_2";
    case Family::L1: return "L1";
  }
  return "?";
}

std::string catalog_name(Family family) { return family_name(family); }

std::optional<Family> family_from_name(const std::string& name) {
  static const std::map<std::string, Family> names = {
      {"A", Family::Abelian}, {"H", Family::Heisenberg}, {"L4_3", Family::L43},
      {"L5_5", Family::L55},  {"L5_8", Family::L58},     {"L6_22", Family::L622},
      {"L6_7_2", Family::L672}, {"L1", Family::L1}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::size_t CatalogId::base_dim() const {
  switch (family) {
    case Family::Abelian: return size;
    case Family::Heisenberg: return 2 * size + 1;
    case Family::GenHeisenbergRank2:
    case Family::StemClass3Dim2: return size;
    case Family::L43: return 4;
    case Family::L55:
    case Family::L58: return 5;
    case Family::L622:
    case Family::L672: return 6;
    case Family::L1: return 7;
  }
  return 0;
}

std::string CatalogId::describe() const {
  std::string out;
  switch (family) {
    case Family::Abelian: out = "A(" + std::to_string(size) + ")"; break;
    case Family::Heisenberg: out = "H(" + std::to_string(size) + ")"; break;
    case Family::GenHeisenbergRank2:
    case Family::StemClass3Dim2:
      out = family_name(family) + "[" + std::to_string(size) + "]";
      break;
    case Family::L622:
    case Family::L672:
      out = family_name(family);
      if (parameter) out += (family == Family::L622 ? "(eps=" : "(eta=") + parameter->to_string() + ")";
      break;
    default: out = family_name(family);
  }
  if (abelian_summand > 0) out += " + A(" + std::to_string(abelian_summand) + ")";
  return out;
}

LieAlgebra make_catalog(const CatalogId& id, const FieldSpec& f) {
  const Scalar one = Scalar::one(f);
  LieAlgebra base;
  switch (id.family) {
    case Family::Abelian:
      base = LieAlgebra(f, id.size);
      break;
    case Family::Heisenberg: {
      if (id.size == 0) throw std::invalid_argument("H(m) needs m >= 1");
      const std::size_t n = 2 * id.size + 1;
      std::vector<Rel> rels;
      for (std::size_t i = 0; i < id.size; ++i) rels.push_back({2 * i + 1, 2 * i + 2, {{n, one}}});
      base = from_relations(f, n, rels);
      break;
    }
    case Family::L43:
      base = from_relations(f, 4, {{1, 2, {{3, one}}}, {1, 3, {{4, one}}}});
      break;
    case Family::L55:
      base = from_relations(f, 5, {{1, 2, {{3, one}}}, {1, 3, {{5, one}}}, {2, 4, {{5, one}}}});
      break;
    case Family::L58:
      base = from_relations(f, 5, {{1, 2, {{4, one}}}, {1, 3, {{5, one}}}});
      break;
    case Family::L622: {
      if (f.characteristic() == 2) throw std::invalid_argument("L6_22 requires characteristic != 2");
      const Scalar eps = parameter_or_one(id, f);
      base = from_relations(f, 6, {{1, 2, {{5, one}}}, {3, 4, {{5, one}}}, {1, 3, {{6, one}}},
                                   {2, 4, {{6, eps}}}});
      break;
    }
    case Family::L672: {
      if (f.characteristic() != 2) throw std::invalid_argument("L6_7_2 requires characteristic 2");
      const Scalar eta = parameter_or_one(id, f);
      base = from_relations(f, 6, {{1, 2, {{5, one}}}, {3, 4, {{5, one}, {6, one}}},
                                   {1, 3, {{6, one}}}, {2, 4, {{6, eta}}}});
      break;
    }
    case Family::L1:
      base = from_relations(f, 7, {{1, 2, {{6, one}}}, {3, 4, {{6, one}}}, {1, 5, {{7, one}}},
                                   {2, 3, {{7, one}}}});
      break;
    case Family::GenHeisenbergRank2:
    case Family::StemClass3Dim2:
      throw std::invalid_argument(family_name(id.family) + " has no canonical representative");
  }
  if (id.abelian_summand == 0) return base;
  return direct_sum(base, LieAlgebra(f, id.abelian_summand));
}

// ---------------------------------------------------------------------------
// Classification

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "true";
    case Verdict::No: return "false";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

bool has_nondegenerate_pencil(const LieAlgebra& stem) {
  const Subspace derived = derived_subalgebra(stem);
  const auto outside = derived.free_columns();
  if (derived.dim() != 2 || outside.size() != 5) {
    throw std::invalid_argument("pencil test needs a 7-dimensional algebra with dim L^2 = 2");
  }
  const FieldSpec& f = stem.field();
  // Commutator forms on L/L^2: coordinates of [v_a, v_b] along the two
  // derived basis vectors, read at their pivot columns.
  using Form = std::array<std::array<Scalar, 5>, 5>;
  std::array<Form, 2> forms;
  for (std::size_t t = 0; t < 2; ++t)
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b)
        forms[t][a][b] = stem.bracket(outside[a], outside[b])[derived.pivots()[t]];

  auto combo = [&](const Scalar& s, const Scalar& t) {
    Form m;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) m[a][b] = s * forms[0][a][b] + t * forms[1][a][b];
    return m;
  };
  const Scalar zero = Scalar::zero(f), one = Scalar::one(f);
  const Form at_s = combo(one, zero), at_t = combo(zero, one), at_st = combo(one, one);

  // Each 4x4 principal sub-Pfaffian is a binary quadratic q(s, t); the rank
  // drops somewhere on the pencil iff they share a root, which for these
  // pencils happens iff they fail to span all binary quadratics.
  Matrix quadratics(f, 0, 3);
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::array<std::size_t, 4> idx{};
    for (std::size_t a = 0, w = 0; a < 5; ++a)
      if (a != skip) idx[w++] = a;
    Scalar ss = pfaffian4(at_s, idx), tt = pfaffian4(at_t, idx);
    Scalar st = pfaffian4(at_st, idx) - ss - tt;
    quadratics.append_row(Vector{ss, st, tt});
  }
  return rank(quadratics) == 3;
}

Classification classify(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const SeriesReport s = nilpotent_series(algebra);
  Classification c;
  c.dim = n;
  c.nilpotency_class = *s.nilpotency_class;
  c.derived_dim = s.lower_central_dim(2);
  c.lower3_dim = s.lower_central_dim(3);
  c.center_dim = s.center.dim();
  const Subspace derived = s.lower_central.size() > 1 ? s.lower_central[1]
                                                      : Subspace::zero(algebra.field(), n);
  c.center_meet_derived_dim = intersect(s.center, derived).dim();
  c.stem_dim = c.derived_dim == 0 ? 0 : n - (c.center_dim - c.center_meet_derived_dim);

  auto yes_no = [](bool b) { return b ? Verdict::Yes : Verdict::No; };
  const std::size_t k = n - c.stem_dim;

  if (c.derived_dim == 0) {
    c.catalog = CatalogId{Family::Abelian, n, std::nullopt, 0};
    c.capable_by_classification = yes_no(n > 1);
  } else if (c.derived_dim == 1) {
    const std::size_t m = heisenberg_rank(algebra);
    c.catalog = CatalogId{Family::Heisenberg, m, std::nullopt, n - (2 * m + 1)};
    c.capable_by_classification = yes_no(m == 1);
  } else if (c.derived_dim == 2 && c.nilpotency_class == 2) {
    Family fam = Family::GenHeisenbergRank2;
    if (c.stem_dim == 5) {
      fam = Family::L58;
    } else if (c.stem_dim == 6) {
      fam = algebra.field().characteristic() == 2 ? Family::L672 : Family::L622;
    } else if (c.stem_dim == 7) {
      LieAlgebra stem = stem_algebra(algebra, stem_decompose(algebra));
      if (has_nondegenerate_pencil(stem)) fam = Family::L1;
    }
    const std::size_t size = fam == Family::GenHeisenbergRank2 ? c.stem_dim : 0;
    c.catalog = CatalogId{fam, size, std::nullopt, k};
    c.capable_by_classification = yes_no(fam != Family::GenHeisenbergRank2);
  } else if (c.derived_dim == 2 && c.nilpotency_class == 3) {
    Family fam = Family::StemClass3Dim2;
    if (c.stem_dim == 4) fam = Family::L43;
    if (c.stem_dim == 5) fam = Family::L55;
    if (c.stem_dim < 4) throw std::logic_error("class-3 stem of dimension below 4");
    const std::size_t size = fam == Family::StemClass3Dim2 ? c.stem_dim : 0;
    c.catalog = CatalogId{fam, size, std::nullopt, k};
    c.capable_by_classification = yes_no(fam != Family::StemClass3Dim2);
  } else if (c.derived_dim == 2) {
    throw std::logic_error("dim L^2 = 2 forces nilpotency class at most 3");
  }
  return c;
}

}  // namespace nilpot
