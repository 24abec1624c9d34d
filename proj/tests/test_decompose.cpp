#include "nilpot/constructions.hpp"
#include "nilpot/decompose.hpp"
#include "nilpot/document.hpp"

#include <doctest.h>

#include <random>

using namespace nilpot;

namespace {

const FieldSpec Q = FieldSpec::rationals();

CatalogId id(Family f, std::size_t size = 0, std::size_t k = 0) {
  return {f, size, std::nullopt, k};
}

}  // namespace

TEST_CASE("stem decomposition") {
  StemDecomposition s = stem_decompose(make_catalog(id(Family::Heisenberg, 1, 2), Q));
  CHECK(s.stem_dim == 3);
  CHECK(s.abelian_dim == 2);

  std::mt19937_64 rng(7);
  const LieAlgebra h2a1 = make_catalog(id(Family::Heisenberg, 2, 1), Q);
  for (int t = 0; t < 5; ++t) {
    const LieAlgebra moved = change_basis(h2a1, random_invertible(Q, 6, rng));
    s = stem_decompose(moved);
    CHECK(s.stem_dim == 5);
    CHECK(s.abelian_dim == 1);
    const LieAlgebra stem = stem_algebra(moved, s);
    const SeriesReport ss = series(stem);
    CHECK(ss.center.dim() == 1);
    CHECK(ss.lower_central[1].contains(ss.center));
    CHECK(direct_sum(stem, LieAlgebra(Q, 1)).dim() == 6);
  }

  s = stem_decompose(make_catalog(id(Family::L43), Q));
  CHECK(s.stem_dim == 4);
  CHECK(s.abelian_dim == 0);

  CHECK_THROWS(stem_decompose(LieAlgebra(Q, 3)));
}

TEST_CASE("heisenberg rank") {
  CHECK(heisenberg_rank(make_catalog(id(Family::Heisenberg, 1), Q)) == 1);
  CHECK(heisenberg_rank(make_catalog(id(Family::Heisenberg, 3, 4), Q)) == 3);
  CHECK_THROWS(heisenberg_rank(LieAlgebra(Q, 4)));
  CHECK_THROWS(heisenberg_rank(make_catalog(id(Family::L58), Q)));
}

TEST_CASE("catalog tables") {
  const LieAlgebra l43 = make_catalog(id(Family::L43), Q);
  CHECK(l43.dim() == 4);
  CHECK(series(l43).nilpotency_class == 3);
  CHECK(series(l43).lower_central_dim(2) == 2);

  const LieAlgebra l58 = make_catalog(id(Family::L58), Q);
  CHECK(l58.dim() == 5);
  CHECK(series(l58).center.dim() == 2);

  CHECK(make_catalog(id(Family::L1), Q).entries().size() == 4);
  CHECK(make_catalog(id(Family::Heisenberg, 2, 3), Q).dim() == 8);

  CatalogId eps = id(Family::L622);
  eps.parameter = Scalar(FieldSpec::prime(2), 1L);
  CHECK_THROWS(make_catalog(eps, FieldSpec::prime(2)));
  CHECK_THROWS(make_catalog(id(Family::L672), Q));
  CHECK_THROWS(make_catalog(id(Family::GenHeisenbergRank2, 7), Q));

  for (auto f : {Family::Abelian, Family::Heisenberg, Family::L43, Family::L55, Family::L58,
                 Family::L622, Family::L672, Family::L1}) {
    CHECK(family_from_name(catalog_name(f)) == f);
    const FieldSpec field = f == Family::L672 ? FieldSpec::prime(2) : Q;
    CHECK(validate(make_catalog(id(f, 2, 1), field)).empty());
  }
  CHECK_FALSE(family_from_name("L6_19").has_value());
}

TEST_CASE("classification examples") {
  Classification c = classify(make_catalog(id(Family::Heisenberg, 1, 4), Q));
  REQUIRE(c.in_scope());
  CHECK(c.catalog->family == Family::Heisenberg);
  CHECK(c.catalog->size == 1);
  CHECK(c.catalog->abelian_summand == 4);
  CHECK(c.capable_by_classification == Verdict::Yes);

  c = classify(make_catalog(id(Family::Heisenberg, 2), Q));
  CHECK(c.catalog->size == 2);
  CHECK(c.capable_by_classification == Verdict::No);

  std::mt19937_64 rng(314);
  const LieAlgebra l55a3 = make_catalog(id(Family::L55, 0, 3), Q);
  c = classify(change_basis(l55a3, random_invertible(Q, 8, rng)));
  CHECK(c.catalog->family == Family::L55);
  CHECK(c.catalog->abelian_summand == 3);
  CHECK(c.nilpotency_class == 3);
  CHECK(c.capable_by_classification == Verdict::Yes);

  c = classify(LieAlgebra(Q, 1));
  CHECK(c.catalog->family == Family::Abelian);
  CHECK(c.capable_by_classification == Verdict::No);

  // Free nilpotent of class 2 on three generators: dim L^2 = 3.
  const LieAlgebra f32(Q, 6,
                       {{0, 1, unit_vector(Q, 6, 3)},
                        {0, 2, unit_vector(Q, 6, 4)},
                        {1, 2, unit_vector(Q, 6, 5)}});
  c = classify(f32);
  CHECK_FALSE(c.in_scope());
  CHECK(c.derived_dim == 3);

  const LieAlgebra affine(Q, 2, {{0, 1, unit_vector(Q, 2, 1)}});
  CHECK_THROWS_AS(classify(affine), NotNilpotent);
}

TEST_CASE("catalog round trip through classify, with basis changes") {
  std::mt19937_64 rng(1);
  struct Entry {
    CatalogId id;
    FieldSpec field;
  };
  std::vector<Entry> entries;
  for (std::size_t k = 0; k <= 3; ++k) {
    entries.push_back({id(Family::Abelian, 2 + k), Q});
    for (std::size_t m = 1; m <= 3; ++m) entries.push_back({id(Family::Heisenberg, m, k), Q});
    for (auto f : {Family::L43, Family::L55, Family::L58, Family::L1}) entries.push_back({id(f, 0, k), Q});
    entries.push_back({id(Family::L622, 0, k), FieldSpec::prime(5)});
    entries.push_back({id(Family::L622, 0, k), Q});
    entries.push_back({id(Family::L672, 0, k), FieldSpec::prime(2)});
  }
  for (const auto& e : entries) {
    const LieAlgebra l = make_catalog(e.id, e.field);
    for (int t = 0; t < 2; ++t) {
      const LieAlgebra moved = t ? change_basis(l, random_invertible(e.field, l.dim(), rng)) : l;
      const Classification c = classify(moved);
      REQUIRE(c.in_scope());
      CHECK(c.catalog->family == e.id.family);
      CHECK(c.catalog->size == e.id.size);
      CHECK(c.catalog->abelian_summand == e.id.abelian_summand);
      CHECK(c.dim == l.dim());
    }
  }
}

TEST_CASE("eta and epsilon variants classify by stem") {
  for (long eta : {0L, 1L}) {
    CatalogId i = id(Family::L672);
    i.parameter = Scalar(FieldSpec::prime(2), eta);
    CHECK(classify(make_catalog(i, FieldSpec::prime(2))).catalog->family == Family::L672);
  }
  for (long eps : {0L, 1L, 2L}) {
    CatalogId i = id(Family::L622);
    i.parameter = Scalar(FieldSpec::prime(5), eps);
    CHECK(classify(make_catalog(i, FieldSpec::prime(5))).catalog->family == Family::L622);
  }
}

TEST_CASE("seven-dimensional stems: the pencil test separates L1") {
  const LieAlgebra l1 = make_catalog(id(Family::L1), Q);
  CHECK(has_nondegenerate_pencil(l1));
  const LieAlgebra glued = l58_glued_heisenberg(Q);
  const SeriesReport s = series(glued);
  CHECK(s.center.dim() == 2);
  CHECK(s.lower_central[1] == s.center);
  CHECK_FALSE(has_nondegenerate_pencil(glued));
  CHECK(classify(glued).catalog->family == Family::GenHeisenbergRank2);
  CHECK(classify(glued).capable_by_classification == Verdict::No);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 4; ++t) {
    CHECK(has_nondegenerate_pencil(change_basis(l1, random_invertible(Q, 7, rng))));
    CHECK_FALSE(has_nondegenerate_pencil(change_basis(glued, random_invertible(Q, 7, rng))));
  }
  const FieldSpec f5 = FieldSpec::prime(5);
  CHECK(has_nondegenerate_pencil(make_catalog(id(Family::L1), f5)));
  CHECK_FALSE(has_nondegenerate_pencil(l58_glued_heisenberg(f5)));
}

TEST_CASE("generic families") {
  const LieAlgebra g = glued_heisenbergs(Q, {2, 2}, {{1, 0}, {0, 1}});
  const Classification c = classify(g);
  CHECK(c.catalog->family == Family::GenHeisenbergRank2);
  CHECK(c.stem_dim == 10);
  CHECK(c.capable_by_classification == Verdict::No);

  const LieAlgebra t = l43_with_central_pairs(Q, 1);
  const Classification ct = classify(t);
  CHECK(ct.catalog->family == Family::StemClass3Dim2);
  CHECK(ct.stem_dim == 6);
  CHECK(ct.nilpotency_class == 3);
  CHECK(ct.capable_by_classification == Verdict::No);
  CHECK(ct.catalog->describe() == "StemClass3Dim2[6]");
}
