#include "nilpot/decompose.hpp"
#include "nilpot/document.hpp"

#include <doctest.h>

#include <random>

using namespace nilpot;

namespace {

const FieldSpec Q = FieldSpec::rationals();

LieAlgebra H(std::size_t m, std::size_t k = 0) {
  return make_catalog({Family::Heisenberg, m, std::nullopt, k}, Q);
}
LieAlgebra A(std::size_t n) { return LieAlgebra(Q, n); }

std::vector<std::size_t> dims(const std::vector<Subspace>& chain) {
  std::vector<std::size_t> out;
  for (const auto& s : chain) out.push_back(s.dim());
  return out;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(A(4)).empty());
  CHECK(validate(H(1)).empty());
  // [x1,x2] = x3 with [x1,x3] = x1: the cyclic sum on (1,2,3) is x3.
  const LieAlgebra bad(Q, 3, {{0, 1, unit_vector(Q, 3, 2)}, {0, 2, unit_vector(Q, 3, 0)}});
  const auto v = validate(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 1);
  CHECK(v[0].k == 2);
  CHECK(v[0].residual == unit_vector(Q, 3, 2));
}

TEST_CASE("table construction guards") {
  CHECK_THROWS(LieAlgebra(Q, 2, {{1, 0, unit_vector(Q, 2, 0)}}));
  CHECK_THROWS(LieAlgebra(Q, 2, {{0, 2, unit_vector(Q, 2, 0)}}));
  CHECK_THROWS(LieAlgebra(Q, 2, {{0, 1, unit_vector(Q, 3, 0)}}));
  CHECK_THROWS(LieAlgebra(Q, 2, {{0, 1, unit_vector(Q, 2, 0)}, {0, 1, unit_vector(Q, 2, 1)}}));
  CHECK_THROWS(LieAlgebra(Q, 2, {{0, 1, unit_vector(FieldSpec::prime(3), 2, 0)}}));
  const LieAlgebra h = H(1);
  CHECK(h.bracket(1, 0) == Vector{Scalar(Q, 0L), Scalar(Q, 0L), Scalar(Q, -1L)});
  CHECK(is_zero(h.bracket(2, 2)));
}

TEST_CASE("bracket spans") {
  const Subspace full5 = Subspace::full(Q, 5);
  CHECK(bracket_span(A(5), full5, full5).dim() == 0);
  const Subspace full3 = Subspace::full(Q, 3);
  const Subspace h2 = bracket_span(H(1), full3, full3);
  CHECK(h2.dim() == 1);
  CHECK(h2.contains(unit_vector(Q, 3, 2)));

  const LieAlgebra l43 = make_catalog({Family::L43}, Q);
  const Subspace full4 = Subspace::full(Q, 4);
  const Subspace d = bracket_span(l43, full4, full4);
  const Subspace l3 = bracket_span(l43, d, full4);
  CHECK(l3 == Subspace::span(Q, 4, {unit_vector(Q, 4, 3)}));
}

TEST_CASE("series") {
  SeriesReport s = series(A(5));
  CHECK(s.nilpotency_class == 1);
  CHECK(s.center.dim() == 5);
  CHECK(s.lower_central_dim(2) == 0);

  s = series(make_catalog({Family::L43}, Q));
  CHECK(dims(s.lower_central) == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(s.nilpotency_class == 3);
  CHECK(s.center == Subspace::span(Q, 4, {unit_vector(Q, 4, 3)}));

  s = series(make_catalog({Family::L58}, Q));
  CHECK(s.nilpotency_class == 2);
  CHECK(s.lower_central_dim(2) == 2);
  CHECK(s.center == Subspace::span(Q, 5, {unit_vector(Q, 5, 3), unit_vector(Q, 5, 4)}));

  CHECK(series(LieAlgebra(Q, 0)).nilpotency_class == 0);

  // [x1, x2] = x2 is solvable, not nilpotent.
  const LieAlgebra affine(Q, 2, {{0, 1, unit_vector(Q, 2, 1)}});
  s = series(affine);
  CHECK_FALSE(s.nilpotent());
  CHECK(dims(s.derived) == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("quotients") {
  const LieAlgebra h = H(1);
  const Quotient same = quotient(h, Subspace::zero(Q, 3));
  CHECK(same.algebra == h);
  const Quotient ab = quotient(h, series(h).center);
  CHECK(ab.algebra.dim() == 2);
  CHECK(ab.algebra.is_abelian());

  const LieAlgebra l43 = make_catalog({Family::L43}, Q);
  const Quotient q = quotient(l43, series(l43).center);
  CHECK(q.algebra.dim() == 3);
  CHECK(series(q.algebra).lower_central_dim(2) == 1);
  CHECK(series(q.algebra).center.dim() == 1);
  CHECK(q.projection.rows() == 3);
  CHECK(q.projection.cols() == 4);

  CHECK_THROWS_AS(quotient(h, Subspace::span(Q, 3, {unit_vector(Q, 3, 0)})), NotAnIdeal);
}

TEST_CASE("direct sums and basis changes") {
  CHECK(direct_sum(A(2), A(3)) == A(5));
  for (std::size_t n = 3; n <= 7; ++n) {
    const LieAlgebra l = direct_sum(H(1), A(n - 3));
    const SeriesReport s = series(l);
    CHECK(s.lower_central_dim(2) == 1);
    CHECK(s.center.dim() == n - 2);
  }
  CHECK_THROWS_AS(direct_sum(A(1), LieAlgebra(FieldSpec::prime(3), 1)), FieldMismatch);
  CHECK_THROWS(change_basis(H(1), Matrix(Q, 3, 3)));

  std::mt19937_64 rng(99);
  const std::vector<LieAlgebra> pool = {
      H(1), H(2, 1), make_catalog({Family::L43}, Q), make_catalog({Family::L55, 0, std::nullopt, 2}, Q),
      make_catalog({Family::L1}, Q), make_catalog({Family::L622, 0, std::nullopt, 0}, FieldSpec::prime(5))};
  for (const auto& l : pool) {
    const SeriesReport before = series(l);
    for (int t = 0; t < 5; ++t) {
      const LieAlgebra moved = change_basis(l, random_invertible(l.field(), l.dim(), rng));
      CHECK(validate(moved).empty());
      const SeriesReport after = series(moved);
      CHECK(dims(after.lower_central) == dims(before.lower_central));
      CHECK(dims(after.derived) == dims(before.derived));
      CHECK(after.center.dim() == before.center.dim());
      CHECK(after.nilpotency_class == before.nilpotency_class);
    }
  }
}

TEST_CASE("direct sums add invariants") {
  const LieAlgebra a = make_catalog({Family::L43}, Q), b = make_catalog({Family::L58}, Q);
  const SeriesReport sa = series(a), sb = series(b), s = series(direct_sum(a, b));
  CHECK(s.lower_central_dim(2) == sa.lower_central_dim(2) + sb.lower_central_dim(2));
  CHECK(s.center.dim() == sa.center.dim() + sb.center.dim());
  CHECK(s.nilpotency_class == std::max(*sa.nilpotency_class, *sb.nilpotency_class));
  CHECK(bracket_span(direct_sum(a, b), Subspace::full(Q, 9), Subspace::full(Q, 9)) ==
        s.lower_central[1]);
}

TEST_CASE("leading subalgebra") {
  const LieAlgebra l = direct_sum(H(1), A(2));
  CHECK(leading_subalgebra(l, 3) == H(1));
  CHECK_THROWS(leading_subalgebra(l, 2));
}
