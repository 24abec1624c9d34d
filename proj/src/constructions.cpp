#include "nilpot/constructions.hpp"

#include "nilpot/decompose.hpp"

namespace nilpot {

namespace {

LieAlgebra with_central_pairs(const LieAlgebra& base, std::size_t target, std::size_t pairs) {
  const FieldSpec& f = base.field();
  const std::size_t n = base.dim() + 2 * pairs;
  std::vector<BracketEntry> entries;
  for (const auto& e : base.entries()) {
    Vector v = zero_vector(f, n);
    std::copy(e.coeffs.begin(), e.coeffs.end(), v.begin());
    entries.push_back({e.i, e.j, std::move(v)});
  }
  for (std::size_t k = 0; k < pairs; ++k) {
    const std::size_t u = base.dim() + 2 * k;
    entries.push_back({u, u + 1, unit_vector(f, n, target)});
  }
  return LieAlgebra(f, n, entries);
}

}  // namespace

LieAlgebra l43_with_central_pairs(const FieldSpec& field, std::size_t pairs) {
  return with_central_pairs(make_catalog({Family::L43, 0, std::nullopt, 0}, field), 3, pairs);
}

LieAlgebra l55_with_central_pairs(const FieldSpec& field, std::size_t pairs) {
  return with_central_pairs(make_catalog({Family::L55, 0, std::nullopt, 0}, field), 4, pairs);
}

LieAlgebra l58_glued_heisenberg(const FieldSpec& field) {
  const std::size_t n = 7;
  return LieAlgebra(field, n,
                    {{0, 1, unit_vector(field, n, 5)},
                     {0, 2, unit_vector(field, n, 6)},
                     {3, 4, unit_vector(field, n, 5)}},
                    {"x1", "x2", "x3", "y1", "y2", "z1", "z2"});
}

LieAlgebra glued_heisenbergs(const FieldSpec& field, const std::vector<std::size_t>& ranks,
                             const std::vector<std::pair<long, long>>& targets) {
  if (ranks.size() != targets.size()) {
    throw std::invalid_argument("glued_heisenbergs: one target per summand");
  }
  std::size_t width = 0;
  for (auto m : ranks) width += 2 * m;
  const std::size_t n = width + 2;
  std::vector<BracketEntry> entries;
  std::size_t next = 0;
  for (std::size_t s = 0; s < ranks.size(); ++s) {
    Vector image = zero_vector(field, n);
    image[width] = Scalar(field, targets[s].first);
    image[width + 1] = Scalar(field, targets[s].second);
    for (std::size_t k = 0; k < ranks[s]; ++k, next += 2) {
      if (!is_zero(image)) entries.push_back({next, next + 1, image});
    }
  }
  return LieAlgebra(field, n, entries);
}

}  // namespace nilpot
