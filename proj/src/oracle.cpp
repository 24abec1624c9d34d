#include "nilpot/oracle.hpp"

#include <algorithm>
#include <thread>

namespace nilpot {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

CochainComplexSlice cochain_slice(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const FieldSpec& f = algebra.field();
  const std::size_t pairs = n * (n - (n > 0)) / 2;
  const std::size_t triples = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;

  CochainComplexSlice out{Matrix(f, pairs, n), Matrix(f, triples, pairs)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& c = algebra.coeff(i, j, l);
        if (!c.is_zero()) out.d1(pair_index(i, j, n), l) = -c;
      }

  // sign * w([x_a, x_b], x_m) added into row `row` of d2.
  auto add_term = [&](std::size_t row, std::size_t a, std::size_t b, std::size_t m, bool negate) {
    for (std::size_t l = 0; l < n; ++l) {
      const Scalar& c = algebra.coeff(a, b, l);
      if (c.is_zero() || l == m) continue;
      // w(x_l, x_m) = +w_(l,m) if l < m, -w_(m,l) otherwise.
      const bool flip = negate != (l > m);
      Scalar& entry = out.d2(row, pair_index(std::min(l, m), std::max(l, m), n));
      entry += flip ? -c : c;
    }
  };
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k, ++row) {
        add_term(row, i, j, k, true);
        add_term(row, i, k, j, false);
        add_term(row, j, k, i, true);
      }
  return out;
}

std::int64_t schur_dim_oracle(const LieAlgebra& algebra) {
  const auto slice = cochain_slice(algebra);
  const auto pairs = static_cast<std::int64_t>(slice.d1.rows());
  const auto cocycles = pairs - static_cast<std::int64_t>(rank(slice.d2));
  return cocycles - static_cast<std::int64_t>(rank(slice.d1));
}

namespace {

std::int64_t regime_derived_dim(const LieAlgebra& algebra) {
  const SeriesReport s = series(algebra);
  if (!s.nilpotent()) throw OracleUnavailable("exterior/tensor oracle needs a nilpotent algebra");
  const auto d = static_cast<std::int64_t>(s.lower_central_dim(2));
  if (d > 2) {
    throw OracleUnavailable("exterior/tensor oracle needs dim L^2 <= 2, got " + std::to_string(d));
  }
  return d;
}

std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

std::int64_t exterior_dim_oracle(const LieAlgebra& algebra) {
  const std::int64_t d = regime_derived_dim(algebra);
  return schur_dim_oracle(algebra) + d;
}

std::int64_t tensor_dim_oracle(const LieAlgebra& algebra) {
  const std::int64_t d = regime_derived_dim(algebra);
  const auto n = static_cast<std::int64_t>(algebra.dim());
  return schur_dim_oracle(algebra) + d + square_dim(n, d);
}

Subspace epicenter(const LieAlgebra& algebra, unsigned threads) {
  const FieldSpec& f = algebra.field();
  if (!f.is_prime()) {
    throw OracleUnavailable("epicenter sweep needs a finite prime field, got " + f.name());
  }
  const SeriesReport s = series(algebra);
  if (!s.nilpotent()) throw NotNilpotent("epicenter: algebra is not nilpotent");
  const std::size_t n = algebra.dim();
  const std::size_t d = s.center.dim();
  const std::uint64_t p = f.characteristic();
  if (d == 0) return Subspace::zero(f, n);

  constexpr std::uint64_t kMaxLines = 2'000'000;
  std::uint64_t bound = 1;  // p^(d-1), saturating
  for (std::size_t i = 1; i < d && bound <= kMaxLines; ++i) {
    bound = bound > kMaxLines / p ? kMaxLines + 1 : bound * p;
  }
  if (bound > kMaxLines) {
    throw OracleUnavailable("epicenter sweep too large: " + std::to_string(d) +
                            "-dimensional center over " + f.name());
  }

  // Central lines as normalized coefficient vectors (first nonzero = 1).
  std::vector<Vector> lines;
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::uint64_t tail = ipow(p, d - lead - 1);
    for (std::uint64_t code = 0; code < tail; ++code) {
      Vector coeff = zero_vector(f, d);
      coeff[lead] = Scalar::one(f);
      std::uint64_t c = code;
      for (std::size_t t = lead + 1; t < d; ++t, c /= p) coeff[t] = Scalar::residue(f, c % p);
      lines.push_back(coeff * s.center.basis());
    }
  }

  const std::int64_t base = schur_dim_oracle(algebra);
  const Subspace& derived = s.lower_central[1];
  std::vector<char> member(lines.size(), 0);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < lines.size(); i += stride) {
      const Subspace line = Subspace::span(f, n, {lines[i]});
      const std::int64_t meet = derived.contains(lines[i]) ? 1 : 0;
      member[i] = base == schur_dim_oracle(quotient(algebra, line).algebra) - meet;
    }
  };
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, lines.size()));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::vector<Vector> members;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (member[i]) members.push_back(lines[i]);
  Subspace result = Subspace::span(f, n, members);
  const std::uint64_t expected = (ipow(p, result.dim()) - 1) / (p - 1);
  if (members.size() != expected) {
    throw std::logic_error("epicenter members (" + std::to_string(members.size()) +
                           " lines) do not form a subspace of dimension " +
                           std::to_string(result.dim()));
  }
  return result;
}

bool capable_oracle(const LieAlgebra& algebra) { return epicenter(algebra).dim() == 0; }

LieAlgebra reduce_mod(const LieAlgebra& algebra, const FieldSpec& prime_field) {
  if (!prime_field.is_prime()) throw FieldMismatch("reduce_mod needs a prime field");
  if (algebra.field() == prime_field) return algebra;
  if (!algebra.field().is_rational()) throw FieldMismatch("reduce_mod needs a rational table");
  std::vector<BracketEntry> entries;
  for (const auto& e : algebra.entries()) {
    Vector v;
    for (const auto& c : e.coeffs) v.emplace_back(prime_field, c.rational_value());
    if (!is_zero(v)) entries.push_back({e.i, e.j, std::move(v)});
  }
  return LieAlgebra(prime_field, algebra.dim(), entries, algebra.labels());
}

namespace {

// First prime >= `start` at which the reduction keeps the multiplier, the
// derived subalgebra and the center; the sweep over GF(p) is only meaningful
// for such a prime.
std::optional<LieAlgebra> good_reduction(const LieAlgebra& algebra, std::int64_t schur,
                                         std::uint64_t start, std::vector<std::string>& notes) {
  const SeriesReport s = series(algebra);
  std::uint64_t p = start;
  for (int tries = 0; tries < 25; ++tries, ++p) {
    while (!is_prime_number(p)) ++p;
    try {
      LieAlgebra r = reduce_mod(algebra, FieldSpec::prime(p));
      const SeriesReport sr = series(r);
      if (schur_dim_oracle(r) != schur || sr.center.dim() != s.center.dim() ||
          sr.lower_central_dim(2) != s.lower_central_dim(2)) {
        continue;
      }
      notes.push_back("capability swept over the reduction mod " + std::to_string(p));
      return r;
    } catch (const std::domain_error&) {
    }
  }
  notes.push_back("capability sweep skipped: no good reduction near " + std::to_string(start));
  return std::nullopt;
}

}  // namespace

bool CrossCheckReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

CrossCheckReport cross_check(const LieAlgebra& algebra, const CrossCheckOptions& options) {
  CrossCheckReport report;
  report.classification = classify(algebra);
  const Classification& c = report.classification;
  const auto n = static_cast<std::int64_t>(c.dim);
  const auto d = static_cast<std::int64_t>(c.derived_dim);

  report.oracle.schur = schur_dim_oracle(algebra);
  if (d <= 2) {
    report.oracle.exterior = report.oracle.schur + d;
    report.oracle.tensor = *report.oracle.exterior + square_dim(n, d);
  }

  if (options.capability) {
    std::optional<LieAlgebra> swept;
    if (algebra.field().is_prime()) {
      swept = algebra;
    } else if (options.sweep_prime != 0) {
      swept = good_reduction(algebra, report.oracle.schur, options.sweep_prime, report.notes);
    }
    if (swept) {
      try {
        const Subspace z = epicenter(*swept, options.threads);
        report.oracle.epicenter_dim = static_cast<std::int64_t>(z.dim());
        report.oracle.capable = z.dim() == 0;
        report.oracle.epicenter_field = swept->field().name();
      } catch (const OracleUnavailable& e) {
        report.notes.push_back(std::string("capability sweep skipped: ") + e.what());
      }
    }
  }

  if (!c.in_scope()) {
    report.notes.push_back("dim L^2 = " + std::to_string(d) + " > 2: no closed forms apply");
    return report;
  }
  report.formula = functor_report(c);
  const FunctorReport& fr = *report.formula;

  auto check = [&](std::string name, const Admissible& formula, std::int64_t oracle) {
    report.lines.push_back(
        {std::move(name), formula.to_string(), std::to_string(oracle), formula.contains(oracle)});
  };
  check("schur", fr.schur, report.oracle.schur);
  check("exterior", fr.exterior, *report.oracle.exterior);
  check("tensor", fr.tensor, *report.oracle.tensor);
  check("corank", fr.corank, n * (n - 1) / 2 - report.oracle.schur);

  // Internal consistency of the closed forms themselves.
  const bool exact_sequence = fr.exterior == fr.schur.map([d](auto v) { return v + d; });
  report.lines.push_back({"formula: exterior - schur = dim L^2", fr.exterior.to_string(),
                          fr.schur.to_string() + " + " + std::to_string(d), exact_sequence});
  const bool tensor_split = fr.tensor == fr.exterior.map([&](auto v) { return v + fr.square; });
  report.lines.push_back({"formula: tensor - exterior = dim L box L", fr.tensor.to_string(),
                          fr.exterior.to_string() + " + " + std::to_string(fr.square),
                          tensor_split});

  if (report.oracle.capable) {
    const bool formula_capable = fr.capable == Verdict::Yes;
    report.lines.push_back({"capable", formula_capable ? "true" : "false",
                            *report.oracle.capable ? "true" : "false",
                            formula_capable == *report.oracle.capable});
  }
  return report;
}

}  // namespace nilpot
