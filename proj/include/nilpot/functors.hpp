// Closed-form dimensions of the Schur multiplier, exterior square, tensor
// square and corank, and the capability verdict, for every family produced
// by classify().
//
// All formulas take n = total dimension, abelian summand included.

#ifndef NILPOT_FUNCTORS_HPP
#define NILPOT_FUNCTORS_HPP

#include "nilpot/decompose.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace nilpot {

/// A dimension known exactly, or only up to a small admissible set.
class Admissible {
 public:
  Admissible() = default;
  Admissible(std::int64_t value) : values_{value} {}  // NOLINT(google-explicit-constructor)
  Admissible(std::initializer_list<std::int64_t> values);

  bool is_exact() const { return values_.size() == 1; }
  /// Throws std::logic_error unless exact.
  std::int64_t value() const;
  const std::vector<std::int64_t>& values() const { return values_; }
  bool contains(std::int64_t v) const;

  template <typename F>
  Admissible map(F f) const {
    Admissible out;
    for (auto v : values_) out.insert(f(v));
    return out;
  }
  std::string to_string() const;

  friend bool operator==(const Admissible&, const Admissible&) = default;

 private:
  void insert(std::int64_t v);
  std::vector<std::int64_t> values_;  // sorted, unique
};

/// Raised when a formula is requested for dim L^2 > 2.
class OutOfScope : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FunctorReport {
  std::int64_t n = 0;
  std::int64_t derived_dim = 0;
  Admissible schur;
  Admissible exterior;
  Admissible tensor;
  std::int64_t square = 0;
  Admissible corank;
  Verdict capable = Verdict::Undetermined;
  bool exterior_abelian = false;
  /// Which closed-form rule produced the numbers, e.g. "capable/L5_8+A".
  std::string rule;
  std::string provenance = "formula";
};

Admissible schur_dim_formula(const Classification& c);
Admissible exterior_dim_formula(const Classification& c);
Admissible tensor_dim_formula(const Classification& c);
/// dim L□L = m(m+1)/2 with m = n - dim L^2.
std::int64_t square_dim(std::int64_t n, std::int64_t derived_dim);
/// n(n-1)/2 - dim M(L), elementwise on admissible sets.
Admissible corank(const Classification& c);
bool is_capable_formula(const Classification& c);
bool exterior_is_abelian(const Classification& c);
std::string formula_rule(const Classification& c);

FunctorReport functor_report(const Classification& c);

}  // namespace nilpot

#endif  // NILPOT_FUNCTORS_HPP
