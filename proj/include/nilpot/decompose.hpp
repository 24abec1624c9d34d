// Stem/abelian splitting, the named catalog of small nilpotent algebras, and
// invariant-based classification of algebras whose derived subalgebra has
// dimension at most two.

#ifndef NILPOT_DECOMPOSE_HPP
#define NILPOT_DECOMPOSE_HPP

#include "nilpot/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nilpot {

struct StemDecomposition {
  /// Rows are the new basis: first the stem T (containing L^2), then the
  /// central abelian summand A.
  Matrix basis_change;
  std::size_t stem_dim = 0;
  std::size_t abelian_dim = 0;
};

/// L = T (+) A with A central abelian and Z(T) = Z(L) n L^2.
/// Throws std::invalid_argument for abelian or non-nilpotent input.
StemDecomposition stem_decompose(const LieAlgebra& algebra);

/// The stem T as an algebra in its own right (first block of the split).
LieAlgebra stem_algebra(const LieAlgebra& algebra, const StemDecomposition& split);

/// For dim L^2 = 1 this is m with L = H(m) (+) A.
std::size_t heisenberg_rank(const LieAlgebra& algebra);

enum class Family {
  Abelian,            // A(size)
  Heisenberg,         // H(size), dimension 2*size + 1
  GenHeisenbergRank2, // class-2 stem with dim L^2 = Z = 2 outside the capable list; size = stem dim
  StemClass3Dim2,     // class-3 stem with dim L^2 = 2 of dimension size >= 6
  L43,
  L55,
  L58,
  L622,               // parameter epsilon, characteristic != 2
  L672,               // parameter eta, characteristic 2
  L1,
};

std::string family_name(Family family);

struct CatalogId {
  Family family = Family::Abelian;
  /// n for Abelian, m for Heisenberg, stem dimension for the two generic
  /// families; unused otherwise.
  std::size_t size = 0;
  /// epsilon / eta, when known. Classification never recovers it.
  std::optional<Scalar> parameter;
  std::size_t abelian_summand = 0;

  /// Dimension of the named summand (without A(k)).
  std::size_t base_dim() const;
  std::size_t total_dim() const { return base_dim() + abelian_summand; }
  /// e.g. "L5_8 + A(3)", "H(2)", "L6_22(eps=1)".
  std::string describe() const;

  friend bool operator==(const CatalogId&, const CatalogId&) = default;
};

/// Parses the command-line names "A", "H", "L4_3", "L5_5", "L5_8", "L6_22",
/// "L6_7_2", "L1". Returns nullopt for anything else.
std::optional<Family> family_from_name(const std::string& name);
/// Inverse of family_from_name for the constructible families.
std::string catalog_name(Family family);

/// Exact structure constants of the named algebra plus A(abelian_summand).
/// Throws std::invalid_argument on a characteristic mismatch or for the two
/// generic families, which have no canonical representative.
LieAlgebra make_catalog(const CatalogId& id, const FieldSpec& field);

enum class Verdict { Yes, No, Undetermined };
std::string to_string(Verdict v);

struct Classification {
  /// nullopt when dim L^2 > 2.
  std::optional<CatalogId> catalog;
  std::size_t dim = 0;
  std::size_t derived_dim = 0;
  int nilpotency_class = 0;
  std::size_t center_dim = 0;
  std::size_t lower3_dim = 0;
  std::size_t center_meet_derived_dim = 0;
  std::size_t stem_dim = 0;
  Verdict capable_by_classification = Verdict::Undetermined;

  bool in_scope() const { return catalog.has_value(); }
};

/// Thrown for input that is not nilpotent.
class NotNilpotent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Classification classify(const LieAlgebra& algebra);

/// Whether a 7-dimensional class-2 stem with dim L^2 = 2 is L1: its pencil
/// of commutator forms has no degenerate member even over the algebraic
/// closure. Exposed for tests.
bool has_nondegenerate_pencil(const LieAlgebra& stem);

}  // namespace nilpot

#endif  // NILPOT_DECOMPOSE_HPP
