#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "satrank/field.hpp"
#include "satrank/matrix.hpp"

namespace satrank {

/// Coordinate vector of an element in the algebra's basis.
using LieElement = Vec;

struct SparseTerm {
  std::size_t index;
  FieldElem coeff;
};
using SparseVec = std::vector<SparseTerm>;

/// Finite-dimensional restricted Lie algebra given by structure constants
/// and the p-map on basis vectors, optionally with a faithful matrix model.
///
/// Construction validates antisymmetry, the Jacobi identity on basis triples,
/// ad(b^[p]) = ad(b)^p for every basis vector, and, when a matrix model is
/// present, agreement of bracket and p-map with commutator and p-th power.
/// Instances are immutable afterwards.
class RestrictedLieAlgebra {
 public:
  /// brackets[i][j] = [b_i, b_j]; pmap[i] = b_i^[p].
  RestrictedLieAlgebra(Field field, std::vector<std::string> labels,
                       std::vector<std::vector<LieElement>> brackets, std::vector<LieElement> pmap,
                       std::optional<std::vector<Mat>> matrix_model = std::nullopt);

  /// Subalgebra of gl_n spanned by linearly independent matrices closed under
  /// commutator and p-th power; structure constants are derived.
  static RestrictedLieAlgebra from_matrices(Field field, std::vector<std::string> labels,
                                            std::vector<Mat> basis);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const LieElement& structure(std::size_t i, std::size_t j) const { return brackets_[i][j]; }
  const LieElement& pmap_of_basis(std::size_t i) const { return pmap_[i]; }
  bool has_matrix_model() const { return model_.has_value(); }
  const std::vector<Mat>& matrix_model() const { return *model_; }

  LieElement zero() const { return LieElement(dim()); }
  LieElement basis(std::size_t i) const;

  LieElement bracket(const LieElement& x, const LieElement& y) const;
  /// Matrix of ad x in the algebra basis (column j = [x, b_j]).
  Mat ad(const LieElement& x) const;

  /// x^[p]: via the matrix model when present, otherwise Jacobson's formula.
  LieElement pmap(const LieElement& x) const;
  /// x^[p] by folding Jacobson's formula over the basis expansion of x.
  LieElement pmap_jacobson(const LieElement& x) const;
  bool in_nullcone(const LieElement& x) const;

  /// Requires a matrix model.
  Mat to_matrix(const LieElement& x) const;
  /// Coordinates of a matrix in the model basis; nullopt if it is not in the span.
  std::optional<LieElement> from_matrix(const Mat& m) const;

  struct AxiomReport {
    bool antisymmetric = true;
    bool jacobi = true;
    bool restricted = true;
    bool model_consistent = true;
    std::string first_failure;
    bool ok() const { return antisymmetric && jacobi && restricted && model_consistent; }
  };
  AxiomReport check_axioms() const;

 private:
  LieElement pmap_model(const LieElement& x) const;
  // sum_{i=1}^{p-1} s_i(x, y) with i*s_i(x, y) the t^{i-1} coefficient of ad(tx + y)^{p-1}(x).
  LieElement jacobson_correction(const LieElement& x, const LieElement& y) const;

  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<LieElement>> brackets_;
  std::vector<LieElement> pmap_;
  std::optional<std::vector<Mat>> model_;
  std::vector<Vec> model_flat_;
  SpanCoordinates model_coords_;
};

/// Named algebras.
namespace algebras {
/// 2n+1-dimensional Heisenberg algebra, basis x_1..x_n, y_1..y_n, z with
/// [x_i, y_j] = delta_ij z and zero p-map. Throws PreconditionError for p = 2.
RestrictedLieAlgebra heisenberg(std::size_t n, const Field& field);
/// sl_n with basis E_ij (i != j, row-major) followed by H_i = E_ii - E_{i+1,i+1}.
RestrictedLieAlgebra sl(std::size_t n, const Field& field);
/// gl_n with basis E_ij in row-major order.
RestrictedLieAlgebra gl(std::size_t n, const Field& field);
/// Abelian algebra of dimension d with zero p-map.
RestrictedLieAlgebra abelian(std::size_t d, const Field& field);
/// Torus: abelian with b_i^[p] = b_i, so the nullcone is {0}.
RestrictedLieAlgebra torus(std::size_t d, const Field& field);
}  // namespace algebras

/// Dimension r elementary subalgebra given by a basis.
struct ElementarySubalgebra {
  std::vector<LieElement> basis;
  std::size_t rank() const { return basis.size(); }
};

/// Pairwise commuting p-nilpotent elements of a centralizer.
struct CommutingTuple {
  std::vector<LieElement> entries;
  bool independent = false;
};

struct SearchLimits {
  static constexpr std::uint64_t kDefaultMaxPoints = 10'000'000;
  /// Cap on enumerated field points (nullcone sweep) and on search nodes per local rank.
  std::uint64_t max_points = kDefaultMaxPoints;
  unsigned threads = 1;
};

/// Number of points q^dim, saturating at UINT64_MAX.
std::uint64_t point_count(const RestrictedLieAlgebra& g);
/// Point with the given index; coordinate 0 is the most significant base-q digit.
LieElement point_at(const RestrictedLieAlgebra& g, std::uint64_t index);

/// Calls fn on every x with x^[p] = 0 in increasing point order.
/// Throws BudgetError when q^dim exceeds limits.max_points.
void for_each_nullcone_point(const RestrictedLieAlgebra& g, const SearchLimits& limits,
                             const std::function<void(const LieElement&)>& fn);
std::vector<LieElement> nullcone(const RestrictedLieAlgebra& g, const SearchLimits& limits = {});

/// Basis of ker(ad x).
std::vector<LieElement> centralizer(const RestrictedLieAlgebra& g, const LieElement& x);

/// Linearly independent, pairwise commuting, and p-map zero on the basis.
bool is_elementary(const RestrictedLieAlgebra& g, const std::vector<LieElement>& basis);

struct LocalRank {
  std::size_t rank = 0;
  /// Maximal-dimension elementary subalgebra; its first basis vector is x.
  ElementarySubalgebra witness;
  std::uint64_t nodes = 0;
};

/// r_x: maximal dimension of an elementary subalgebra containing x.
///
/// Depth-first over independent commuting tuples in V(g) ∩ z(x): each step
/// draws the next vector from the common centralizer of the current span,
/// reduced modulo the span (zero at its pivot columns), normalized, and with
/// leading column beyond the previous choice. Every subspace containing x is
/// then reached through exactly one tuple, and the remaining dimension of the
/// admissible space bounds each branch.
///
/// Throws PreconditionError for x = 0 or x outside the nullcone, BudgetError
/// when the node count exceeds limits.max_points.
LocalRank local_rank(const RestrictedLieAlgebra& g, const LieElement& x, const SearchLimits& limits = {});

struct SrkResult {
  std::size_t srk = 0;
  /// Points of V(g) \ {0} with r_x = r_min, in point order.
  std::vector<LieElement> o_rmin;
  std::uint64_t nullcone_size = 0;
  /// Witness for the smallest point of O_rmin.
  std::vector<LocalRank> witnesses;
  /// False for sampled runs.
  bool certified = true;
  std::string note;
};

/// srk = min over nonzero nullcone points of r_x, with the O_rmin point set.
/// V(g) = {0} yields srk 0 with an explanatory note.
SrkResult srk_brute(const RestrictedLieAlgebra& g, const SearchLimits& limits = {});

/// Minimum of r_x over randomly drawn nonzero nullcone points. Not certified:
/// the minimum over a sample can only overestimate srk.
SrkResult srk_sampled(const RestrictedLieAlgebra& g, std::size_t samples, std::uint64_t seed,
                      const SearchLimits& limits = {});

}  // namespace satrank
