#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satrank/field.hpp"
#include "satrank/lie.hpp"
#include "satrank/matrix.hpp"

namespace satrank {

/// Weakly decreasing sequence of positive parts.
class Partition {
 public:
  /// Throws PreconditionError unless parts is nonempty, positive and weakly decreasing.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  /// Number of parts >= 2.
  std::size_t nontrivial_parts() const;
  /// "(3,2,1)".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// All partitions of n, reverse lexicographic: (n) first, (1^n) last.
std::vector<Partition> all_partitions(unsigned n);

/// mu ⊴ lambda: every partial sum of mu is at most the matching one of lambda.
/// Throws PreconditionError if the two sizes differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// Basis position of e^m v_i in V = ⊕ blocks: offset_i + (lambda_i - 1 - m).
/// Within each block the order is reversed so that e is upper triangular.
std::size_t block_position(const Partition& lambda, std::size_t block, unsigned m);

/// diag(N_1, ..., N_t) with upper triangular nilpotent Jordan blocks.
Mat jordan_matrix(const Partition& lambda, const Field& field);

/// (p, ..., p, r) for n = qp + r: the largest partition with all parts <= p,
/// which labels the dense orbit of the restricted nullcone of sl_n.
Partition nullcone_top_partition(unsigned n, unsigned p);

/// Centralizer basis symbol xi_i^{j,s}: v_i -> e^s v_j, other blocks -> 0.
/// Block indices are 0-based here.
struct XiElement {
  std::size_t i = 0;
  std::size_t j = 0;
  unsigned s = 0;
  friend auto operator<=>(const XiElement&, const XiElement&) = default;
};

/// max(lambda_j - lambda_i, 0) <= s < lambda_j and both blocks exist.
bool xi_in_bounds(const Partition& lambda, const XiElement& x);
/// "xi_1^{2,0}" with 1-based block indices.
std::string xi_label(const XiElement& x);

/// Sparse linear combination of xi symbols; zero coefficients are never stored.
struct XiCombination {
  std::map<XiElement, FieldElem> terms;

  static XiCombination single(const XiElement& x, FieldElem c) {
    XiCombination out;
    if (c.v != 0) out.terms.emplace(x, c);
    return out;
  }
  bool is_zero() const { return terms.empty(); }
  void add(const Field& f, const XiElement& x, FieldElem c);
  void add(const Field& f, const XiCombination& other, FieldElem c);
  friend bool operator==(const XiCombination&, const XiCombination&) = default;
};

/// All in-bound symbols ordered by (i, j, s); there are sum_{i,j} min(lambda_i, lambda_j).
std::vector<XiElement> xi_basis(const Partition& lambda);

/// a · b (apply b first): delta_{q,i} xi_p^{j,s+r}; out-of-bound results are zero.
/// Throws PreconditionError if a or b is out of bounds for lambda.
XiCombination xi_compose(const Partition& lambda, const Field& f, const XiElement& a, const XiElement& b);
/// [a, b] = a·b - b·a.
XiCombination xi_bracket(const Partition& lambda, const Field& f, const XiElement& a, const XiElement& b);
/// Bilinear extension of xi_compose.
XiCombination xi_mul(const Partition& lambda, const Field& f, const XiCombination& a, const XiCombination& b);

/// Endomorphism matrix in the basis fixed by block_position.
Mat xi_to_matrix(const Partition& lambda, const XiCombination& x, const Field& f);
Mat xi_to_matrix(const Partition& lambda, const XiElement& x, const Field& f);

struct TracelessCentralizer {
  std::vector<XiCombination> basis;
  /// True when p divides every lambda_i: the trace functional vanishes on the
  /// whole centralizer, which is then returned in full.
  bool degenerate = false;
};

/// Basis of z(x_lambda) ∩ sl_n: the symbols with i != j or s > 0, then for each
/// block i other than the pivot xi_i^{i,0} - (lambda_i / lambda_pivot) xi_pivot^{pivot,0},
/// where the pivot is the last block with p ∤ lambda_pivot.
TracelessCentralizer centralizer_sl_basis(const Partition& lambda, const Field& field);

/// An elementary subalgebra of sl_n inside the centralizer of x_lambda, given as
/// matrices and, for the xi-based constructions, as xi combinations.
struct OrbitWitness {
  Partition lambda;
  std::string construction;
  std::vector<XiCombination> xi;
  std::vector<Mat> matrices;

  std::size_t dim() const { return matrices.size(); }
};

/// span{e, ..., e^{n-1}} for lambda = (n).
OrbitWitness regular_witness(unsigned n, const Field& field);

/// Elementary subalgebras of maximal dimension containing x_(n-1,1): for n = 3,
/// p = 2 the two with xi* in {xi_1^{2,0}, xi_2^{1,1}}; otherwise one per
/// (a:b) in P^1(F_q), ordered (0:1), then (1:b) by field index of b.
/// Throws PreconditionError unless n >= 3 and p >= n - 1.
std::vector<OrbitWitness> subregular_witnesses(unsigned n, unsigned p, const Field& field);

/// The three-case construction for lambda ⊴ (n-2,2): all parts >= 2, exactly
/// one part 1, or several parts 1. Throws PreconditionError for lambda not
/// ⊴ (n-2,2), for p < max(2, n-2), and for lambda = (1^n), where the
/// several-ones recipe degenerates.
OrbitWitness lower_orbit_case_witness(const Partition& lambda, unsigned p, const Field& field);

/// Span of E_{rc} for r in R, c in C with |R| = ceil(n/2), |C| = floor(n/2),
/// R ∩ C empty; dimension floor(n^2/4). For lambda = (2,1^{n-2}) the split puts
/// row 0 in R and column 1 in C so the span contains x_lambda = E_{01}.
/// Throws PreconditionError for other partitions or n < 2.
OrbitWitness nilradical_witness(const Partition& lambda, const Field& field);

/// Largest available witness for lambda ⊴ (n-2,2): the nilradical when it is
/// strictly larger than the case construction, otherwise the case construction.
OrbitWitness lower_orbit_witness(const Partition& lambda, unsigned p, const Field& field);

struct WitnessCheck {
  bool independent = false;
  bool commuting = false;
  bool p_nilpotent = false;
  bool traceless = false;
  bool centralizes = false;
  bool contains_x = false;
  /// is_elementary against the matrix model of sl_n, when one is supplied.
  std::optional<bool> elementary_in_sl;
  bool ok() const {
    return independent && commuting && p_nilpotent && traceless && centralizes && contains_x &&
           elementary_in_sl.value_or(true);
  }
};

/// Matrix-level validation of a witness against x_lambda; pass sl_n over the
/// same field to also run lie_core's is_elementary on the coordinates.
WitnessCheck check_witness(const OrbitWitness& w, const Field& field,
                           const RestrictedLieAlgebra* sl_n = nullptr);

/// Coordinates of the witness in a matrix-model algebra (normally sl_n).
ElementarySubalgebra to_subalgebra(const RestrictedLieAlgebra& g, const OrbitWitness& w);

enum class OrbitKind { regular, subregular, lower };
std::string to_string(OrbitKind k);

struct OrbitRow {
  Partition partition;
  OrbitKind kind;
  /// Certified lower bound on r_{x_lambda} from a validated witness.
  std::size_t witness_rank = 0;
  /// True when the local rank is known exactly (regular and subregular orbits).
  bool exact = false;
  std::vector<std::size_t> witness_dims;
};

/// One row per nilpotent orbit in the restricted nullcone (partitions with all
/// parts <= p), largest first. Every row's witnesses are validated first;
/// rows whose constructions fail validation fall back to the best validated
/// elementary subalgebra found, with witness_rank 1 as the last resort.
std::vector<OrbitRow> orbit_table(unsigned n, unsigned p, const Field& field);

enum class SrkProvenance { closed_form, strict_lower_bound, derived_lower_bound };
std::string to_string(SrkProvenance p);

struct SlnSrk {
  std::size_t rank = 0;
  SrkProvenance provenance = SrkProvenance::closed_form;
  /// p = n - 2: srk exceeds the semisimple rank n - 1.
  bool strict_inequality = false;
  Partition top;
  std::string note;
};

/// srk(sl_n): n - 1 for p >= n - 1; a validated lower bound from the (n-2,2)
/// witness for p = n - 2; below that, a lower bound from the witness at the
/// top nullcone partition. Throws PreconditionError for n < 2.
SlnSrk srk_sln(unsigned n, unsigned p);

/// {(n), (n-1,1)}, computed from the orbit table as the orbits whose local
/// rank equals n - 1 after checking every other orbit has a witness of
/// dimension > n - 1. Throws PreconditionError unless n >= 3 and p >= n.
std::vector<Partition> o_rmin_sln(unsigned n, unsigned p);

}  // namespace satrank
