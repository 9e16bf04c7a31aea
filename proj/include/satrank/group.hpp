#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace satrank {

/// Permutation of {0, ..., degree-1} stored as its image array.
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t degree);
/// (a * b)(i) = a(b(i)): apply b first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
std::size_t perm_order(const Perm& a);
bool perm_is_bijection(const Perm& a, std::size_t degree);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Finite group given by permutation generators. The element set is
/// materialized on first use (thread-safe) and sorted lexicographically by
/// image array, so element indices are deterministic.
class PermGroup {
 public:
  static constexpr std::size_t kDefaultElementBound = 20000;

  /// Throws PreconditionError if a generator is not a bijection of the right degree.
  PermGroup(std::size_t degree, std::vector<Perm> generators,
            std::size_t element_bound = kDefaultElementBound);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t element_bound() const { return bound_; }

  /// Throws BudgetError when the closure exceeds the element bound.
  const std::vector<Perm>& elements() const;
  std::size_t order() const { return elements().size(); }
  /// Index of g in elements(); throws std::out_of_range for non-members.
  std::size_t index_of(const Perm& g) const;
  bool contains(const Perm& g) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  std::size_t identity_index() const { return 0; }

 private:
  void materialize() const;

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::size_t bound_;

  struct Closure {
    std::once_flag once;
    std::vector<Perm> elements;
    std::unordered_map<Perm, std::size_t, PermHash> index;
  };
  // Shared so copies of a group reuse one materialization.
  std::shared_ptr<Closure> closure_;
};

/// Elementary abelian p-subgroup (Z/p)^rank.
struct ElemAbSubgroup {
  unsigned rank = 0;
  /// rank independent generators.
  std::vector<Perm> generators;
  /// All p^rank elements, sorted lexicographically.
  std::vector<Perm> elements;

  friend bool operator==(const ElemAbSubgroup&, const ElemAbSubgroup&) = default;
};

struct MaximalElemAbResult {
  /// Every maximal elementary abelian p-subgroup, sorted by (rank, elements).
  std::vector<ElemAbSubgroup> all;
  /// One per conjugacy class: the smallest member of the class in the order above.
  std::vector<ElemAbSubgroup> representatives;
  /// class_of[i] indexes representatives for all[i].
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> class_sizes;
  /// Non-empty when the result is empty because p does not divide |G|.
  std::string note;
};

/// Enumerates the maximal elementary abelian p-subgroups of g.
///
/// The non-identity elements of a maximal elementary abelian subgroup are
/// exactly a maximal clique in the commuting graph on order-p elements, so the
/// search extends commuting sets Bron-Kerbosch style, closing each partial set
/// under multiplication as it grows. Conjugacy classes are found by brute force
/// over all of g.
MaximalElemAbResult maximal_elemab(const PermGroup& g, unsigned p);

/// Minimal rank of a maximal elementary abelian p-subgroup. Throws
/// PreconditionError when g has no element of order p.
unsigned srk_group(const PermGroup& g, unsigned p);
/// Maximal rank of an elementary abelian p-subgroup.
unsigned quillen_dim(const PermGroup& g, unsigned p);
/// True iff all maximal elementary abelian p-subgroups share one rank.
bool is_equidimensional(const PermGroup& g, unsigned p);

/// Checks the ElemAbSubgroup axioms against its own element list: size p^rank,
/// every non-identity element of order p, pairwise commuting, closed, and
/// generators independent and generating.
bool verify_elemab(const ElemAbSubgroup& e, unsigned p);

/// Named groups used throughout the tests and the CLI.
namespace groups {
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2m acting on the vertices of an m-gon.
PermGroup dihedral(std::size_t m);
/// Quaternion group acting regularly on itself (degree 8).
PermGroup quaternion();
PermGroup symmetric(std::size_t n);
/// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
}  // namespace groups

}  // namespace satrank
