#pragma once

// Brute-force reference engines. They reuse field and matrix arithmetic but
// none of the search code in group.cpp or lie_search.cpp.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "satrank/field.hpp"
#include "satrank/group.hpp"
#include "satrank/lie.hpp"
#include "satrank/matrix.hpp"

namespace satrank {

struct SearchBudget {
  /// Cap on enumerated points, subgroups or subspaces, depending on the oracle.
  std::uint64_t max_points = 1'000'000;
  /// Cap on the dimension or rank explored.
  std::size_t max_depth = 64;
  std::uint64_t deterministic_seed = 0;
};

/// Every maximal elementary abelian p-subgroup of g, found by enumerating the
/// whole subgroup lattice as iterated joins with cyclic subgroups. Sorted by
/// (rank, elements). Throws PreconditionError if |G| > 5000 and BudgetError if
/// the lattice has more than budget.max_points members.
std::vector<ElemAbSubgroup> oracle_maximal_elemab(const PermGroup& g, unsigned p, const SearchBudget& budget = {});

struct OracleSrk {
  std::size_t srk = 0;
  /// Number of nonzero elementary subalgebras met during the sweep.
  std::uint64_t subalgebras = 0;
  std::size_t max_rank = 0;
};

/// srk by listing every elementary subalgebra level by level (each level
/// extends the previous one by a single commuting nullcone point) and keeping,
/// for each nonzero nullcone point, the largest dimension that contains it.
/// Requires q^dim <= 10^6 and at most budget.max_points subalgebras.
OracleSrk oracle_srk_lie(const RestrictedLieAlgebra& g, const SearchBudget& budget = {});

struct CommutingPairs {
  bool exhaustive = false;
  /// Exhaustive mode: number of ordered pairs (x, y) of p-nilpotent matrices in
  /// sl_n with [x, y] = 0. Sampled mode: number of samples returned.
  std::uint64_t count = 0;
  std::vector<std::pair<Mat, Mat>> samples;
};

/// n = 2: exhaustive count over sl_2(F_q), capped by `cap` matrices scanned.
/// n >= 3: `cap` seeded samples, each checked for nilpotency and commutation.
CommutingPairs oracle_commuting_pairs(std::size_t n, const Field& field, std::uint64_t cap,
                                      std::uint64_t seed = 0);

}  // namespace satrank
