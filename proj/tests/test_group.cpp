#include <algorithm>
#include <set>

#include "doctest.h"
#include "satrank/errors.hpp"
#include "satrank/group.hpp"
#include "support/gen.hpp"

using namespace satrank;

namespace {

bool commutes(const Perm& a, const Perm& b) { return perm_compose(a, b) == perm_compose(b, a); }

Perm conjugate(const Perm& g, const Perm& x) { return perm_compose(perm_compose(g, x), perm_inverse(g)); }

std::set<Perm> as_set(const ElemAbSubgroup& e) { return {e.elements.begin(), e.elements.end()}; }

// Every structural promise of maximal_elemab on one group.
void check_result_axioms(const PermGroup& g, unsigned p) {
  const auto res = maximal_elemab(g, p);
  REQUIRE_FALSE(res.all.empty());
  std::vector<Perm> order_p;
  for (const auto& x : g.elements())
    if (perm_order(x) == p) order_p.push_back(x);
  for (const auto& e : res.all) {
    CHECK(verify_elemab(e, p));
    const auto members = as_set(e);
    // Maximality: no order-p element outside e commutes with all of e.
    for (const auto& x : order_p) {
      if (members.count(x)) continue;
      const bool centralizes = std::all_of(e.generators.begin(), e.generators.end(),
                                           [&](const Perm& y) { return commutes(x, y); });
      CHECK_FALSE(centralizes);
    }
  }
  CHECK(res.class_of.size() == res.all.size());
  std::size_t total = 0;
  for (auto s : res.class_sizes) total += s;
  CHECK(total == res.all.size());
  CHECK(srk_group(g, p) <= quillen_dim(g, p));
}

}  // namespace

TEST_CASE("group_elements examples") {
  CHECK(PermGroup(3, {}).order() == 1);
  CHECK(groups::dihedral(4).order() == 8);
  CHECK(PermGroup(3, {{1, 2, 0}}).order() == 3);
  CHECK(groups::symmetric(4).order() == 24);
  CHECK(groups::quaternion().order() == 8);
  const PermGroup d8 = groups::dihedral(4);
  const auto& els = d8.elements();
  CHECK(els.front() == perm_identity(4));
  CHECK(std::is_sorted(els.begin(), els.end()));
}

TEST_CASE("closure respects the element bound") {
  CHECK_THROWS_AS(PermGroup(6, {{1, 2, 3, 4, 5, 0}, {1, 0, 2, 3, 4, 5}}, 100).order(), BudgetError);
  CHECK_THROWS_AS(PermGroup(3, {{0, 0, 1}}), PreconditionError);
}

TEST_CASE("D8 has two classes of maximal elementary abelian 2-subgroups, both rank 2") {
  const PermGroup d8 = groups::dihedral(4);
  const auto res = maximal_elemab(d8, 2);
  CHECK(res.all.size() == 2);
  REQUIRE(res.representatives.size() == 2);
  for (const auto& e : res.representatives) CHECK(e.rank == 2);
  // Both Klein four-groups contain the central rotation a^2.
  const Perm a2{2, 3, 0, 1};
  for (const auto& e : res.all) CHECK(as_set(e).count(a2) == 1);
  CHECK(srk_group(d8, 2) == 2);
  CHECK(quillen_dim(d8, 2) == 2);
  CHECK(is_equidimensional(d8, 2));
  check_result_axioms(d8, 2);
}

TEST_CASE("cyclic, quaternion and small products") {
  for (unsigned p : {2u, 3u, 5u}) {
    const auto res = maximal_elemab(groups::cyclic(p), p);
    CHECK(res.all.size() == 1);
    CHECK(res.all[0].rank == 1);
    CHECK(is_equidimensional(groups::cyclic(p), p));
    const auto zp2 = groups::direct_product(groups::cyclic(p), groups::cyclic(p));
    CHECK(srk_group(zp2, p) == 2);
    CHECK(maximal_elemab(zp2, p).all.size() == 1);
  }
  const auto q8 = maximal_elemab(groups::quaternion(), 2);
  REQUIRE(q8.all.size() == 1);
  CHECK(q8.all[0].rank == 1);
  CHECK(srk_group(groups::quaternion(), 2) == 1);
  CHECK(quillen_dim(groups::cyclic(4), 2) == 1);
}

TEST_CASE("S4 at p = 2 and p = 3") {
  const PermGroup s4 = groups::symmetric(4);
  CHECK(quillen_dim(s4, 2) == 2);
  CHECK(srk_group(s4, 2) == 2);
  check_result_axioms(s4, 2);
  CHECK(srk_group(s4, 3) == 1);
  check_result_axioms(s4, 3);
}

TEST_CASE("no p-torsion is a precondition error") {
  const auto res = maximal_elemab(groups::cyclic(4), 3);
  CHECK(res.all.empty());
  CHECK_FALSE(res.note.empty());
  CHECK_THROWS_AS(srk_group(groups::cyclic(4), 3), PreconditionError);
  CHECK_THROWS_AS(quillen_dim(groups::cyclic(4), 3), PreconditionError);
}

TEST_CASE("conjugating a maximal elementary abelian subgroup gives another of the same rank") {
  testing::Gen gen(2024);
  for (const PermGroup& g : {groups::dihedral(4), groups::symmetric(4), groups::dihedral(6)}) {
    const auto res = maximal_elemab(g, 2);
    std::set<std::set<Perm>> found;
    for (const auto& e : res.all) found.insert(as_set(e));
    for (int t = 0; t < 20; ++t) {
      const Perm& x = g.elements()[gen.uniform(0, g.order() - 1)];
      const auto& e = res.all[gen.uniform(0, res.all.size() - 1)];
      std::set<Perm> image;
      for (const auto& y : e.elements) image.insert(conjugate(x, y));
      CHECK(found.count(image) == 1);
    }
    // Representatives are pairwise non-conjugate.
    for (std::size_t i = 0; i < res.representatives.size(); ++i)
      for (std::size_t j = i + 1; j < res.representatives.size(); ++j)
        for (const auto& x : g.elements()) {
          std::set<Perm> image;
          for (const auto& y : res.representatives[i].elements) image.insert(conjugate(x, y));
          CHECK(image != as_set(res.representatives[j]));
        }
  }
}
