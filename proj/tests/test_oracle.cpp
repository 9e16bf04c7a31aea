#include <filesystem>
#include <set>

#include "doctest.h"
#include "satrank/errors.hpp"
#include "satrank/fixtures.hpp"
#include "satrank/frobenius.hpp"
#include "satrank/oracle.hpp"

using namespace satrank;

namespace {

std::vector<unsigned> ranks_of(const std::vector<ElemAbSubgroup>& subs) {
  std::vector<unsigned> out;
  for (const auto& s : subs) out.push_back(s.rank);
  return out;
}

}  // namespace

TEST_CASE("subgroup-lattice oracle matches the commuting-extension search") {
  struct Case {
    const char* name;
    PermGroup g;
    unsigned p;
    std::vector<unsigned> ranks;
  };
  const std::vector<Case> cases{
      {"D8", groups::dihedral(4), 2, {2, 2}},
      {"Q8", groups::quaternion(), 2, {1}},
      {"S4", groups::symmetric(4), 2, {2, 2, 2, 2}},
      {"S4", groups::symmetric(4), 3, {1, 1, 1, 1}},
      {"S4xZ2", groups::direct_product(groups::symmetric(4), groups::cyclic(2)), 2, {3, 3, 3, 3}},
      {"D12", groups::dihedral(6), 2, {2, 2, 2}},
      {"Z3xZ3", groups::direct_product(groups::cyclic(3), groups::cyclic(3)), 3, {2}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    CAPTURE(c.p);
    const auto oracle = oracle_maximal_elemab(c.g, c.p);
    CHECK(ranks_of(oracle) == c.ranks);
    CHECK(oracle == maximal_elemab(c.g, c.p).all);
    for (const auto& s : oracle) CHECK(verify_elemab(s, c.p));
  }
}

TEST_CASE("oracle_maximal_elemab special cases") {
  // Q8: the centre {1, -1} only.
  const PermGroup q8 = groups::quaternion();
  const auto q = oracle_maximal_elemab(q8, 2);
  REQUIRE(q.size() == 1);
  CHECK(q[0].elements.size() == 2);
  CHECK(q[0].elements[0] == perm_identity(8));
  // Z3 x Z3 is its own unique maximal elementary abelian subgroup.
  const PermGroup z = groups::direct_product(groups::cyclic(3), groups::cyclic(3));
  const auto zz = oracle_maximal_elemab(z, 3);
  REQUIRE(zz.size() == 1);
  CHECK(zz[0].elements == z.elements());

  CHECK_THROWS_AS(oracle_maximal_elemab(groups::symmetric(7), 2), PreconditionError);
  SearchBudget tiny;
  tiny.max_points = 3;
  CHECK_THROWS_AS(oracle_maximal_elemab(groups::symmetric(4), 2, tiny), BudgetError);
}

TEST_CASE("flag-extension oracle matches structured srk") {
  struct Case {
    const char* name;
    RestrictedLieAlgebra g;
    std::size_t srk;
    std::uint64_t subalgebras;
  };
  const Field f2 = Field::make(2), f3 = Field::make(3), f5 = Field::make(5), f9 = Field::make(3, 2);
  const std::vector<Case> cases{
      {"sl2/F2", algebras::sl(2, f2), 1, 3},         {"sl2/F3", algebras::sl(2, f3), 1, 4},
      {"sl2/F5", algebras::sl(2, f5), 1, 6},         {"sl2/F9", algebras::sl(2, f9), 1, 10},
      {"sl3/F2", algebras::sl(3, f2), 2, 35},        {"sl3/F3", algebras::sl(3, f3), 2, 494},
      {"h3/F3", algebras::heisenberg(1, f3), 2, 17}, {"h3/F5", algebras::heisenberg(1, f5), 2, 37},
      {"h3/F9", algebras::heisenberg(1, f9), 2, 101}, {"h5/F3", algebras::heisenberg(2, f3), 3, 561},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto r = oracle_srk_lie(c.g);
    CHECK(r.srk == c.srk);
    CHECK(r.subalgebras == c.subalgebras);
    CHECK(srk_brute(c.g).srk == c.srk);
  }
  CHECK(oracle_srk_lie(algebras::abelian(2, f2)).srk == 2);
  CHECK_THROWS_AS(oracle_srk_lie(algebras::sl(4, f3)), PreconditionError);
  SearchBudget tiny;
  tiny.max_points = 10;
  CHECK_THROWS_AS(oracle_srk_lie(algebras::sl(3, f3), tiny), BudgetError);
}

TEST_CASE("commuting nilpotent pairs in sl_2 are counted exhaustively") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const Field f = Field::make(p, k);
    const std::uint64_t q = f.order();
    const auto r = oracle_commuting_pairs(2, f, 1'000'000);
    CHECK(r.exhaustive);
    CHECK(r.count == q * q + (q * q - 1) * q);
  }
  CHECK(oracle_commuting_pairs(2, Field::make(3), 1'000'000).count == 33);
  CHECK_THROWS_AS(oracle_commuting_pairs(2, Field::make(5), 10), BudgetError);
}

TEST_CASE("sampled commuting pairs are valid and deterministic") {
  const Field f = Field::make(5);
  const auto a = oracle_commuting_pairs(3, f, 50, 7);
  const auto b = oracle_commuting_pairs(3, f, 50, 7);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.count == 50);
  REQUIRE(a.samples.size() == 50);
  CHECK(a.samples == b.samples);
  for (const auto& [x, y] : a.samples) CHECK(is_nil_pair(f, NilPair{x, y}));
}

TEST_CASE("committed fixtures still agree with the oracles and the structured code") {
  const std::filesystem::path dir = SATRANK_FIXTURE_DIR;
  std::set<std::string> seen;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const auto fixture = io::read_file(entry.path().string());
    CHECK(fixture.at("command") == "satrank oracle-crosscheck --out-dir tests/fixtures");
    CHECK(verify_fixture(fixture) == "");
    seen.insert(fixture.at("instance").at("name").get<std::string>());
  }
  const auto names = fixture_names();
  CHECK(seen == std::set<std::string>(names.begin(), names.end()));
}

TEST_CASE("a tampered fixture is reported") {
  auto fx = run_fixture("lie-h3-F3").fixture;
  CHECK(verify_fixture(fx) == "");
  fx["result"]["srk"] = 3;
  CHECK(verify_fixture(fx) != "");
  CHECK_THROWS_AS(run_fixture("no-such-instance"), InputError);
}
