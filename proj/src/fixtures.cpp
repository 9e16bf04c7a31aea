#include "satrank/fixtures.hpp"

#include "satrank/errors.hpp"

namespace satrank {

namespace {

using io::Json;

constexpr const char* kCommand = "satrank oracle-crosscheck --out-dir tests/fixtures";

struct Named {
  const char* name;
  const char* kind;
  const char* builtin;
  unsigned p;
  unsigned k;
};

// n for commuting-pair instances is carried in `builtin` as "sl:2".
const Named kInstances[] = {
    {"group-d8-p2", "group", "d8", 2, 1},
    {"group-q8-p2", "group", "q8", 2, 1},
    {"group-s4-p2", "group", "s4", 2, 1},
    {"group-s4-p3", "group", "s4", 3, 1},
    {"group-s4xz2-p2", "group", "s4xz2", 2, 1},
    {"group-d12-p2", "group", "dihedral:6", 2, 1},
    {"group-d12-p3", "group", "dihedral:6", 3, 1},
    {"group-s5-p2", "group", "symmetric:5", 2, 1},
    {"lie-sl2-F2", "lie", "sl:2", 2, 1},
    {"lie-sl2-F3", "lie", "sl:2", 3, 1},
    {"lie-sl2-F5", "lie", "sl:2", 5, 1},
    {"lie-sl2-F9", "lie", "sl:2", 3, 2},
    {"lie-sl3-F2", "lie", "sl:3", 2, 1},
    {"lie-sl3-F3", "lie", "sl:3", 3, 1},
    {"lie-gl2-F3", "lie", "gl:2", 3, 1},
    {"lie-h3-F3", "lie", "heisenberg:1", 3, 1},
    {"lie-h3-F5", "lie", "heisenberg:1", 5, 1},
    {"lie-h3-F9", "lie", "heisenberg:1", 3, 2},
    {"lie-h5-F3", "lie", "heisenberg:2", 3, 1},
    {"lie-abelian2-F2", "lie", "abelian:2", 2, 1},
    {"pairs-sl2-F2", "pairs", "sl:2", 2, 1},
    {"pairs-sl2-F3", "pairs", "sl:2", 3, 1},
    {"pairs-sl2-F5", "pairs", "sl:2", 5, 1},
    {"pairs-sl2-F7", "pairs", "sl:2", 7, 1},
    {"pairs-sl2-F9", "pairs", "sl:2", 3, 2},
};

SearchBudget budget_from(const Json& j) {
  SearchBudget b;
  b.max_points = j.at("max_points").get<std::uint64_t>();
  b.max_depth = j.at("max_depth").get<std::size_t>();
  b.deterministic_seed = j.at("seed").get<std::uint64_t>();
  return b;
}

Json budget_to(const SearchBudget& b) {
  return Json{{"max_points", b.max_points}, {"max_depth", b.max_depth}, {"seed", b.deterministic_seed}};
}

Json oracle_result(const Json& instance, const SearchBudget& budget) {
  const std::string kind = instance.at("kind");
  if (kind == "group") {
    const auto in = io::group_from_json(instance.at("group"));
    const auto subs = oracle_maximal_elemab(in.group, in.p, budget);
    Json maximal = Json::array();
    unsigned srk = subs.empty() ? 0 : subs.front().rank;
    for (const auto& s : subs) {
      maximal.push_back(Json{{"rank", s.rank}, {"elements", s.elements}});
      srk = std::min(srk, s.rank);
    }
    return Json{{"srk", srk}, {"count", subs.size()}, {"maximal", maximal}};
  }
  if (kind == "lie") {
    const auto g = io::lie_from_json(instance.at("algebra"));
    const auto r = oracle_srk_lie(g, budget);
    return Json{{"srk", r.srk}, {"subalgebras", r.subalgebras}, {"max_rank", r.max_rank}};
  }
  if (kind == "pairs") {
    const Field f = Field::make(instance.at("p").get<std::uint32_t>(), instance.at("k").get<unsigned>());
    const auto r = oracle_commuting_pairs(instance.at("n").get<std::size_t>(), f, budget.max_points,
                                          budget.deterministic_seed);
    return Json{{"exhaustive", r.exhaustive}, {"count", r.count}};
  }
  throw InputError("unknown fixture kind \"" + kind + "\"");
}

// Structured-side check of an oracle result.
std::string structured_mismatch(const Json& instance, const Json& result) {
  const std::string kind = instance.at("kind");
  if (kind == "group") {
    const auto in = io::group_from_json(instance.at("group"));
    const auto r = maximal_elemab(in.group, in.p);
    std::vector<std::vector<Perm>> mine, theirs;
    for (const auto& s : r.all) mine.push_back(s.elements);
    for (const auto& s : result.at("maximal")) theirs.push_back(s.at("elements").get<std::vector<Perm>>());
    if (mine != theirs) return "maximal elementary abelian subgroups differ from the commuting-extension search";
    if (srk_group(in.group, in.p) != result.at("srk").get<unsigned>()) return "srk_group differs";
    return "";
  }
  if (kind == "lie") {
    const auto g = io::lie_from_json(instance.at("algebra"));
    const auto r = srk_brute(g);
    if (r.srk != result.at("srk").get<std::size_t>())
      return "srk_brute gives " + std::to_string(r.srk) + ", oracle " + result.at("srk").dump();
    return "";
  }
  // Nilpotent pairs (x, y) in sl_2(F_q): x = 0 pairs with all q^2 nilpotents,
  // each of the q^2 - 1 nonzero x with the q points of its line.
  const Field f = Field::make(instance.at("p").get<std::uint32_t>(), instance.at("k").get<unsigned>());
  const std::uint64_t q = f.order();
  const std::uint64_t expect = q * q + (q * q - 1) * q;
  if (result.at("count").get<std::uint64_t>() != expect)
    return "pair count " + result.at("count").dump() + " != q^2 + (q^2 - 1) q = " + std::to_string(expect);
  return "";
}

const char* oracle_name(const std::string& kind) {
  if (kind == "group") return "oracle_maximal_elemab";
  if (kind == "lie") return "oracle_srk_lie";
  return "oracle_commuting_pairs";
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& n : kInstances) out.push_back(n.name);
  return out;
}

FixtureOutcome run_fixture(const std::string& name, const SearchBudget& budget) {
  for (const auto& n : kInstances) {
    if (name != n.name) continue;
    const std::string kind = n.kind;
    Json instance{{"name", n.name}, {"kind", kind}, {"builtin", n.builtin}};
    if (kind == "group") {
      const auto in = io::builtin_group(n.builtin, n.p);
      instance["group"] = io::group_to_json(in.group, in.p);
    } else if (kind == "lie") {
      instance["algebra"] = io::lie_to_json(io::builtin_lie(n.builtin, Field::make(n.p, n.k)));
    } else {
      instance["n"] = 2;
      instance["p"] = n.p;
      instance["k"] = n.k;
    }
    FixtureOutcome out;
    const Json result = oracle_result(instance, budget);
    out.mismatch = structured_mismatch(instance, result);
    out.fixture = Json{{"instance", instance},
                       {"oracle", oracle_name(kind)},
                       {"budget", budget_to(budget)},
                       {"result", result},
                       {"command", kCommand}};
    return out;
  }
  throw InputError("unknown fixture \"" + name + "\"");
}

std::string verify_fixture(const Json& fixture) {
  const Json& instance = fixture.at("instance");
  const Json again = oracle_result(instance, budget_from(fixture.at("budget")));
  if (again != fixture.at("result")) return "oracle output no longer matches the stored result";
  return structured_mismatch(instance, again);
}

}  // namespace satrank
