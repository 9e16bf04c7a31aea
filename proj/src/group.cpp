#include "satrank/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "satrank/errors.hpp"
#include "satrank/field.hpp"

namespace satrank {

Perm perm_identity(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

std::size_t perm_order(const Perm& a) {
  // lcm of cycle lengths
  std::vector<bool> seen(a.size(), false);
  std::size_t order = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

bool perm_is_bijection(const Perm& a, std::size_t degree) {
  if (a.size() != degree) return false;
  std::vector<bool> hit(degree, false);
  for (auto v : a) {
    if (v >= degree || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t element_bound)
    : degree_(degree), generators_(std::move(generators)), bound_(element_bound),
      closure_(std::make_shared<Closure>()) {
  for (const auto& g : generators_)
    if (!perm_is_bijection(g, degree_))
      throw PreconditionError("generator is not a permutation of degree " + std::to_string(degree_));
}

void PermGroup::materialize() const {
  std::call_once(closure_->once, [this] {
    std::unordered_map<Perm, std::size_t, PermHash> seen;
    std::vector<Perm> found{perm_identity(degree_)};
    seen.emplace(found.front(), 0);
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (const auto& s : generators_) {
        Perm h = perm_compose(s, found[head]);
        if (seen.contains(h)) continue;
        if (found.size() >= bound_)
          throw BudgetError("group order exceeds element bound " + std::to_string(bound_));
        seen.emplace(h, found.size());
        found.push_back(std::move(h));
      }
    }
    std::sort(found.begin(), found.end());
    closure_->index.clear();
    for (std::size_t i = 0; i < found.size(); ++i) closure_->index.emplace(found[i], i);
    closure_->elements = std::move(found);
  });
}

const std::vector<Perm>& PermGroup::elements() const {
  materialize();
  return closure_->elements;
}

std::size_t PermGroup::index_of(const Perm& g) const {
  materialize();
  auto it = closure_->index.find(g);
  if (it == closure_->index.end()) throw std::out_of_range("permutation not in group");
  return it->second;
}

bool PermGroup::contains(const Perm& g) const {
  materialize();
  return closure_->index.contains(g);
}

std::size_t PermGroup::mul(std::size_t a, std::size_t b) const {
  const auto& el = elements();
  return index_of(perm_compose(el[a], el[b]));
}

std::size_t PermGroup::inverse(std::size_t a) const { return index_of(perm_inverse(elements()[a])); }

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= (1ull << (i % 64)); }
  void reset(std::size_t i) { words_[i / 64] &= ~(1ull << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1ull; }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        fn(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct CommutingGraph {
  std::vector<std::size_t> vertex_to_group;  // order-p elements as group indices
  std::vector<std::size_t> group_to_vertex;  // npos for elements not of order p
  std::vector<Bits> adjacency;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

CommutingGraph build_graph(const PermGroup& g, unsigned p) {
  const auto& el = g.elements();
  CommutingGraph cg;
  cg.group_to_vertex.assign(el.size(), kNone);
  for (std::size_t i = 0; i < el.size(); ++i)
    if (perm_order(el[i]) == p) {
      cg.group_to_vertex[i] = cg.vertex_to_group.size();
      cg.vertex_to_group.push_back(i);
    }
  const std::size_t m = cg.vertex_to_group.size();
  cg.adjacency.assign(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Perm& x = el[cg.vertex_to_group[a]];
      const Perm& y = el[cg.vertex_to_group[b]];
      if (perm_compose(x, y) == perm_compose(y, x)) {
        cg.adjacency[a].set(b);
        cg.adjacency[b].set(a);
      }
    }
  return cg;
}

class MaximalCliqueSearch {
 public:
  MaximalCliqueSearch(const PermGroup& g, unsigned p, const CommutingGraph& cg) : g_(g), p_(p), cg_(cg) {}

  std::vector<std::vector<std::size_t>> run() {
    const std::size_t m = cg_.vertex_to_group.size();
    Bits all(m);
    for (std::size_t v = 0; v < m; ++v) all.set(v);
    extend({g_.identity_index()}, all, Bits(m));
    return std::move(found_);
  }

 private:
  // subgroup: group indices of the current elementary abelian subgroup (identity included).
  void extend(const std::vector<std::size_t>& subgroup, Bits candidates, Bits excluded) {
    if (!candidates.any()) {
      if (!excluded.any()) {
        auto s = subgroup;
        std::sort(s.begin(), s.end());
        found_.push_back(std::move(s));
      }
      return;
    }
    // Pivot maximizing |candidates ∩ N(u)|.
    std::size_t pivot = kNone, best = 0;
    (candidates | excluded).for_each([&](std::size_t u) {
      const std::size_t c = (candidates & cg_.adjacency[u]).count();
      if (pivot == kNone || c > best) {
        pivot = u;
        best = c;
      }
    });
    std::vector<std::size_t> branch;
    candidates.minus(cg_.adjacency[pivot]).for_each([&](std::size_t v) { branch.push_back(v); });

    for (std::size_t v : branch) {
      // Close subgroup ∪ {v}: the new elements are h * v^k, 1 <= k < p.
      std::vector<std::size_t> grown = subgroup;
      std::vector<std::size_t> added;
      const std::size_t gv = cg_.vertex_to_group[v];
      for (std::size_t h : subgroup) {
        std::size_t cur = h;
        for (unsigned k = 1; k < p_; ++k) {
          cur = g_.mul(cur, gv);
          grown.push_back(cur);
          added.push_back(cg_.group_to_vertex[cur]);
        }
      }
      Bits next_candidates = candidates & cg_.adjacency[v];
      Bits next_excluded = excluded & cg_.adjacency[v];
      bool covered = false;
      for (std::size_t a : added) {
        if (a == kNone) throw std::logic_error("closure produced an element of order != p");
        if (excluded.test(a)) covered = true;
        next_candidates.reset(a);
      }
      // Every maximal extension contains the closure; if part of it was already
      // explored, so was every extension through this branch.
      if (!covered) extend(grown, next_candidates, next_excluded);
      candidates.reset(v);
      excluded.set(v);
    }
  }

  const PermGroup& g_;
  unsigned p_;
  const CommutingGraph& cg_;
  std::vector<std::vector<std::size_t>> found_;
};

ElemAbSubgroup make_subgroup(const PermGroup& g, unsigned p, const std::vector<std::size_t>& sorted_idx) {
  const auto& el = g.elements();
  ElemAbSubgroup e;
  for (auto i : sorted_idx) e.elements.push_back(el[i]);
  // Greedy independent generators in lexicographic order.
  std::set<std::size_t> span{g.identity_index()};
  for (auto i : sorted_idx) {
    if (span.contains(i)) continue;
    e.generators.push_back(el[i]);
    std::set<std::size_t> grown = span;
    for (auto h : span) {
      std::size_t cur = h;
      for (unsigned k = 1; k < p; ++k) {
        cur = g.mul(cur, i);
        grown.insert(cur);
      }
    }
    span = std::move(grown);
  }
  e.rank = static_cast<unsigned>(e.generators.size());
  return e;
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
}

}  // namespace

MaximalElemAbResult maximal_elemab(const PermGroup& g, unsigned p) {
  require_prime(p);
  MaximalElemAbResult result;
  const CommutingGraph cg = build_graph(g, p);
  if (cg.vertex_to_group.empty()) {
    result.note = "p = " + std::to_string(p) + " does not divide |G| = " + std::to_string(g.order());
    return result;
  }

  auto cliques = MaximalCliqueSearch(g, p, cg).run();
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());

  // Canonical class key: the smallest conjugate.
  const std::size_t order = g.order();
  std::vector<std::size_t> inverses(order);
  for (std::size_t x = 0; x < order; ++x) inverses[x] = g.inverse(x);
  std::vector<std::vector<std::size_t>> keys;
  for (const auto& s : cliques) {
    std::vector<std::size_t> best = s;
    for (std::size_t x = 0; x < order; ++x) {
      std::vector<std::size_t> conj;
      conj.reserve(s.size());
      for (auto h : s) conj.push_back(g.mul(g.mul(x, h), inverses[x]));
      std::sort(conj.begin(), conj.end());
      if (conj < best) best = std::move(conj);
    }
    keys.push_back(std::move(best));
  }

  std::vector<std::vector<std::size_t>> rep_keys;
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    result.all.push_back(make_subgroup(g, p, cliques[i]));
    auto it = std::find(rep_keys.begin(), rep_keys.end(), keys[i]);
    if (it == rep_keys.end()) {
      rep_keys.push_back(keys[i]);
      result.class_sizes.push_back(0);
      it = rep_keys.end() - 1;
    }
    const auto cls = static_cast<std::size_t>(it - rep_keys.begin());
    result.class_of.push_back(cls);
    ++result.class_sizes[cls];
  }
  for (const auto& k : rep_keys) result.representatives.push_back(make_subgroup(g, p, k));
  return result;
}

unsigned srk_group(const PermGroup& g, unsigned p) {
  const auto r = maximal_elemab(g, p);
  if (r.all.empty()) throw PreconditionError("srk undefined: " + r.note);
  unsigned best = r.all.front().rank;
  for (const auto& e : r.all) best = std::min(best, e.rank);
  return best;
}

unsigned quillen_dim(const PermGroup& g, unsigned p) {
  const auto r = maximal_elemab(g, p);
  if (r.all.empty()) throw PreconditionError("srk undefined: " + r.note);
  unsigned best = 0;
  for (const auto& e : r.all) best = std::max(best, e.rank);
  return best;
}

bool is_equidimensional(const PermGroup& g, unsigned p) { return srk_group(g, p) == quillen_dim(g, p); }

bool verify_elemab(const ElemAbSubgroup& e, unsigned p) {
  std::size_t expected = 1;
  for (unsigned i = 0; i < e.rank; ++i) expected *= p;
  if (e.elements.size() != expected || e.generators.size() != e.rank) return false;
  if (!std::is_sorted(e.elements.begin(), e.elements.end())) return false;
  if (e.elements.empty()) return false;
  const std::size_t degree = e.elements.front().size();
  const Perm id = perm_identity(degree);
  std::set<Perm> members(e.elements.begin(), e.elements.end());
  if (members.size() != e.elements.size() || !members.contains(id)) return false;
  for (const auto& x : e.elements) {
    if (x != id && perm_order(x) != p) return false;
    for (const auto& y : e.elements) {
      const Perm xy = perm_compose(x, y);
      if (xy != perm_compose(y, x) || !members.contains(xy)) return false;
    }
  }
  // Generators must generate everything; with rank of them that forces independence.
  std::set<Perm> span{id};
  for (const auto& gen : e.generators) {
    if (!members.contains(gen)) return false;
    std::set<Perm> grown = span;
    for (const auto& h : span) {
      Perm cur = h;
      for (unsigned k = 1; k < p; ++k) {
        cur = perm_compose(cur, gen);
        grown.insert(cur);
      }
    }
    span = std::move(grown);
  }
  return span == members;
}

namespace groups {

PermGroup cyclic(std::size_t n) {
  Perm r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>((i + 1) % n);
  return PermGroup(n, {r});
}

PermGroup dihedral(std::size_t m) {
  Perm r(m), s(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i] = static_cast<std::uint32_t>((i + 1) % m);
    s[i] = static_cast<std::uint32_t>((m - i) % m);
  }
  return PermGroup(m, {r, s});
}

PermGroup quaternion() {
  // Element index 2*u + s encodes (-1)^s * unit[u], units 1, i, j, k.
  // unit_mul[u][v] = {sign, unit} of unit[u] * unit[v].
  static constexpr int unit_mul[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  auto left_mul = [&](int u) {
    Perm perm(8);
    for (int x = 0; x < 8; ++x) {
      const int xu = x / 2, xs = x % 2;
      const int s = (unit_mul[u][xu][0] + xs) % 2;
      perm[x] = static_cast<std::uint32_t>(2 * unit_mul[u][xu][1] + s);
    }
    return perm;
  };
  return PermGroup(8, {left_mul(1), left_mul(2)});
}

PermGroup symmetric(std::size_t n) {
  if (n <= 1) return PermGroup(n, {perm_identity(n)});
  Perm t = perm_identity(n);
  std::swap(t[0], t[1]);
  Perm c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::uint32_t>((i + 1) % n);
  return PermGroup(n, {t, c});
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t da = a.degree(), db = b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    Perm h = perm_identity(da + db);
    for (std::size_t i = 0; i < da; ++i) h[i] = g[i];
    gens.push_back(std::move(h));
  }
  for (const auto& g : b.generators()) {
    Perm h = perm_identity(da + db);
    for (std::size_t i = 0; i < db; ++i) h[da + i] = static_cast<std::uint32_t>(da + g[i]);
    gens.push_back(std::move(h));
  }
  return PermGroup(da + db, std::move(gens), std::max(a.element_bound(), b.element_bound()));
}

}  // namespace groups

}  // namespace satrank
