#include "satrank/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "satrank/errors.hpp"

namespace satrank {

namespace {

constexpr std::size_t kOracleGroupCap = 5000;
constexpr std::uint64_t kOraclePointCap = 1'000'000;

// Subgroups as sorted index sets into the element list.
using IndexSet = std::vector<std::uint32_t>;

class GroupTable {
 public:
  explicit GroupTable(const PermGroup& g) : els_(g.elements()) {
    for (std::uint32_t i = 0; i < els_.size(); ++i) index_.emplace(els_[i], i);
  }

  std::size_t size() const { return els_.size(); }
  const Perm& element(std::uint32_t i) const { return els_[i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return index_.at(perm_compose(els_[a], els_[b])); }

  IndexSet generated(const std::vector<std::uint32_t>& gens) const {
    std::set<std::uint32_t> seen{identity()};
    std::deque<std::uint32_t> queue{identity()};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (auto s : gens) {
        const auto y = mul(x, s);
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    return {seen.begin(), seen.end()};
  }

  std::uint32_t identity() const { return index_.at(perm_identity(els_.front().size())); }

 private:
  std::vector<Perm> els_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

bool is_elementary_abelian(const GroupTable& t, const IndexSet& h, unsigned p) {
  for (auto x : h) {
    if (x != t.identity() && perm_order(t.element(x)) != p) return false;
    for (auto y : h)
      if (t.mul(x, y) != t.mul(y, x)) return false;
  }
  return true;
}

}  // namespace

std::vector<ElemAbSubgroup> oracle_maximal_elemab(const PermGroup& g, unsigned p, const SearchBudget& budget) {
  if (g.order() > kOracleGroupCap)
    throw PreconditionError("subgroup-lattice oracle is limited to groups of order <= 5000");
  const GroupTable t(g);

  // Cyclic subgroups with one generator each.
  std::map<IndexSet, std::uint32_t> cyclic;
  for (std::uint32_t x = 0; x < t.size(); ++x) cyclic.emplace(t.generated({x}), x);

  // Lattice closure under joins with cyclic subgroups.
  std::map<IndexSet, std::vector<std::uint32_t>> lattice;
  std::deque<IndexSet> queue;
  const IndexSet trivial{t.identity()};
  lattice.emplace(trivial, std::vector<std::uint32_t>{});
  queue.push_back(trivial);
  while (!queue.empty()) {
    const IndexSet h = queue.front();
    queue.pop_front();
    const auto gens = lattice.at(h);
    for (const auto& [c, c_gen] : cyclic) {
      if (std::binary_search(h.begin(), h.end(), c_gen)) continue;
      auto join_gens = gens;
      join_gens.push_back(c_gen);
      IndexSet join = t.generated(join_gens);
      if (lattice.count(join)) continue;
      if (lattice.size() >= budget.max_points)
        throw BudgetError("subgroup lattice exceeds " + std::to_string(budget.max_points) + " members");
      lattice.emplace(join, std::move(join_gens));
      queue.push_back(std::move(join));
    }
  }

  std::vector<IndexSet> elemab;
  for (const auto& [h, gens] : lattice)
    if (h.size() > 1 && is_elementary_abelian(t, h, p)) elemab.push_back(h);

  std::vector<ElemAbSubgroup> out;
  for (const auto& h : elemab) {
    const bool maximal = std::none_of(elemab.begin(), elemab.end(), [&](const IndexSet& k) {
      return k.size() > h.size() && std::includes(k.begin(), k.end(), h.begin(), h.end());
    });
    if (!maximal) continue;
    ElemAbSubgroup e;
    std::vector<std::uint32_t> gens;
    IndexSet span{t.identity()};
    for (auto x : h)
      if (!std::binary_search(span.begin(), span.end(), x)) {
        gens.push_back(x);
        span = t.generated(gens);
      }
    for (auto x : gens) e.generators.push_back(t.element(x));
    for (auto x : h) e.elements.push_back(t.element(x));
    std::sort(e.elements.begin(), e.elements.end());
    e.rank = static_cast<unsigned>(gens.size());
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const ElemAbSubgroup& a, const ElemAbSubgroup& b) {
    return std::tie(a.rank, a.elements) < std::tie(b.rank, b.elements);
  });
  return out;
}

namespace {

// Reduced row echelon basis of a small family; rows with leading coefficient 1.
std::vector<Vec> rref_rows(const Field& f, std::vector<Vec> rows) {
  std::vector<Vec> out;
  if (rows.empty()) return out;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && f.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const FieldElem s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(s, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || f.is_zero(rows[i][c])) continue;
      const FieldElem m = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

std::uint64_t point_id(const Vec& v, std::uint64_t q) {
  std::uint64_t id = 0;
  for (auto c : v) id = id * q + c.v;
  return id;
}

}  // namespace

OracleSrk oracle_srk_lie(const RestrictedLieAlgebra& g, const SearchBudget& budget) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  const std::uint64_t q = f.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= q;
    if (total > kOraclePointCap) throw PreconditionError("oracle_srk_lie needs q^dim <= 10^6");
  }

  // Normalized nonzero nullcone points (leading coordinate 1).
  std::vector<Vec> directions;
  std::vector<std::uint64_t> nullcone_ids;
  Vec x(n);
  for (std::uint64_t id = 0; id < total; ++id) {
    if (id > 0 && vec_is_zero(g.pmap(x))) {
      nullcone_ids.push_back(id);
      if (f.is_one(x[vec_leading(x)])) directions.push_back(x);
    }
    for (std::size_t i = n; i-- > 0;) {
      if (++x[i].v < q) break;
      x[i].v = 0;
    }
  }
  OracleSrk out;
  if (directions.empty()) return out;

  std::unordered_map<std::uint64_t, std::size_t> best;
  auto record = [&](const std::vector<Vec>& basis) {
    const std::size_t d = basis.size();
    std::vector<std::uint32_t> digits(d, 0);
    while (true) {
      Vec v(n);
      for (std::size_t i = 0; i < d; ++i)
        if (digits[i]) vec_axpy(f, v, FieldElem{digits[i]}, basis[i]);
      auto& b = best[point_id(v, q)];
      b = std::max(b, d);
      std::size_t i = 0;
      while (i < d && ++digits[i] == q) digits[i++] = 0;
      if (i == d) break;
    }
  };

  std::set<std::vector<Vec>> level;
  for (const auto& v : directions) level.insert({v});
  std::size_t depth = 1;
  while (!level.empty()) {
    out.subalgebras += level.size();
    if (out.subalgebras > budget.max_points)
      throw BudgetError("more than " + std::to_string(budget.max_points) + " elementary subalgebras");
    for (const auto& s : level) record(s);
    out.max_rank = depth;
    if (depth >= budget.max_depth) break;
    std::set<std::vector<Vec>> next;
    for (const auto& s : level)
      for (const auto& y : directions) {
        bool ok = true;
        for (const auto& b : s)
          if (!vec_is_zero(g.bracket(b, y))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        auto rows = s;
        rows.push_back(y);
        auto r = rref_rows(f, std::move(rows));
        if (r.size() == depth + 1) next.insert(std::move(r));
      }
    level = std::move(next);
    ++depth;
  }

  std::size_t srk = n;
  for (auto id : nullcone_ids) srk = std::min(srk, best.at(id));
  out.srk = srk;
  return out;
}

namespace {

Mat random_strictly_upper(std::mt19937_64& rng, const Field& f, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
  Mat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) m(r, c) = f.element(d(rng));
  return m;
}

}  // namespace

CommutingPairs oracle_commuting_pairs(std::size_t n, const Field& f, std::uint64_t cap, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("commuting pairs need n >= 2");
  CommutingPairs out;
  const std::uint64_t p = f.characteristic();
  if (n == 2) {
    const std::uint64_t q = f.order();
    if (q * q * q > cap) throw BudgetError("exhaustive sl_2 scan needs q^3 <= cap");
    out.exhaustive = true;
    std::vector<Mat> nil;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          Mat m(2, 2);
          m(0, 0) = f.element(a);
          m(0, 1) = f.element(b);
          m(1, 0) = f.element(c);
          m(1, 1) = f.neg(f.element(a));
          if (mat_pow(f, m, p).is_zero()) nil.push_back(std::move(m));
        }
    for (const auto& x : nil)
      for (const auto& y : nil)
        if (mat_mul(f, x, y) == mat_mul(f, y, x)) ++out.count;
    return out;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.order() - 1);
  const std::uint64_t max_attempts = 100 * std::max<std::uint64_t>(cap, 1);
  for (std::uint64_t attempt = 0; attempt < max_attempts && out.samples.size() < cap; ++attempt) {
    const Mat u = random_strictly_upper(rng, f, n);
    Mat v;
    for (int tries = 0; tries < 64; ++tries) {
      Mat w = random_strictly_upper(rng, f, n);
      if (mat_mul(f, u, w) == mat_mul(f, w, u)) {
        v = std::move(w);
        break;
      }
    }
    if (v.rows() == 0) {
      // Fall back to a polynomial in u without constant term.
      v = Mat(n, n);
      Mat power = u;
      for (std::size_t i = 1; i < n; ++i) {
        v = mat_add(f, v, mat_scale(f, f.element(coeff(rng)), power));
        power = mat_mul(f, power, u);
      }
    }
    Mat g;
    do {
      g = Mat(n, n);
      for (auto& e : g.data()) e = f.element(coeff(rng));
    } while (!mat_inverse(f, g));
    const Mat gi = *mat_inverse(f, g);
    Mat x = mat_mul(f, mat_mul(f, g, u), gi);
    Mat y = mat_mul(f, mat_mul(f, g, v), gi);
    const bool valid = mat_pow(f, x, p).is_zero() && mat_pow(f, y, p).is_zero() &&
                       mat_mul(f, x, y) == mat_mul(f, y, x) && f.is_zero(mat_trace(f, x)) &&
                       f.is_zero(mat_trace(f, y));
    if (valid) out.samples.emplace_back(std::move(x), std::move(y));
  }
  out.count = out.samples.size();
  return out;
}

}  // namespace satrank
