#include <algorithm>
#include <limits>
#include <random>
#include <thread>

#include "satrank/errors.hpp"
#include "satrank/lie.hpp"

namespace satrank {

std::uint64_t point_count(const RestrictedLieAlgebra& g) {
  const std::uint64_t q = g.field().order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

LieElement point_at(const RestrictedLieAlgebra& g, std::uint64_t index) {
  const std::uint64_t q = g.field().order();
  LieElement x(g.dim());
  for (std::size_t i = g.dim(); i-- > 0;) {
    x[i] = {static_cast<std::uint32_t>(index % q)};
    index /= q;
  }
  return x;
}

void for_each_nullcone_point(const RestrictedLieAlgebra& g, const SearchLimits& limits,
                             const std::function<void(const LieElement&)>& fn) {
  const std::uint64_t total = point_count(g);
  if (total > limits.max_points)
    throw BudgetError("nullcone enumeration needs " + std::to_string(total) + " points, budget is " +
                      std::to_string(limits.max_points) + "; use sampled mode");
  const std::uint32_t q = g.field().order();
  LieElement x(g.dim());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (g.in_nullcone(x)) fn(x);
    // odometer, last coordinate fastest
    for (std::size_t i = g.dim(); i-- > 0;) {
      if (++x[i].v < q) break;
      x[i].v = 0;
    }
  }
}

std::vector<LieElement> nullcone(const RestrictedLieAlgebra& g, const SearchLimits& limits) {
  std::vector<LieElement> out;
  for_each_nullcone_point(g, limits, [&](const LieElement& x) { out.push_back(x); });
  return out;
}

std::vector<LieElement> centralizer(const RestrictedLieAlgebra& g, const LieElement& x) {
  return mat_kernel_basis(g.field(), g.ad(x));
}

bool is_elementary(const RestrictedLieAlgebra& g, const std::vector<LieElement>& basis) {
  const Field& f = g.field();
  EchelonSpan span(g.dim());
  for (const auto& v : basis) {
    if (v.size() != g.dim()) return false;
    if (!span.insert(f, v)) return false;
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!g.in_nullcone(basis[i])) return false;
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!vec_is_zero(g.bracket(basis[i], basis[j]))) return false;
  }
  return true;
}

namespace {

class LocalRankSearch {
 public:
  LocalRankSearch(const RestrictedLieAlgebra& g, const SearchLimits& limits) : g_(g), f_(g.field()), limits_(limits) {}

  LocalRank run(const LieElement& x) {
    EchelonSpan span(g_.dim());
    span.insert(f_, x);
    std::vector<LieElement> chosen{x};
    std::vector<Mat> ads{g_.ad(x)};
    best_ = chosen;
    dfs(span, chosen, ads, std::nullopt);
    return {best_.size(), {best_}, nodes_};
  }

 private:
  // Admissible next vectors: commute with the span, vanish at its pivots and
  // at every column up to the previous choice's leading column.
  EchelonSpan admissible(const EchelonSpan& span, const std::vector<Mat>& ads,
                         std::optional<std::size_t> last_lead) const {
    const std::size_t n = g_.dim();
    std::vector<Vec> rows;
    for (const auto& a : ads)
      for (std::size_t r = 0; r < n; ++r) {
        Vec row(a.data().begin() + static_cast<std::ptrdiff_t>(r * n),
                a.data().begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
    auto pin = [&](std::size_t c) {
      Vec row(n);
      row[c] = f_.one();
      rows.push_back(std::move(row));
    };
    for (auto c : span.pivots()) pin(c);
    if (last_lead)
      for (std::size_t c = 0; c <= *last_lead; ++c) pin(c);
    EchelonSpan out(n);
    for (const auto& v : mat_kernel_basis(f_, mat_from_rows(rows, n))) out.insert(f_, v);
    return out;
  }

  void dfs(const EchelonSpan& span, std::vector<LieElement>& chosen, std::vector<Mat>& ads,
           std::optional<std::size_t> last_lead) {
    if (++nodes_ > limits_.max_points)
      throw BudgetError("local rank search exceeded " + std::to_string(limits_.max_points) + " nodes");
    if (chosen.size() > best_.size()) best_ = chosen;

    const EchelonSpan room = admissible(span, ads, last_lead);
    if (span.dim() + room.dim() <= best_.size()) return;

    const auto& rows = room.rows();
    const std::size_t m = rows.size();
    const std::uint32_t q = f_.order();
    // Normalized points: rows[a] + sum_{b > a} c_b rows[b].
    for (std::size_t a = 0; a < m; ++a) {
      // Everything from here on lies in span + <rows[a..m)>.
      if (span.dim() + (m - a) <= best_.size()) return;
      const std::size_t tail = m - a - 1;
      std::vector<std::uint32_t> digits(tail, 0);
      while (true) {
        LieElement y = rows[a];
        for (std::size_t t = 0; t < tail; ++t)
          if (digits[t]) vec_axpy(f_, y, FieldElem{digits[t]}, rows[a + 1 + t]);
        if (g_.in_nullcone(y)) {
          EchelonSpan next = span;
          next.insert(f_, y);
          chosen.push_back(y);
          ads.push_back(g_.ad(y));
          dfs(next, chosen, ads, room.pivots()[a]);
          chosen.pop_back();
          ads.pop_back();
          if (span.dim() + (m - a) <= best_.size()) return;
        }
        std::size_t t = 0;
        while (t < tail && ++digits[t] == q) digits[t++] = 0;
        if (t == tail) break;
      }
    }
  }

  const RestrictedLieAlgebra& g_;
  const Field& f_;
  SearchLimits limits_;
  std::vector<LieElement> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

LocalRank local_rank(const RestrictedLieAlgebra& g, const LieElement& x, const SearchLimits& limits) {
  if (x.size() != g.dim()) throw PreconditionError("element has wrong dimension");
  if (vec_is_zero(x)) throw PreconditionError("local rank needs a nonzero element");
  if (!g.in_nullcone(x)) throw PreconditionError("element is not in the restricted nullcone");
  return LocalRankSearch(g, limits).run(x);
}

namespace {

SrkResult reduce_ranks(const RestrictedLieAlgebra& g, const std::vector<LieElement>& points,
                       const SearchLimits& limits) {
  SrkResult result;
  std::vector<LocalRank> ranks(points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(limits.threads, static_cast<unsigned>(points.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) ranks[i] = local_rank(g, points[i], limits);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < points.size(); i += workers) ranks[i] = local_rank(g, points[i], limits);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::size_t r_min = std::numeric_limits<std::size_t>::max();
  for (const auto& r : ranks) r_min = std::min(r_min, r.rank);
  result.srk = r_min;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (ranks[i].rank == r_min) {
      if (result.witnesses.empty()) result.witnesses.push_back(ranks[i]);
      result.o_rmin.push_back(points[i]);
    }
  return result;
}

}  // namespace

SrkResult srk_brute(const RestrictedLieAlgebra& g, const SearchLimits& limits) {
  std::vector<LieElement> points;
  std::uint64_t size = 0;
  for_each_nullcone_point(g, limits, [&](const LieElement& x) {
    ++size;
    if (!vec_is_zero(x)) points.push_back(x);
  });
  if (points.empty()) {
    SrkResult r;
    r.nullcone_size = size;
    r.note = "restricted nullcone is {0}; srk reported as 0";
    return r;
  }
  SrkResult r = reduce_ranks(g, points, limits);
  r.nullcone_size = size;
  return r;
}

SrkResult srk_sampled(const RestrictedLieAlgebra& g, std::size_t samples, std::uint64_t seed,
                      const SearchLimits& limits) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coord(0, g.field().order() - 1);
  std::vector<LieElement> points;
  const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(std::max<std::size_t>(samples, 1));
  for (std::uint64_t attempt = 0; attempt < max_attempts && points.size() < samples; ++attempt) {
    LieElement x(g.dim());
    for (auto& c : x) c = {coord(rng)};
    if (!vec_is_zero(x) && g.in_nullcone(x)) points.push_back(std::move(x));
  }
  if (points.empty()) {
    SrkResult r;
    r.certified = false;
    r.note = "no nonzero nullcone point found in " + std::to_string(max_attempts) + " draws";
    return r;
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  SrkResult r = reduce_ranks(g, points, limits);
  r.certified = false;
  r.note = "sampled " + std::to_string(points.size()) + " nullcone points; srk is at most the reported value";
  return r;
}

}  // namespace satrank
