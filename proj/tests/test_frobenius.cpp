#include <map>

#include "doctest.h"
#include "satrank/errors.hpp"
#include "satrank/frobenius.hpp"
#include "satrank/sln.hpp"
#include "support/gen.hpp"

using namespace satrank;

namespace {

Mat regular(const Field& f, std::size_t n) { return u_e_data(n, f).e; }

// All elements of u_e over F_p: sum_k a_k e^k.
std::vector<Mat> u_e_points(const Field& f, std::size_t n) {
  const auto ue = u_e_data(n, f);
  std::vector<Mat> out;
  std::vector<std::uint32_t> digits(ue.basis.size(), 0);
  while (true) {
    Mat m(n, n);
    for (std::size_t k = 0; k < digits.size(); ++k) m = mat_add(f, m, mat_scale(f, f.element(digits[k]), ue.basis[k]));
    out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == f.order()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

}  // namespace

TEST_CASE("trunc_exp examples") {
  const Field f = Field::make(5);
  CHECK(trunc_exp(f, Mat(3, 3)) == Mat::identity(f, 3));
  const Mat e = regular(f, 3);
  const Mat e2 = mat_mul(f, e, e);
  const Mat expect = mat_add(f, mat_add(f, Mat::identity(f, 3), e), mat_scale(f, f.from_int(3), e2));  // 1/2 = 3 mod 5
  CHECK(trunc_exp(f, e) == expect);
  CHECK(mat_mul(f, trunc_exp(f, e), trunc_exp(f, mat_scale(f, f.from_int(-1), e))) == Mat::identity(f, 3));
  CHECK_THROWS_AS(trunc_exp(f, Mat::identity(f, 2)), PreconditionError);
  CHECK_THROWS_AS(trunc_exp(Field::make(2), regular(Field::make(3), 3)), PreconditionError);
}

TEST_CASE("trunc_exp group laws over u_e, n <= 4, p <= 7") {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (std::size_t n = 2; n <= 4; ++n) {
      if (p < n) continue;
      const Field f = Field::make(p);
      const auto pts = u_e_points(f, n);
      std::map<Mat, std::size_t> index;
      std::vector<Mat> exps;
      for (const auto& x : pts) {
        const Mat ex = trunc_exp(f, x);
        CHECK(f.is_one(mat_det(f, ex)));
        CHECK(mat_is_p_nilpotent(f, mat_sub(f, ex, Mat::identity(f, n))));
        index.emplace(x, exps.size());
        exps.push_back(ex);
      }
      // u_e is closed under addition, so exp(x + y) is looked up, not recomputed.
      for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b) {
          const auto sum = index.find(mat_add(f, pts[a], pts[b]));
          REQUIRE(sum != index.end());
          if (exps[sum->second] != mat_mul(f, exps[a], exps[b])) FAIL_CHECK("exp(x + y) != exp(x) exp(y)");
        }
    }
}

TEST_CASE("eval_one_param examples") {
  const Field f = Field::make(5);
  const Mat e = regular(f, 4);
  const auto u = make_one_param(f, make_nil_pair(f, e, mat_mul(f, e, e)));
  CHECK(eval_one_param(f, u, f.zero()) == Mat::identity(f, 4));
  const auto h1 = make_one_param(f, make_nil_pair(f, e, Mat(4, 4)));
  testing::Gen gen(5);
  for (int t = 0; t < 10; ++t) {
    const FieldElem s = gen.elem(f);
    CHECK(eval_one_param(f, h1, s) == trunc_exp(f, mat_scale(f, s, e)));
  }
  Mat lower(4, 4);
  for (std::size_t i = 0; i + 1 < 4; ++i) lower(i + 1, i) = f.one();
  CHECK_THROWS_AS(make_nil_pair(f, e, lower), PreconditionError);
}

TEST_CASE("exp_a is a homomorphism over F_p and F_{p^2}") {
  for (auto [n, p] : {std::pair{4u, 5u}, {3u, 5u}, {3u, 3u}, {5u, 7u}, {2u, 2u}}) {
    for (unsigned k : {1u, 2u}) {
      const Field fp = Field::make(p), f = Field::make(p, k);
      const Mat e = mat_embed(fp, f, regular(fp, n));
      const auto u = make_one_param(f, make_nil_pair(f, e, mat_mul(f, e, e)));
      const auto sweep = sweep_homomorphism(f, u, 2);
      CHECK(sweep.pairs == std::uint64_t{f.order()} * f.order());
      CHECK(sweep.ok());
    }
  }
}

TEST_CASE("exp_a is equivariant under conjugation") {
  const Field f = Field::make(5);
  testing::Gen gen(77);
  const Mat e = regular(f, 3);
  const NilPair a{e, mat_add(f, e, mat_mul(f, e, e))};
  for (int t = 0; t < 20; ++t) {
    const Mat g = gen.special_linear(f, 3);
    const Mat gi = *mat_inverse(f, g);
    const auto conj = [&](const Mat& m) { return mat_mul(f, mat_mul(f, g, m), gi); };
    const auto u = make_one_param(f, a);
    const auto gu = make_one_param(f, NilPair{conj(a.alpha0), conj(a.alpha1)});
    const FieldElem s = gen.elem(f);
    CHECK(eval_one_param(f, gu, s) == conj(eval_one_param(f, u, s)));
  }
}

TEST_CASE("u_e_data examples") {
  const Field f5 = Field::make(5);
  const auto u3 = u_e_data(3, f5);
  CHECK(u3.basis.size() == 2);
  CHECK(u3.v2_dim == 4);
  CHECK(u_e_data(4, f5).v2_dim == 6);
  CHECK_THROWS_AS(u_e_data(4, Field::make(3)), PreconditionError);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& x : u_e_points(f5, n))
      for (const auto& y : u_e_points(f5, n)) CHECK(is_nil_pair(f5, NilPair{x, y}));
}

TEST_CASE("u_e is the centralizer of e in sl_n") {
  // p = 7 > n keeps the identity out of sl_n.
  for (std::size_t n = 2; n <= 5; ++n) {
    const Field f = Field::make(7);
    const auto ue = u_e_data(n, f);
    const auto z = centralizer_sl_basis(Partition({static_cast<unsigned>(n)}), f);
    CHECK(z.basis.size() == ue.basis.size());
    CHECK(regular(f, n) == jordan_matrix(Partition({static_cast<unsigned>(n)}), f));
  }
}

TEST_CASE("srk_sln2 examples and witness") {
  CHECK(srk_sln2(3, 5).rank == 4);
  CHECK(srk_sln2(5, 7).rank == 8);
  for (auto [n, p] : {std::pair{2u, 2u}, {3u, 5u}, {4u, 5u}, {5u, 7u}, {3u, 3u}}) {
    const auto r = srk_sln2(n, p);
    const Field f = Field::make(p);
    CHECK(r.rank == 2 * (n - 1));
    CHECK(r.rank == r.u_e.v2_dim);
    CHECK(is_nil_pair(f, r.witness));
    CHECK(r.witness_regular);
    CHECK(is_regular_nilpotent(f, r.witness.alpha0));
    CHECK(srk_height_bound(2, srk_sln(n, p).rank) == r.rank);
  }
  CHECK_THROWS_AS(srk_sln2(4, 3), PreconditionError);
  CHECK_THROWS_AS(srk_sln2(1, 3), PreconditionError);
}

TEST_CASE("srk_height_bound and complexity") {
  CHECK(srk_height_bound(2, 4) == 8);
  CHECK(srk_height_bound(1, 5) == 5);
  CHECK(srk_height_bound(3, 2) == 6);
  CHECK_THROWS_AS(srk_height_bound(0, 2), PreconditionError);

  CHECK(complexity({{2, 1}, 0}) == 4);
  CHECK(complexity({{7}, 0}) == 7);
  CHECK(complexity({{0, 3}, 2}) == 8);
  testing::Gen gen(4);
  for (int t = 0; t < 200; ++t) {
    ElemAbComplexity e;
    const std::size_t r = gen.uniform(1, 5);
    for (std::size_t i = 0; i < r; ++i) e.multiplicities.push_back(gen.uniform(0, 4));
    const std::size_t cx = complexity(e), cx1 = restricted_complexity(e);
    CHECK(cx1 <= cx);
    CHECK(cx <= srk_height_bound(r, cx1));
  }
}
