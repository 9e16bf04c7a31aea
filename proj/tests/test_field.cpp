#include <stdexcept>

#include "doctest.h"
#include "satrank/errors.hpp"
#include "satrank/field.hpp"
#include "satrank/matrix.hpp"
#include "support/gen.hpp"

using namespace satrank;

namespace {

Mat jordan_block(const Field& f, std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = f.one();
  return m;
}

}  // namespace

TEST_CASE("field_make picks the smallest irreducible modulus") {
  const Field f2 = Field::make(2);
  CHECK(f2.order() == 2);
  CHECK(f2.modulus() == std::vector<std::uint32_t>{0, 1});

  const Field f9 = Field::make(3, 2);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1

  CHECK(Field::make(2, 2).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2, 3).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("field_make rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(4), PreconditionError);
  CHECK_THROWS_AS(Field::make(1), PreconditionError);
  CHECK_THROWS_AS(Field::make(3, 0), PreconditionError);
  CHECK_THROWS_AS(Field::make(3, 5), PreconditionError);
}

TEST_CASE("modulus scan agrees with an independent root count in degree 2") {
  // A monic quadratic is irreducible iff it has no root.
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        bool root = false;
        for (std::uint32_t x = 0; x < p; ++x) root |= (x * x + a * x + b) % p == 0;
        const std::uint32_t poly[] = {b, a, 1};
        CHECK(is_irreducible_mod_p(poly, p) == !root);
      }
  }
}

TEST_CASE("field axioms hold exhaustively up to 81 elements") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {7u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {2u, 4u},
                      {3u, 3u}, {3u, 4u}, {7u, 2u}}) {
    const Field f = Field::make(p, k);
    CAPTURE(p);
    CAPTURE(k);
    const std::uint32_t q = f.order();
    for (std::uint32_t i = 0; i < q; ++i) {
      const FieldElem a = f.element(i);
      CHECK(f.add(a, f.neg(a)) == f.zero());
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.pow(a, q) == a);
      for (std::uint32_t j = 0; j < q; ++j) {
        const FieldElem b = f.element(j);
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      }
    }
    testing::Gen gen(p * 100 + k);
    for (int t = 0; t < 300; ++t) {
      const FieldElem a = gen.elem(f), b = gen.elem(f), c = gen.elem(f);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
  }
}

TEST_CASE("field axioms on samples beyond 81 elements") {
  for (auto [p, k] : {std::pair{5u, 3u}, {7u, 3u}, {11u, 2u}, {5u, 4u}}) {
    const Field f = Field::make(p, k);
    testing::Gen gen(p * 1000 + k);
    for (int t = 0; t < 2000; ++t) {
      const FieldElem a = gen.elem(f), b = gen.elem(f), c = gen.elem(f);
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
      if (!f.is_zero(a)) CHECK(f.mul(a, f.inv(a)) == f.one());
    }
  }
}

TEST_CASE("extension arithmetic matches polynomial arithmetic mod x^2+1 over F_3") {
  const Field f = Field::make(3, 2);
  // i = x satisfies i^2 = -1.
  const std::uint32_t xi[] = {0, 1};
  const FieldElem i = f.from_coeffs(xi);
  CHECK(f.mul(i, i) == f.from_int(-1));
  CHECK(f.to_string(i) == "[0,1]");
  CHECK(f.coeffs(f.add(i, f.one())) == std::vector<std::uint32_t>{1, 1});
  CHECK_FALSE(f.in_prime_subfield(i));
  CHECK(f.frobenius(i) == f.neg(i));
  CHECK_THROWS_AS(f.inv(f.zero()), std::domain_error);
}

TEST_CASE("mat_rank examples") {
  const Field f = Field::make(3);
  CHECK(mat_rank(f, Mat(3, 3)) == 0);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(mat_rank(f, Mat::identity(f, n)) == n);
  CHECK(mat_rank(f, jordan_block(f, 3)) == 2);
}

TEST_CASE("mat_kernel_basis examples") {
  const Field f = Field::make(5);
  CHECK(mat_kernel_basis(f, Mat::identity(f, 4)).empty());
  const auto zero_kernel = mat_kernel_basis(f, Mat(3, 3));
  REQUIRE(zero_kernel.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(zero_kernel[i] == mat_apply(f, Mat::identity(f, 3), zero_kernel[i]));
  CHECK(zero_kernel[1] == Vec{f.zero(), f.one(), f.zero()});
  const auto k = mat_kernel_basis(f, jordan_block(f, 2));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vec{f.one(), f.zero()});
}

TEST_CASE("mat_is_p_nilpotent examples") {
  const Field f3 = Field::make(3), f2 = Field::make(2), f5 = Field::make(5);
  CHECK(mat_is_p_nilpotent(f3, Mat(4, 4)));
  CHECK(mat_is_p_nilpotent(f3, jordan_block(f3, 3)));
  CHECK_FALSE(mat_is_p_nilpotent(f2, jordan_block(f2, 3)));
  CHECK_FALSE(mat_is_p_nilpotent(f5, Mat::identity(f5, 2)));
  CHECK_THROWS_AS(mat_is_p_nilpotent(f3, Mat(2, 3)), PreconditionError);
}

TEST_CASE("rank-nullity and rank invariance on random matrices") {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {3u, 2u}, {7u, 1u}}) {
    const Field f = Field::make(p, k);
    testing::Gen gen(17 * p + k);
    for (int t = 0; t < 150; ++t) {
      const std::size_t r = gen.uniform(1, 6), c = gen.uniform(1, 6);
      Mat m = gen.mat(f, r, c);
      // Force low rank half of the time.
      if (t % 2 == 0 && r > 1)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j);
      const std::size_t rank = mat_rank(f, m);
      const auto kernel = mat_kernel_basis(f, m);
      CHECK(rank + kernel.size() == c);
      for (const auto& v : kernel) CHECK(vec_is_zero(mat_apply(f, m, v)));

      CHECK(mat_rank(f, mat_mul(f, gen.invertible(f, r), m)) == rank);
      CHECK(mat_rank(f, mat_mul(f, m, gen.invertible(f, c))) == rank);

      Mat swapped = m;
      const std::size_t a = gen.uniform(0, r - 1), b = gen.uniform(0, r - 1);
      for (std::size_t j = 0; j < c; ++j) std::swap(swapped(a, j), swapped(b, j));
      CHECK(mat_rank(f, swapped) == rank);
    }
  }
}

TEST_CASE("determinant, inverse and span coordinates") {
  const Field f = Field::make(7);
  testing::Gen gen(99);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = gen.uniform(1, 5);
    const Mat a = gen.mat(f, n, n), b = gen.mat(f, n, n);
    CHECK(mat_det(f, mat_mul(f, a, b)) == f.mul(mat_det(f, a), mat_det(f, b)));
    const auto inv = mat_inverse(f, a);
    CHECK(inv.has_value() == !f.is_zero(mat_det(f, a)));
    if (inv) CHECK(mat_mul(f, a, *inv) == Mat::identity(f, n));
  }
  std::vector<Vec> basis{{f.one(), f.zero(), f.from_int(2)}, {f.zero(), f.one(), f.from_int(3)}};
  const SpanCoordinates coords(f, basis);
  const Vec target = vec_add(f, vec_scale(f, f.from_int(4), basis[0]), vec_scale(f, f.from_int(5), basis[1]));
  CHECK(coords.coords(f, target) == Vec{f.from_int(4), f.from_int(5)});
  CHECK_FALSE(coords.coords(f, Vec{f.zero(), f.zero(), f.one()}).has_value());
  CHECK(solve_in_span(f, basis, target) == Vec{f.from_int(4), f.from_int(5)});
}

TEST_CASE("echelon span keeps canonical coset representatives") {
  const Field f = Field::make(3);
  EchelonSpan s(4);
  CHECK(s.insert(f, Vec{f.zero(), f.one(), f.one(), f.zero()}));
  CHECK(s.insert(f, Vec{f.one(), f.one(), f.zero(), f.zero()}));
  CHECK_FALSE(s.insert(f, Vec{f.one(), f.from_int(2), f.one(), f.zero()}));
  CHECK(s.dim() == 2);
  CHECK(s.pivots() == std::vector<std::size_t>{0, 1});
  const Vec r = s.reduce(f, Vec{f.one(), f.one(), f.one(), f.one()});
  CHECK(r[0] == f.zero());
  CHECK(r[1] == f.zero());
}
