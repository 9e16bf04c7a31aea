#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "satrank/field.hpp"
#include "satrank/matrix.hpp"

namespace satrank::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }

  FieldElem elem(const Field& f) { return f.element(static_cast<std::uint32_t>(uniform(0, f.order() - 1))); }

  FieldElem nonzero(const Field& f) {
    return f.element(static_cast<std::uint32_t>(uniform(1, f.order() - 1)));
  }

  Vec vec(const Field& f, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = elem(f);
    return v;
  }

  Mat mat(const Field& f, std::size_t rows, std::size_t cols) {
    Mat m(rows, cols);
    for (auto& x : m.data()) x = elem(f);
    return m;
  }

  /// Random invertible matrix by rejection.
  Mat invertible(const Field& f, std::size_t n) {
    while (true) {
      Mat m = mat(f, n, n);
      if (mat_rank(f, m) == n) return m;
    }
  }

  /// Random element of SL_n: an invertible matrix with its first row rescaled.
  Mat special_linear(const Field& f, std::size_t n) {
    Mat m = invertible(f, n);
    const FieldElem scale = f.inv(mat_det(f, m));
    for (std::size_t c = 0; c < n; ++c) m(0, c) = f.mul(scale, m(0, c));
    return m;
  }

  /// Random strictly upper triangular matrix, hence nilpotent.
  Mat strictly_upper(const Field& f, std::size_t n) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) m(r, c) = elem(f);
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace satrank::testing
