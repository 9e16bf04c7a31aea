#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "satrank/field.hpp"

namespace satrank {

using Vec = std::vector<FieldElem>;

/// Dense row-major matrix over a Field. The matrix does not carry its field;
/// every arithmetic routine takes the Field explicitly.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(const Field& f, std::size_t n);
  /// Matrix unit E_{ij} (0-based).
  static Mat unit(const Field& f, std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const Vec& data() const { return data_; }
  Vec& data() { return data_; }

  bool is_zero() const;

  friend bool operator==(const Mat&, const Mat&) = default;
  friend auto operator<=>(const Mat& a, const Mat& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return a.data_ <=> b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Mat mat_add(const Field& f, const Mat& a, const Mat& b);
Mat mat_sub(const Field& f, const Mat& a, const Mat& b);
Mat mat_scale(const Field& f, FieldElem c, const Mat& a);
Mat mat_mul(const Field& f, const Mat& a, const Mat& b);
Mat mat_pow(const Field& f, const Mat& a, std::uint64_t e);
/// ab - ba.
Mat mat_commutator(const Field& f, const Mat& a, const Mat& b);
FieldElem mat_trace(const Field& f, const Mat& a);
FieldElem mat_det(const Field& f, const Mat& a);
std::optional<Mat> mat_inverse(const Field& f, const Mat& a);
Vec mat_apply(const Field& f, const Mat& a, const Vec& v);
/// Entry-wise image of a prime-field matrix in another field of the same characteristic.
Mat mat_embed(const Field& from, const Field& to, const Mat& a);

/// In-place reduced row echelon form; returns pivot columns in row order.
std::vector<std::size_t> mat_rref(const Field& f, Mat& a);
std::size_t mat_rank(const Field& f, const Mat& m);
/// Basis of the right null space, one vector per free column in increasing order.
std::vector<Vec> mat_kernel_basis(const Field& f, const Mat& m);
/// True iff m^p = 0 where p is the field characteristic. Throws on non-square input.
bool mat_is_p_nilpotent(const Field& f, const Mat& m);

/// Stacks vectors as the rows of a matrix.
Mat mat_from_rows(const std::vector<Vec>& rows, std::size_t cols);

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, FieldElem c, const Vec& a);
/// a += c * b
void vec_axpy(const Field& f, Vec& a, FieldElem c, const Vec& b);
bool vec_is_zero(const Vec& a);
/// Index of the first nonzero entry, or size() if zero.
std::size_t vec_leading(const Vec& a);

/// Incrementally built subspace of F^n kept in reduced echelon form.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical coset representative of v: zero at every pivot column.
  Vec reduce(const Field& f, const Vec& v) const;
  bool contains(const Field& f, const Vec& v) const { return vec_is_zero(reduce(f, v)); }
  /// Adds v; returns false (and leaves the span unchanged) if v is already inside.
  bool insert(const Field& f, const Vec& v);

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates c with sum_i c_i * basis_i = target, or nullopt if target is not in the span.
/// The basis must be linearly independent.
std::optional<Vec> solve_in_span(const Field& f, const std::vector<Vec>& basis, const Vec& target);

/// Coordinates with respect to a fixed linearly independent family, via an
/// invertible square minor chosen once at construction.
class SpanCoordinates {
 public:
  SpanCoordinates() = default;
  /// Throws std::invalid_argument if the vectors are dependent.
  SpanCoordinates(const Field& f, std::vector<Vec> basis);

  std::size_t size() const { return basis_.size(); }
  /// nullopt if v is outside the span.
  std::optional<Vec> coords(const Field& f, const Vec& v) const;

 private:
  std::vector<Vec> basis_;
  std::vector<std::size_t> positions_;
  Mat minor_inverse_;
};

}  // namespace satrank
