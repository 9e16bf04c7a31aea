#include "satrank/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "satrank/errors.hpp"

namespace satrank {

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::unit(const Field& f, std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = f.one();
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](FieldElem e) { return e.v == 0; });
}

namespace {

void require_same_shape(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

Mat mat_add(const Field& f, const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = f.add(a.data()[i], b.data()[i]);
  return out;
}

Mat mat_sub(const Field& f, const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return out;
}

Mat mat_scale(const Field& f, FieldElem c, const Mat& a) {
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = f.mul(c, a.data()[i]);
  return out;
}

Mat mat_mul(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem aik = a(i, k);
      if (aik.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const FieldElem bkj = b(k, j);
        if (bkj.v == 0) continue;
        out(i, j) = f.add(out(i, j), f.mul(aik, bkj));
      }
    }
  return out;
}

Mat mat_pow(const Field& f, const Mat& a, std::uint64_t e) {
  if (!a.square()) throw std::invalid_argument("power of non-square matrix");
  Mat result = Mat::identity(f, a.rows());
  Mat base = a;
  while (e > 0) {
    if (e & 1) result = mat_mul(f, result, base);
    e >>= 1;
    if (e > 0) base = mat_mul(f, base, base);
  }
  return result;
}

Mat mat_commutator(const Field& f, const Mat& a, const Mat& b) {
  return mat_sub(f, mat_mul(f, a, b), mat_mul(f, b, a));
}

FieldElem mat_trace(const Field& f, const Mat& a) {
  FieldElem t = f.zero();
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t = f.add(t, a(i, i));
  return t;
}

FieldElem mat_det(const Field& f, const Mat& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  Mat m = a;
  const std::size_t n = m.rows();
  FieldElem det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).v == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const FieldElem inv = f.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).v == 0) continue;
      const FieldElem factor = f.mul(m(r, c), inv);
      for (std::size_t j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

std::optional<Mat> mat_inverse(const Field& f, const Mat& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = f.one();
  }
  const auto piv = mat_rref(f, aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

Vec mat_apply(const Field& f, const Mat& a, const Vec& v) {
  if (v.size() != a.cols()) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

Mat mat_embed(const Field& from, const Field& to, const Mat& a) {
  if (from.characteristic() != to.characteristic()) throw std::invalid_argument("characteristic mismatch");
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const FieldElem e = a.data()[i];
    if (!from.in_prime_subfield(e)) throw std::invalid_argument("entry outside the prime subfield");
    out.data()[i] = to.from_int(e.v);
  }
  return out;
}

std::vector<std::size_t> mat_rref(const Field& f, Mat& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, c).v == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    const FieldElem inv = f.inv(a(row, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c).v == 0) continue;
      const FieldElem factor = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.sub(a(r, j), f.mul(factor, a(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t mat_rank(const Field& f, const Mat& m) {
  Mat a = m;
  return mat_rref(f, a).size();
}

std::vector<Vec> mat_kernel_basis(const Field& f, const Mat& m) {
  Mat a = m;
  const auto pivots = mat_rref(f, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(a.cols());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool mat_is_p_nilpotent(const Field& f, const Mat& m) {
  if (!m.square()) throw PreconditionError("p-nilpotency test needs a square matrix");
  return mat_pow(f, m, f.characteristic()).is_zero();
}

Mat mat_from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const Field& f, FieldElem c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

void vec_axpy(const Field& f, Vec& a, FieldElem c, const Vec& b) {
  if (c.v == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i].v != 0) a[i] = f.add(a[i], f.mul(c, b[i]));
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](FieldElem e) { return e.v == 0; });
}

std::size_t vec_leading(const Vec& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].v != 0) return i;
  return a.size();
}

Vec EchelonSpan::reduce(const Field& f, const Vec& v) const {
  Vec out = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const FieldElem c = out[pivots_[r]];
    if (c.v != 0) vec_axpy(f, out, f.neg(c), rows_[r]);
  }
  return out;
}

bool EchelonSpan::insert(const Field& f, const Vec& v) {
  Vec w = reduce(f, v);
  const std::size_t lead = vec_leading(w);
  if (lead == w.size()) return false;
  w = vec_scale(f, f.inv(w[lead]), w);
  // Keep the basis fully reduced: clear the new pivot from existing rows.
  for (auto& row : rows_) {
    const FieldElem c = row[lead];
    if (c.v != 0) vec_axpy(f, row, f.neg(c), w);
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(w));
  return true;
}

std::optional<Vec> solve_in_span(const Field& f, const std::vector<Vec>& basis, const Vec& target) {
  const std::size_t r = basis.size();
  const std::size_t n = target.size();
  // Columns are basis vectors, last column the target.
  Mat aug(n, r + 1);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) aug(i, j) = basis[j][i];
  for (std::size_t i = 0; i < n; ++i) aug(i, r) = target[i];
  const auto pivots = mat_rref(f, aug);
  if (!pivots.empty() && pivots.back() == r) return std::nullopt;
  if (pivots.size() != r) throw std::invalid_argument("basis is linearly dependent");
  Vec coords(r);
  for (std::size_t k = 0; k < pivots.size(); ++k) coords[pivots[k]] = aug(k, r);
  return coords;
}

SpanCoordinates::SpanCoordinates(const Field& f, std::vector<Vec> basis) : basis_(std::move(basis)) {
  const std::size_t r = basis_.size();
  if (r == 0) return;
  const std::size_t n = basis_.front().size();
  // Pivot columns of the row-stacked basis pick r coordinates with an invertible minor.
  Mat rows = mat_from_rows(basis_, n);
  positions_ = mat_rref(f, rows);
  if (positions_.size() != r) throw std::invalid_argument("basis is linearly dependent");
  Mat minor(r, r);  // minor(a, b) = basis_b[position_a]
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) minor(a, b) = basis_[b][positions_[a]];
  minor_inverse_ = *mat_inverse(f, minor);
}

std::optional<Vec> SpanCoordinates::coords(const Field& f, const Vec& v) const {
  const std::size_t r = basis_.size();
  if (r == 0) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  if (v.size() != basis_.front().size()) return std::nullopt;
  Vec picked(r);
  for (std::size_t a = 0; a < r; ++a) picked[a] = v[positions_[a]];
  Vec c = mat_apply(f, minor_inverse_, picked);
  Vec back(v.size());
  for (std::size_t b = 0; b < r; ++b) vec_axpy(f, back, c[b], basis_[b]);
  if (back != v) return std::nullopt;
  return c;
}

}  // namespace satrank
