#include "satrank/lie.hpp"

#include <stdexcept>

#include "satrank/errors.hpp"

namespace satrank {

namespace {

Vec flatten(const Mat& m) { return m.data(); }

std::string vec_str(const Field& f, const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += f.to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

RestrictedLieAlgebra::RestrictedLieAlgebra(Field field, std::vector<std::string> labels,
                                           std::vector<std::vector<LieElement>> brackets,
                                           std::vector<LieElement> pmap,
                                           std::optional<std::vector<Mat>> matrix_model)
    : field_(std::move(field)), labels_(std::move(labels)), brackets_(std::move(brackets)),
      pmap_(std::move(pmap)), model_(std::move(matrix_model)) {
  const std::size_t n = labels_.size();
  if (brackets_.size() != n || pmap_.size() != n)
    throw PreconditionError("structure constant tables do not match the basis size");
  for (const auto& row : brackets_) {
    if (row.size() != n) throw PreconditionError("bracket table is not square");
    for (const auto& v : row)
      if (v.size() != n) throw PreconditionError("bracket vector has wrong length");
  }
  for (const auto& v : pmap_)
    if (v.size() != n) throw PreconditionError("p-map vector has wrong length");
  if (model_) {
    if (model_->size() != n) throw PreconditionError("matrix model size does not match the basis");
    for (const auto& m : *model_) {
      if (!m.square() || m.rows() != model_->front().rows())
        throw PreconditionError("matrix model entries must be square of one size");
      model_flat_.push_back(flatten(m));
    }
    try {
      model_coords_ = SpanCoordinates(field_, model_flat_);
    } catch (const std::invalid_argument&) {
      throw PreconditionError("matrix model is linearly dependent");
    }
  }
  const auto report = check_axioms();
  if (!report.ok()) throw PreconditionError("not a restricted Lie algebra: " + report.first_failure);
}

RestrictedLieAlgebra RestrictedLieAlgebra::from_matrices(Field field, std::vector<std::string> labels,
                                                         std::vector<Mat> basis) {
  const std::size_t n = basis.size();
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  SpanCoordinates span;
  try {
    span = SpanCoordinates(field, flat);
  } catch (const std::invalid_argument&) {
    throw PreconditionError("matrix basis is linearly dependent");
  }
  auto coords = [&](const Mat& m) -> LieElement {
    auto c = span.coords(field, flatten(m));
    if (!c) throw PreconditionError("matrix span is not closed under bracket or p-th power");
    return *c;
  };
  std::vector<std::vector<LieElement>> brackets(n, std::vector<LieElement>(n, LieElement(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      brackets[i][j] = coords(mat_commutator(field, basis[i], basis[j]));
      brackets[j][i] = vec_scale(field, field.neg(field.one()), brackets[i][j]);
    }
  std::vector<LieElement> pmap;
  for (const auto& m : basis) pmap.push_back(coords(mat_pow(field, m, field.characteristic())));
  return RestrictedLieAlgebra(std::move(field), std::move(labels), std::move(brackets), std::move(pmap),
                              std::move(basis));
}

LieElement RestrictedLieAlgebra::basis(std::size_t i) const {
  LieElement e(dim());
  e.at(i) = field_.one();
  return e;
}

LieElement RestrictedLieAlgebra::bracket(const LieElement& x, const LieElement& y) const {
  const std::size_t n = dim();
  LieElement out(n);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a].v == 0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (y[b].v == 0 || a == b) continue;
      vec_axpy(field_, out, field_.mul(x[a], y[b]), brackets_[a][b]);
    }
  }
  return out;
}

Mat RestrictedLieAlgebra::ad(const LieElement& x) const {
  const std::size_t n = dim();
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const LieElement col = bracket(x, basis(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

Mat RestrictedLieAlgebra::to_matrix(const LieElement& x) const {
  if (!model_) throw PreconditionError("algebra has no matrix model");
  const std::size_t sz = model_->front().rows();
  Mat m(sz, sz);
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i].v != 0) vec_axpy(field_, m.data(), x[i], model_flat_[i]);
  return m;
}

std::optional<LieElement> RestrictedLieAlgebra::from_matrix(const Mat& m) const {
  if (!model_) throw PreconditionError("algebra has no matrix model");
  return model_coords_.coords(field_, m.data());
}

LieElement RestrictedLieAlgebra::pmap_model(const LieElement& x) const {
  auto c = from_matrix(mat_pow(field_, to_matrix(x), field_.characteristic()));
  if (!c) throw std::logic_error("p-th power left the matrix model span");
  return *c;
}

LieElement RestrictedLieAlgebra::pmap(const LieElement& x) const {
  if (x.size() != dim()) throw PreconditionError("element has wrong dimension");
  return model_ ? pmap_model(x) : pmap_jacobson(x);
}

bool RestrictedLieAlgebra::in_nullcone(const LieElement& x) const {
  if (model_) return mat_pow(field_, to_matrix(x), field_.characteristic()).is_zero();
  return vec_is_zero(pmap_jacobson(x));
}

LieElement RestrictedLieAlgebra::jacobson_correction(const LieElement& x, const LieElement& y) const {
  const std::uint32_t p = field_.characteristic();
  // poly[d] = coefficient of t^d in ad(tx + y)^k (x).
  std::vector<LieElement> poly{x};
  for (std::uint32_t k = 0; k + 1 < p; ++k) {
    std::vector<LieElement> next(poly.size() + 1, zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] = vec_add(field_, next[d + 1], bracket(x, poly[d]));
      next[d] = vec_add(field_, next[d], bracket(y, poly[d]));
    }
    poly = std::move(next);
  }
  LieElement sum = zero();
  for (std::uint32_t i = 1; i < p; ++i) {
    if (i - 1 >= poly.size()) break;
    vec_axpy(field_, sum, field_.inv(field_.from_int(i)), poly[i - 1]);
  }
  return sum;
}

LieElement RestrictedLieAlgebra::pmap_jacobson(const LieElement& x) const {
  if (x.size() != dim()) throw PreconditionError("element has wrong dimension");
  const std::uint32_t p = field_.characteristic();
  LieElement acc = zero();
  LieElement acc_p = zero();
  bool started = false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].v == 0) continue;
    LieElement y = zero();
    y[i] = x[i];
    // (c b)^[p] = c^p b^[p]
    LieElement y_p = vec_scale(field_, field_.pow(x[i], p), pmap_[i]);
    if (!started) {
      acc = std::move(y);
      acc_p = std::move(y_p);
      started = true;
      continue;
    }
    const LieElement corr = jacobson_correction(acc, y);
    acc_p = vec_add(field_, vec_add(field_, acc_p, y_p), corr);
    acc = vec_add(field_, acc, y);
  }
  return acc_p;
}

RestrictedLieAlgebra::AxiomReport RestrictedLieAlgebra::check_axioms() const {
  AxiomReport r;
  const std::size_t n = dim();
  const auto& f = field_;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && r.first_failure.empty()) r.first_failure = what;
    flag = false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (!vec_is_zero(brackets_[i][i])) fail(r.antisymmetric, "[" + labels_[i] + "," + labels_[i] + "] != 0");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!vec_is_zero(vec_add(f, brackets_[i][j], brackets_[j][i])))
        fail(r.antisymmetric, "[" + labels_[i] + "," + labels_[j] + "] not antisymmetric");
  }

  // Jacobi is alternating once antisymmetry holds, so i < j < k suffices.
  for (std::size_t i = 0; i < n && r.jacobi; ++i)
    for (std::size_t j = i + 1; j < n && r.jacobi; ++j)
      for (std::size_t k = j + 1; k < n && r.jacobi; ++k) {
        const LieElement bi = basis(i), bj = basis(j), bk = basis(k);
        LieElement s = bracket(bi, brackets_[j][k]);
        s = vec_add(f, s, bracket(bj, brackets_[k][i]));
        s = vec_add(f, s, bracket(bk, brackets_[i][j]));
        if (!vec_is_zero(s))
          fail(r.jacobi, "Jacobi fails on (" + labels_[i] + "," + labels_[j] + "," + labels_[k] + ")");
      }

  for (std::size_t i = 0; i < n; ++i) {
    const Mat lhs = ad(pmap_[i]);
    const Mat rhs = mat_pow(f, ad(basis(i)), f.characteristic());
    if (lhs != rhs) fail(r.restricted, "ad(" + labels_[i] + "^[p]) != ad(" + labels_[i] + ")^p");
  }

  if (model_) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Mat c = mat_commutator(f, (*model_)[i], (*model_)[j]);
        if (c != to_matrix(brackets_[i][j]))
          fail(r.model_consistent, "bracket of " + labels_[i] + "," + labels_[j] + " disagrees with commutator");
      }
      const Mat pw = mat_pow(f, (*model_)[i], f.characteristic());
      if (pw != to_matrix(pmap_[i]))
        fail(r.model_consistent, "p-map of " + labels_[i] + " disagrees with matrix power " + vec_str(f, pmap_[i]));
    }
  }
  return r;
}

namespace algebras {

RestrictedLieAlgebra heisenberg(std::size_t n, const Field& field) {
  if (field.characteristic() == 2) throw PreconditionError("Heisenberg algebra requires p >= 3");
  if (n == 0) throw PreconditionError("Heisenberg algebra requires n >= 1");
  const std::size_t d = 2 * n + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
  labels.push_back("z");
  std::vector<std::vector<LieElement>> br(d, std::vector<LieElement>(d, LieElement(d)));
  for (std::size_t i = 0; i < n; ++i) {
    br[i][n + i][d - 1] = field.one();
    br[n + i][i][d - 1] = field.neg(field.one());
  }
  return RestrictedLieAlgebra(field, std::move(labels), std::move(br), std::vector<LieElement>(d, LieElement(d)));
}

RestrictedLieAlgebra sl(std::size_t n, const Field& field) {
  if (n < 2) throw PreconditionError("sl_n requires n >= 2");
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        basis.push_back(Mat::unit(field, n, i, j));
        labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Mat h(n, n);
    h(i, i) = field.one();
    h(i + 1, i + 1) = field.neg(field.one());
    basis.push_back(std::move(h));
    labels.push_back("H" + std::to_string(i + 1));
  }
  return RestrictedLieAlgebra::from_matrices(field, std::move(labels), std::move(basis));
}

RestrictedLieAlgebra gl(std::size_t n, const Field& field) {
  if (n < 1) throw PreconditionError("gl_n requires n >= 1");
  std::vector<Mat> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis.push_back(Mat::unit(field, n, i, j));
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  return RestrictedLieAlgebra::from_matrices(field, std::move(labels), std::move(basis));
}

RestrictedLieAlgebra abelian(std::size_t d, const Field& field) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= d; ++i) labels.push_back("a" + std::to_string(i));
  return RestrictedLieAlgebra(field, std::move(labels),
                              std::vector<std::vector<LieElement>>(d, std::vector<LieElement>(d, LieElement(d))),
                              std::vector<LieElement>(d, LieElement(d)));
}

RestrictedLieAlgebra torus(std::size_t d, const Field& field) {
  std::vector<std::string> labels;
  std::vector<LieElement> pmap;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back("t" + std::to_string(i + 1));
    LieElement e(d);
    e[i] = field.one();
    pmap.push_back(std::move(e));
  }
  return RestrictedLieAlgebra(field, std::move(labels),
                              std::vector<std::vector<LieElement>>(d, std::vector<LieElement>(d, LieElement(d))),
                              std::move(pmap));
}

}  // namespace algebras

}  // namespace satrank
