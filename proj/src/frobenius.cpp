#include "satrank/frobenius.hpp"

#include <thread>

#include "satrank/errors.hpp"

namespace satrank {

bool is_nil_pair(const Field& f, const NilPair& a) {
  const auto ok = [&](const Mat& m) {
    return m.square() && f.is_zero(mat_trace(f, m)) && mat_pow(f, m, f.characteristic()).is_zero();
  };
  return a.alpha0.rows() == a.alpha1.rows() && ok(a.alpha0) && ok(a.alpha1) &&
         mat_commutator(f, a.alpha0, a.alpha1).is_zero();
}

NilPair make_nil_pair(const Field& f, Mat alpha0, Mat alpha1) {
  NilPair a{std::move(alpha0), std::move(alpha1)};
  if (!is_nil_pair(f, a)) throw PreconditionError("not a commuting pair of traceless p-nilpotent matrices");
  return a;
}

OneParamSubgroup make_one_param(const Field& f, NilPair pair) {
  if (!is_nil_pair(f, pair)) throw PreconditionError("not a commuting pair of traceless p-nilpotent matrices");
  const std::size_t n = pair.alpha0.rows();
  return {std::move(pair), n, f.characteristic()};
}

Mat trunc_exp(const Field& f, const Mat& x) {
  if (!mat_is_p_nilpotent(f, x)) throw PreconditionError("truncated exponential needs x^p = 0");
  const std::uint32_t p = f.characteristic();
  Mat out = Mat::identity(f, x.rows());
  Mat term = Mat::identity(f, x.rows());
  FieldElem inv_fact = f.one();
  for (std::uint32_t i = 1; i < p; ++i) {
    term = mat_mul(f, term, x);
    if (term.is_zero()) break;
    inv_fact = f.div(inv_fact, f.from_int(i));
    out = mat_add(f, out, mat_scale(f, inv_fact, term));
  }
  return out;
}

Mat eval_one_param(const Field& f, const OneParamSubgroup& u, FieldElem s) {
  return mat_mul(f, trunc_exp(f, mat_scale(f, s, u.pair.alpha0)),
                 trunc_exp(f, mat_scale(f, f.frobenius(s), u.pair.alpha1)));
}

HomomorphismSweep sweep_homomorphism(const Field& f, const OneParamSubgroup& u, unsigned threads) {
  const std::uint32_t q = f.order();
  std::vector<Mat> values;
  values.reserve(q);
  for (std::uint32_t s = 0; s < q; ++s) values.push_back(eval_one_param(f, u, f.element(s)));

  const unsigned workers = std::max(1u, std::min(threads, q));
  std::vector<HomomorphismSweep> parts(workers);
  auto shard = [&](unsigned w) {
    auto& part = parts[w];
    for (std::uint32_t s = w; s < q; s += workers) {
      part.special = part.special && f.is_one(mat_det(f, values[s]));
      for (std::uint32_t t = 0; t < q; ++t) {
        ++part.pairs;
        const std::uint32_t sum = f.add(f.element(s), f.element(t)).v;
        if (mat_mul(f, values[s], values[t]) != values[sum]) ++part.failures;
      }
    }
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w);
    for (auto& t : pool) t.join();
  }
  HomomorphismSweep out;
  for (const auto& part : parts) {
    out.pairs += part.pairs;
    out.failures += part.failures;
    out.special = out.special && part.special;
  }
  return out;
}

UeData u_e_data(std::size_t n, const Field& f) {
  if (n < 2) throw PreconditionError("u_e needs n >= 2");
  if (f.characteristic() < n) throw PreconditionError("u_e needs p >= n");
  UeData out;
  out.e = Mat(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) out.e(i, i + 1) = f.one();
  Mat power = out.e;
  for (std::size_t k = 1; k < n; ++k) {
    out.basis.push_back(power);
    power = mat_mul(f, power, out.e);
  }
  out.v2_dim = 2 * out.basis.size();
  return out;
}

std::size_t complexity(const ElemAbComplexity& e) {
  std::size_t total = e.etale_rank;
  for (std::size_t i = 0; i < e.multiplicities.size(); ++i) total += e.multiplicities[i] * (i + 1);
  return total;
}

std::size_t restricted_complexity(const ElemAbComplexity& e) {
  std::size_t total = 0;
  for (auto l : e.multiplicities) total += l;
  return total;
}

std::size_t srk_height_bound(std::size_t r, std::size_t srk1) {
  if (r == 0) throw PreconditionError("height must be at least 1");
  return r * srk1;
}

bool is_regular_nilpotent(const Field& f, const Mat& x) {
  if (!x.square()) return false;
  const std::size_t n = x.rows();
  Mat power = x;
  for (std::size_t k = 1; k <= n; ++k) {
    if (mat_rank(f, power) != n - k) return false;
    power = mat_mul(f, power, x);
  }
  return true;
}

Sln2Srk srk_sln2(std::size_t n, std::uint32_t p) {
  if (n < 2) throw PreconditionError("srk_sln2 needs n >= 2");
  if (p < n) throw PreconditionError("srk_sln2 needs p >= n");
  const Field f = Field::make(p);
  Sln2Srk out;
  out.u_e = u_e_data(n, f);
  const Mat& e = out.u_e.e;
  out.witness = make_nil_pair(f, e, mat_add(f, e, mat_mul(f, e, e)));
  out.witness_regular = is_regular_nilpotent(f, out.witness.alpha1);
  out.subgroup.multiplicities = {0, n - 1};
  out.rank = complexity(out.subgroup);
  return out;
}

}  // namespace satrank
