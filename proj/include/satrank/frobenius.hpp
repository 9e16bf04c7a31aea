#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "satrank/field.hpp"
#include "satrank/matrix.hpp"

namespace satrank {

/// Commuting pair of traceless p-nilpotent matrices: a point of the nilpotent
/// commuting variety of sl_n, i.e. a one-parameter subgroup of SL_n(2).
struct NilPair {
  Mat alpha0;
  Mat alpha1;
};

bool is_nil_pair(const Field& f, const NilPair& a);
/// Throws PreconditionError unless the pair is valid.
NilPair make_nil_pair(const Field& f, Mat alpha0, Mat alpha1);

struct OneParamSubgroup {
  NilPair pair;
  std::size_t n = 0;
  std::uint32_t p = 0;
};

OneParamSubgroup make_one_param(const Field& f, NilPair pair);

/// sum_{i<p} x^i / i!. Throws PreconditionError unless x is square and x^p = 0.
Mat trunc_exp(const Field& f, const Mat& x);

/// exp(s alpha0) · exp(s^p alpha1).
Mat eval_one_param(const Field& f, const OneParamSubgroup& u, FieldElem s);

struct HomomorphismSweep {
  std::uint64_t pairs = 0;
  std::uint64_t failures = 0;
  /// det = 1 at every s.
  bool special = true;
  bool ok() const { return failures == 0 && special; }
};

/// Checks exp_a(s + t) = exp_a(s) exp_a(t) for every (s, t) in the field,
/// sharding s across threads.
HomomorphismSweep sweep_homomorphism(const Field& f, const OneParamSubgroup& u, unsigned threads = 1);

struct UeData {
  /// Regular nilpotent single Jordan block.
  Mat e;
  /// e, e^2, ..., e^{n-1}.
  std::vector<Mat> basis;
  std::size_t v2_dim = 0;
};

/// u_e = span{e, ..., e^{n-1}} and dim V_2(U_e) = 2 dim u_e. Throws
/// PreconditionError for n < 2 or p < n.
UeData u_e_data(std::size_t n, const Field& f);

/// Multiplicities l_i of G_a(i) factors plus the rank of the etale part.
struct ElemAbComplexity {
  std::vector<std::size_t> multiplicities;
  std::size_t etale_rank = 0;
};

/// sum_i l_i · i + etale rank.
std::size_t complexity(const ElemAbComplexity& e);
/// Complexity of the first Frobenius kernel: sum_i l_i (the etale part has trivial kernel).
std::size_t restricted_complexity(const ElemAbComplexity& e);

/// r · srk1. Throws PreconditionError for r = 0.
std::size_t srk_height_bound(std::size_t r, std::size_t srk1);

struct Sln2Srk {
  std::size_t rank = 0;
  /// (e, e + e^2).
  NilPair witness;
  bool witness_regular = false;
  UeData u_e;
  /// G_a(2)^{n-1}: l = (0, n-1).
  ElemAbComplexity subgroup;
};

/// srk(SL_n(2)) = 2(n-1) with its witness data. Throws PreconditionError
/// unless n >= 2 and p >= n.
Sln2Srk srk_sln2(std::size_t n, std::uint32_t p);

/// True iff rank(x^k) = n - k for k = 1..n, i.e. x is regular nilpotent.
bool is_regular_nilpotent(const Field& f, const Mat& x);

}  // namespace satrank
