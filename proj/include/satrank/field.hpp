#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace satrank {

/// Element of F_{p^k}. The value is the base-p integer whose digits are the
/// coefficients in the power basis 1, x, ..., x^{k-1} of the field modulus
/// (constant term = least significant digit). Only meaningful together with
/// the Field that produced it.
struct FieldElem {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// Arithmetic context for F_{p^k}, 1 <= k <= 4.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree k, comparing coefficient lists from the leading term down; for
/// k = 1 it is the trivial modulus x. Prime fields use direct modular
/// arithmetic, extensions use exp/log tables over a primitive element.
class Field {
 public:
  static constexpr unsigned kMaxDegree = 4;

  /// Throws PreconditionError if p is not prime or k is outside [1, 4].
  static Field make(std::uint32_t p, unsigned k = 1);

  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Monic modulus coefficients, constant term first, length k + 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t n) const;
  /// Element by its index in [0, q).
  FieldElem element(std::uint32_t index) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElem a) const;

  bool is_zero(FieldElem a) const { return a.v == 0; }
  bool is_one(FieldElem a) const { return a.v == 1; }
  /// True iff a lies in the prime subfield F_p.
  bool in_prime_subfield(FieldElem a) const { return a.v < p_; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  /// Throws std::domain_error on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// Frobenius a -> a^p.
  FieldElem frobenius(FieldElem a) const { return pow(a, p_); }

  /// "3" for prime fields, "[c0,c1,...]" otherwise.
  std::string to_string(FieldElem a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  Field() = default;

  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  // Extension fields only: exp_[i] = g^i for 0 <= i < q-1, log_[exp_[i]] = i.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

/// True iff the monic polynomial with the given coefficients (constant term
/// first, leading 1 included) has no monic factor of degree 1..deg/2 over F_p.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace satrank
