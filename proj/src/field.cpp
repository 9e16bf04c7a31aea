#include "satrank/field.hpp"

#include <stdexcept>

#include "satrank/errors.hpp"

namespace satrank {

namespace {

constexpr std::uint64_t kMaxTableOrder = 1u << 24;

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = lead * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(out), m, p);
}

Poly digits(std::uint32_t v, std::uint32_t p, unsigned k) {
  Poly d(k, 0);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t undigits(const Poly& d, std::uint32_t p, unsigned k) {
  std::uint32_t v = 0;
  for (unsigned i = k; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g(d + 1, 0);
      std::uint64_t rest = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Field Field::make(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1 || k > kMaxDegree)
    throw PreconditionError("extension degree " + std::to_string(k) + " outside [1, 4]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (k == 1 && p >= (1u << 31)) throw PreconditionError("prime too large");
  if (k > 1 && q > kMaxTableOrder)
    throw PreconditionError("extension field of order " + std::to_string(q) + " too large");

  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = static_cast<std::uint32_t>(q);
  if (k == 1) {
    f.modulus_ = {0, 1};
    return f;
  }

  // Smallest irreducible: scan the lower coefficients as a base-p counter whose
  // most significant digit is the x^{k-1} coefficient.
  for (std::uint64_t c = 0; c < q; ++c) {
    Poly m = digits(static_cast<std::uint32_t>(c), p, k);
    m.push_back(1);
    if (is_irreducible_mod_p(m, p)) {
      f.modulus_ = std::move(m);
      break;
    }
  }

  // Primitive element search; x is tried first but need not be primitive.
  const std::uint32_t group_order = f.q_ - 1;
  for (std::uint32_t g = 2; g < f.q_; ++g) {
    const Poly gp = digits(g, p, k);
    std::vector<std::uint32_t> exp(group_order);
    std::vector<std::uint32_t> log(f.q_, 0);
    std::vector<bool> seen(f.q_, false);
    Poly cur{1};
    bool primitive = true;
    for (std::uint32_t i = 0; i < group_order; ++i) {
      const std::uint32_t v = undigits(cur, p, k);
      if (seen[v]) {
        primitive = false;
        break;
      }
      seen[v] = true;
      exp[i] = v;
      log[v] = i;
      cur = poly_mulmod(cur, gp, f.modulus_, p);
    }
    if (primitive) {
      f.exp_ = std::move(exp);
      f.log_ = std::move(log);
      break;
    }
  }
  return f;
}

FieldElem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElem Field::element(std::uint32_t index) const {
  if (index >= q_) throw std::out_of_range("field element index out of range");
  return {index};
}

FieldElem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() > k_) throw PreconditionError("coefficient vector longer than extension degree");
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p_ + (c[i] % p_);
  return {v};
}

std::vector<std::uint32_t> Field::coeffs(FieldElem a) const { return digits(a.v, p_, k_); }

FieldElem Field::add(FieldElem a, FieldElem b) const {
  if (k_ == 1) {
    const std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
    return {static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  std::uint32_t x = a.v, y = b.v, out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * scale;
    scale *= p_;
    x /= p_;
    y /= p_;
  }
  return {out};
}

FieldElem Field::neg(FieldElem a) const {
  if (k_ == 1) return {a.v == 0 ? 0 : p_ - a.v};
  std::uint32_t x = a.v, out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    x /= p_;
  }
  return {out};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const {
  if (k_ == 1) return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  if (a.v == 0 || b.v == 0) return {0};
  std::uint32_t e = log_[a.v] + log_[b.v];
  if (e >= q_ - 1) e -= q_ - 1;
  return {exp_[e]};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.v == 0) throw std::domain_error("inverse of zero");
  if (k_ == 1) return pow(a, p_ - 2);
  const std::uint32_t l = log_[a.v];
  return {exp_[l == 0 ? 0 : q_ - 1 - l]};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string Field::to_string(FieldElem a) const {
  if (k_ == 1) return std::to_string(a.v);
  std::string s = "[";
  const auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

}  // namespace satrank
