#include "satrank/sln.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "satrank/errors.hpp"

namespace satrank {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("partition needs at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw PreconditionError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::size_t Partition::nontrivial_parts() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](unsigned x) { return x >= 2; }));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out + ")";
}

namespace {

void partitions_rec(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_partitions(unsigned n) {
  if (n == 0) throw PreconditionError("partitions of 0 are not represented");
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.n() != lambda.n()) throw PreconditionError("dominance compares partitions of the same n");
  unsigned sm = 0, sl = 0;
  for (std::size_t i = 0; i < std::max(mu.length(), lambda.length()); ++i) {
    sm += i < mu.length() ? mu[i] : 0;
    sl += i < lambda.length() ? lambda[i] : 0;
    if (sm > sl) return false;
  }
  return true;
}

std::size_t block_position(const Partition& lambda, std::size_t block, unsigned m) {
  std::size_t offset = 0;
  for (std::size_t b = 0; b < block; ++b) offset += lambda[b];
  return offset + (lambda[block] - 1 - m);
}

Mat jordan_matrix(const Partition& lambda, const Field& field) {
  Mat x(lambda.n(), lambda.n());
  for (std::size_t b = 0; b < lambda.length(); ++b)
    for (unsigned m = 0; m + 1 < lambda[b]; ++m) x(block_position(lambda, b, m + 1), block_position(lambda, b, m)) = field.one();
  return x;
}

Partition nullcone_top_partition(unsigned n, unsigned p) {
  if (n == 0) throw PreconditionError("n must be positive");
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  std::vector<unsigned> parts(n / p, p);
  if (n % p) parts.push_back(n % p);
  return Partition(std::move(parts));
}

bool xi_in_bounds(const Partition& lambda, const XiElement& x) {
  if (x.i >= lambda.length() || x.j >= lambda.length()) return false;
  const unsigned li = lambda[x.i], lj = lambda[x.j];
  return x.s >= (lj > li ? lj - li : 0) && x.s < lj;
}

std::string xi_label(const XiElement& x) {
  return "xi_" + std::to_string(x.i + 1) + "^{" + std::to_string(x.j + 1) + "," + std::to_string(x.s) + "}";
}

void XiCombination::add(const Field& f, const XiElement& x, FieldElem c) {
  if (f.is_zero(c)) return;
  auto [it, inserted] = terms.emplace(x, c);
  if (inserted) return;
  it->second = f.add(it->second, c);
  if (f.is_zero(it->second)) terms.erase(it);
}

void XiCombination::add(const Field& f, const XiCombination& other, FieldElem c) {
  for (const auto& [x, a] : other.terms) add(f, x, f.mul(a, c));
}

std::vector<XiElement> xi_basis(const Partition& lambda) {
  std::vector<XiElement> out;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (std::size_t j = 0; j < lambda.length(); ++j)
      for (unsigned s = 0; s < lambda[j]; ++s)
        if (xi_in_bounds(lambda, {i, j, s})) out.push_back({i, j, s});
  return out;
}

namespace {

void require_bounds(const Partition& lambda, const XiElement& x) {
  if (!xi_in_bounds(lambda, x))
    throw PreconditionError(xi_label(x) + " is not a centralizer symbol for " + lambda.to_string());
}

XiCombination monomial(const Partition& lambda, const Field& f, const XiElement& x) {
  return xi_in_bounds(lambda, x) ? XiCombination::single(x, f.one()) : XiCombination{};
}

}  // namespace

XiCombination xi_compose(const Partition& lambda, const Field& f, const XiElement& a, const XiElement& b) {
  require_bounds(lambda, a);
  require_bounds(lambda, b);
  if (b.j != a.i) return {};
  return monomial(lambda, f, {b.i, a.j, a.s + b.s});
}

XiCombination xi_bracket(const Partition& lambda, const Field& f, const XiElement& a, const XiElement& b) {
  XiCombination out = xi_compose(lambda, f, a, b);
  out.add(f, xi_compose(lambda, f, b, a), f.neg(f.one()));
  return out;
}

XiCombination xi_mul(const Partition& lambda, const Field& f, const XiCombination& a, const XiCombination& b) {
  XiCombination out;
  for (const auto& [x, cx] : a.terms)
    for (const auto& [y, cy] : b.terms) out.add(f, xi_compose(lambda, f, x, y), f.mul(cx, cy));
  return out;
}

Mat xi_to_matrix(const Partition& lambda, const XiCombination& x, const Field& f) {
  Mat m(lambda.n(), lambda.n());
  for (const auto& [xi, c] : x.terms) {
    require_bounds(lambda, xi);
    for (unsigned k = 0; k < lambda[xi.i] && k + xi.s < lambda[xi.j]; ++k) {
      auto& entry = m(block_position(lambda, xi.j, k + xi.s), block_position(lambda, xi.i, k));
      entry = f.add(entry, c);
    }
  }
  return m;
}

Mat xi_to_matrix(const Partition& lambda, const XiElement& x, const Field& f) {
  return xi_to_matrix(lambda, XiCombination::single(x, f.one()), f);
}

TracelessCentralizer centralizer_sl_basis(const Partition& lambda, const Field& field) {
  TracelessCentralizer out;
  const std::uint32_t p = field.characteristic();
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < lambda.length(); ++i)
    if (lambda[i] % p != 0) pivot = i;
  for (const auto& x : xi_basis(lambda))
    if (x.i != x.j || x.s > 0 || !pivot) out.basis.push_back(XiCombination::single(x, field.one()));
  if (!pivot) {
    out.degenerate = true;
    return out;
  }
  const FieldElem lp = field.from_int(lambda[*pivot]);
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i == *pivot) continue;
    XiCombination c = XiCombination::single({i, i, 0}, field.one());
    c.add(field, XiElement{*pivot, *pivot, 0}, field.neg(field.div(field.from_int(lambda[i]), lp)));
    out.basis.push_back(std::move(c));
  }
  return out;
}

namespace {

OrbitWitness from_xi(const Partition& lambda, std::string construction, std::vector<XiCombination> xi,
                     const Field& f) {
  OrbitWitness w{lambda, std::move(construction), std::move(xi), {}};
  for (const auto& c : w.xi) w.matrices.push_back(xi_to_matrix(lambda, c, f));
  return w;
}

std::vector<XiCombination> singles(const Field& f, const std::vector<XiElement>& xs) {
  std::vector<XiCombination> out;
  for (const auto& x : xs) out.push_back(XiCombination::single(x, f.one()));
  return out;
}

bool is_hook_or_zero(const Partition& lambda) {
  return lambda.nontrivial_parts() == 0 || (lambda.nontrivial_parts() == 1 && lambda[0] == 2);
}

}  // namespace

OrbitWitness regular_witness(unsigned n, const Field& field) {
  if (n < 2) throw PreconditionError("regular witness needs n >= 2");
  const Partition lambda({n});
  std::vector<XiElement> xs;
  for (unsigned s = 1; s < n; ++s) xs.push_back({0, 0, s});
  return from_xi(lambda, "regular-powers", singles(field, xs), field);
}

std::vector<OrbitWitness> subregular_witnesses(unsigned n, unsigned p, const Field& field) {
  if (n < 3) throw PreconditionError("subregular witnesses need n >= 3");
  if (p != field.characteristic()) throw PreconditionError("p must be the field characteristic");
  if (p + 1 < n) throw PreconditionError("subregular witnesses need p >= n - 1");
  const Partition tau({n - 1, 1});
  std::vector<XiElement> powers;
  for (unsigned s = 1; s + 2 <= n; ++s) powers.push_back({0, 0, s});
  const XiElement up{0, 1, 0};       // xi_1^{2,0}
  const XiElement down{1, 0, n - 2};  // xi_2^{1,n-2}

  std::vector<OrbitWitness> out;
  auto emit = [&](const XiCombination& last, const std::string& name) {
    auto xi = singles(field, powers);
    xi.push_back(last);
    out.push_back(from_xi(tau, name, std::move(xi), field));
  };
  if (n == 3 && p == 2) {
    emit(XiCombination::single(up, field.one()), "subregular-char2-up");
    emit(XiCombination::single(down, field.one()), "subregular-char2-down");
    return out;
  }
  emit(XiCombination::single(down, field.one()), "subregular-P1(0:1)");
  for (std::uint32_t b = 0; b < field.order(); ++b) {
    XiCombination c = XiCombination::single(up, field.one());
    c.add(field, down, field.element(b));
    emit(c, "subregular-P1(1:" + field.to_string(field.element(b)) + ")");
  }
  return out;
}

namespace {

void require_lower(const Partition& lambda, unsigned p) {
  const unsigned n = lambda.n();
  if (n < 4 || !dominance_leq(lambda, Partition({n - 2, 2})))
    throw PreconditionError(lambda.to_string() + " is not dominated by (n-2,2)");
  if (p < std::max(2u, n - 2)) throw PreconditionError("lower-orbit witnesses need p >= max(2, n-2)");
}

// The three-case construction without the range check on p.
OrbitWitness case_construction(const Partition& lambda, const Field& field) {
  const std::size_t t = lambda.length();
  const std::size_t s = lambda.nontrivial_parts();
  const std::size_t ones = t - s;

  std::vector<XiCombination> xi;
  auto push = [&](std::size_t i, std::size_t j, unsigned sh) { xi.push_back(XiCombination::single({i, j, sh}, field.one())); };
  for (std::size_t i = 0; i < s; ++i)
    for (unsigned r = 1; r < lambda[i]; ++r) push(i, i, r);

  if (ones == 0) {
    for (std::size_t i = 0; i + 1 < t; ++i) push(i, i + 1, lambda[i + 1] - 1);
    push(t - 1, 0, lambda[0] - 1);
    return from_xi(lambda, "all-parts-at-least-2", std::move(xi), field);
  }
  if (ones == 1) {
    for (std::size_t i = 0; i + 1 < s; ++i) push(i, i + 1, lambda[i + 1] - 1);
    push(t - 1, s - 1, lambda[s - 1] - 1);
    push(t - 1, 0, lambda[0] - 1);
    return from_xi(lambda, "one-part-1", std::move(xi), field);
  }
  if (s == 0) throw PreconditionError("the case construction degenerates for (1^n); use the nilradical witness");
  // Shift among the 1-blocks: v_{s+i+1} -> v_{s+i}, 1-based, for i = 1..t-s-1.
  XiCombination shift;
  for (std::size_t i = 1; i + 1 <= ones; ++i) shift.add(field, XiElement{s + i, s + i - 1, 0}, field.one());
  XiCombination power = shift;
  for (std::size_t k = 1; k + 1 <= ones; ++k) {
    xi.push_back(power);
    power = xi_mul(lambda, field, power, shift);
  }
  for (std::size_t i = 0; i < s; ++i) push(i, i + 1, lambda[i + 1] - 1);
  push(t - 1, 0, lambda[0] - 1);
  return from_xi(lambda, "several-parts-1", std::move(xi), field);
}

}  // namespace

OrbitWitness lower_orbit_case_witness(const Partition& lambda, unsigned p, const Field& field) {
  require_lower(lambda, p);
  return case_construction(lambda, field);
}

OrbitWitness nilradical_witness(const Partition& lambda, const Field& field) {
  const unsigned n = lambda.n();
  if (n < 2 || !is_hook_or_zero(lambda))
    throw PreconditionError("nilradical witness is defined for (2,1^{n-2}) and (1^n)");
  const unsigned rows = (n + 1) / 2;
  std::vector<std::size_t> R, C;
  if (lambda[0] == 2) {
    // R = {0, 2, ..., rows}, C = {1} ∪ {rows+1, ..., n-1}.
    R.push_back(0);
    for (std::size_t r = 2; R.size() < rows; ++r) R.push_back(r);
    C.push_back(1);
    for (std::size_t c = rows + 1; c < n; ++c) C.push_back(c);
  } else {
    for (std::size_t r = 0; r < rows; ++r) R.push_back(r);
    for (std::size_t c = rows; c < n; ++c) C.push_back(c);
  }
  OrbitWitness w{lambda, "balanced-nilradical", {}, {}};
  for (auto r : R)
    for (auto c : C) w.matrices.push_back(Mat::unit(field, n, r, c));
  return w;
}

OrbitWitness lower_orbit_witness(const Partition& lambda, unsigned p, const Field& field) {
  require_lower(lambda, p);
  if (lambda.nontrivial_parts() == 0) return nilradical_witness(lambda, field);
  OrbitWitness w = lower_orbit_case_witness(lambda, p, field);
  if (is_hook_or_zero(lambda)) {
    OrbitWitness nil = nilradical_witness(lambda, field);
    if (nil.dim() > w.dim()) return nil;
  }
  return w;
}

namespace {

std::vector<Vec> flattened(const std::vector<Mat>& ms) {
  std::vector<Vec> out;
  for (const auto& m : ms) out.push_back(m.data());
  return out;
}

}  // namespace

WitnessCheck check_witness(const OrbitWitness& w, const Field& f, const RestrictedLieAlgebra* sl_n) {
  WitnessCheck c;
  const Mat x = jordan_matrix(w.lambda, f);
  const std::size_t nn = x.rows() * x.cols();
  const auto flat = flattened(w.matrices);
  c.independent = flat.empty() || mat_rank(f, mat_from_rows(flat, nn)) == flat.size();
  c.commuting = c.p_nilpotent = c.traceless = c.centralizes = true;
  for (std::size_t a = 0; a < w.matrices.size(); ++a) {
    const Mat& m = w.matrices[a];
    c.p_nilpotent = c.p_nilpotent && mat_is_p_nilpotent(f, m);
    c.traceless = c.traceless && f.is_zero(mat_trace(f, m));
    c.centralizes = c.centralizes && mat_commutator(f, m, x).is_zero();
    for (std::size_t b = a + 1; b < w.matrices.size(); ++b)
      c.commuting = c.commuting && mat_commutator(f, m, w.matrices[b]).is_zero();
  }
  if (x.is_zero()) {
    c.contains_x = true;
  } else if (c.independent) {
    auto rows = flat;
    rows.push_back(x.data());
    c.contains_x = mat_rank(f, mat_from_rows(rows, nn)) == flat.size();
  }
  if (sl_n) {
    bool ok = true;
    std::vector<LieElement> basis;
    for (const auto& m : w.matrices) {
      auto v = sl_n->from_matrix(m);
      if (!v) {
        ok = false;
        break;
      }
      basis.push_back(std::move(*v));
    }
    c.elementary_in_sl = ok && is_elementary(*sl_n, basis);
  }
  return c;
}

ElementarySubalgebra to_subalgebra(const RestrictedLieAlgebra& g, const OrbitWitness& w) {
  ElementarySubalgebra e;
  for (const auto& m : w.matrices) {
    auto v = g.from_matrix(m);
    if (!v) throw PreconditionError("witness matrix lies outside the algebra");
    e.basis.push_back(std::move(*v));
  }
  return e;
}

std::string to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::regular:
      return "regular";
    case OrbitKind::subregular:
      return "subregular";
    case OrbitKind::lower:
      return "lower";
  }
  return "?";
}

std::string to_string(SrkProvenance p) {
  switch (p) {
    case SrkProvenance::closed_form:
      return "closed_form";
    case SrkProvenance::strict_lower_bound:
      return "strict_lower_bound";
    case SrkProvenance::derived_lower_bound:
      return "derived_lower_bound";
  }
  return "?";
}

namespace {

// Validated witnesses available for a lower orbit at any p.
std::vector<OrbitWitness> lower_candidates(const Partition& lambda, unsigned p, const Field& f) {
  std::vector<OrbitWitness> out;
  const unsigned n = lambda.n();
  if (p >= std::max(2u, n - 2)) {
    out.push_back(lower_orbit_witness(lambda, p, f));
  } else {
    // p < max(2, n-2): no guarantee, so try every construction and keep those that validate.
    if (lambda.nontrivial_parts() > 0) out.push_back(case_construction(lambda, f));
    if (is_hook_or_zero(lambda)) out.push_back(nilradical_witness(lambda, f));
  }
  std::erase_if(out, [&](const OrbitWitness& w) { return !check_witness(w, f).ok(); });
  return out;
}

}  // namespace

std::vector<OrbitRow> orbit_table(unsigned n, unsigned p, const Field& field) {
  if (n < 2) throw PreconditionError("orbit table needs n >= 2");
  if (p != field.characteristic()) throw PreconditionError("p must be the field characteristic");
  std::vector<OrbitRow> rows;
  for (const auto& lambda : all_partitions(n)) {
    if (lambda[0] > p || lambda.nontrivial_parts() == 0) continue;
    OrbitRow row{lambda, OrbitKind::lower, 0, false, {}};
    std::vector<OrbitWitness> ws;
    if (lambda.length() == 1) {
      row.kind = OrbitKind::regular;
      row.exact = true;
      ws.push_back(regular_witness(n, field));
    } else if (lambda.length() == 2 && lambda[1] == 1 && n >= 3) {
      row.kind = OrbitKind::subregular;
      row.exact = true;
      ws = subregular_witnesses(n, p, field);
    } else {
      ws = lower_candidates(lambda, p, field);
    }
    for (const auto& w : ws) {
      if (!check_witness(w, field).ok()) throw std::logic_error("witness for " + lambda.to_string() + " failed validation");
      row.witness_dims.push_back(w.dim());
      row.witness_rank = std::max(row.witness_rank, w.dim());
    }
    if (ws.empty()) row.witness_rank = 1;  // span{x_lambda}
    rows.push_back(std::move(row));
  }
  return rows;
}

SlnSrk srk_sln(unsigned n, unsigned p) {
  if (n < 2) throw PreconditionError("srk_sln needs n >= 2");
  const Field f = Field::make(p);
  SlnSrk out{0, SrkProvenance::closed_form, false, nullcone_top_partition(n, p), ""};
  if (p + 1 >= n) {
    out.rank = n - 1;
    out.note = p >= n ? "p >= n: srk equals the semisimple rank n-1"
                      : "p = n-1: the nullcone is the closure of the subregular orbit, srk = n-1";
    return out;
  }
  const auto ws = lower_candidates(out.top, p, f);
  std::size_t best = 1;
  for (const auto& w : ws) best = std::max(best, w.dim());
  out.rank = best;
  if (p + 2 == n) {
    out.provenance = SrkProvenance::strict_lower_bound;
    out.strict_inequality = best > n - 1;
    out.note = "p = n-2: srk >= " + std::to_string(best) + " from a validated witness at " + out.top.to_string() +
               ", exceeding the semisimple rank";
  } else {
    out.provenance = SrkProvenance::derived_lower_bound;
    out.strict_inequality = best > n - 1;
    out.note = "p < n-2: srk >= " + std::to_string(best) + " from the best validated witness at " +
               out.top.to_string() + "; not covered by a closed form";
  }
  return out;
}

std::vector<Partition> o_rmin_sln(unsigned n, unsigned p) {
  if (n < 3 || p < n) throw PreconditionError("O_rmin classification needs n >= 3 and p >= n");
  const Field f = Field::make(p);
  std::vector<Partition> out;
  for (const auto& row : orbit_table(n, p, f)) {
    if (row.exact && row.witness_rank == n - 1) {
      out.push_back(row.partition);
    } else if (row.witness_rank <= n - 1) {
      throw std::logic_error("orbit " + row.partition.to_string() + " has no witness of dimension > n-1");
    }
  }
  return out;
}

}  // namespace satrank
