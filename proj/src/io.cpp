#include "satrank/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "satrank/errors.hpp"

namespace satrank::io {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void dump_into(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (!j.is_structured() || j.empty() || scalar_array(j)) {
    out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
    return;
  }
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    dump_into(*it, out, indent + 2);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(static_cast<std::size_t>(indent), ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_into(j, out, 0);
  return out + "\n";
}

namespace {

// Schema accessors: every failure is an InputError naming the offending key.
const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

std::uint64_t uint_at(const Json& j, const char* key) { return as_uint(field_of(j, key), key); }

const Json& array_at(const Json& j, const char* key) {
  const Json& a = field_of(j, key);
  if (!a.is_array()) throw InputError(std::string("\"") + key + "\" must be an array");
  return a;
}

Json coeffs_json(const Field& f, FieldElem a) {
  Json out = Json::array();
  for (auto c : f.coeffs(a)) out.push_back(c);
  return out;
}

// [{"k", "c"}] -> dense vector; repeated indices accumulate.
Vec sparse_from_json(const Field& f, const Json& terms, std::size_t dim) {
  if (!terms.is_array()) throw InputError("\"out\" must be an array of {k, c} terms");
  Vec v(dim);
  for (const auto& t : terms) {
    const auto k = uint_at(t, "k");
    if (k >= dim) throw InputError("term index " + std::to_string(k) + " out of range");
    v[k] = f.add(v[k], elem_from_json(f, field_of(t, "c")));
  }
  return v;
}

Json sparse_to_json(const Field& f, const Vec& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k].v) out.push_back(Json{{"k", k}, {"c", coeffs_json(f, v[k])}});
  return out;
}

// Nested rows when the outer length equals the first row's length, otherwise
// one flat row-major list. The only ambiguous shape, a flat 2x2 over F_{p^4}
// with full coefficient arrays, reads as nested; write such matrices nested.
Mat matrix_from_json(const Field& f, const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a non-empty array");
  if (j.front().is_array() && j.front().size() == j.size()) {
    const std::size_t n = j.size();
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!j[r].is_array() || j[r].size() != n) throw InputError("matrix rows must have equal length");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = elem_from_json(f, j[r][c]);
    }
    return m;
  }
  const std::size_t len = j.size();
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(len))));
  if (n * n != len) throw InputError("row-major matrix length " + std::to_string(len) + " is not a square");
  Mat m(n, n);
  for (std::size_t i = 0; i < len; ++i) m.data()[i] = elem_from_json(f, j[i]);
  return m;
}

unsigned parse_suffix(const std::string& name, const std::string& prefix) {
  const std::string digits = name.substr(prefix.size());
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw InputError("builtin \"" + name + "\" needs a numeric parameter after \"" + prefix + "\"");
  return v;
}

bool has_prefix(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Json perm_list(const std::vector<Perm>& ps) {
  Json out = Json::array();
  for (const auto& g : ps) out.push_back(g);
  return out;
}

Json elementary_json(const Field& f, const ElementarySubalgebra& e) {
  Json basis = Json::array();
  for (const auto& v : e.basis) basis.push_back(vec_to_json(f, v));
  return basis;
}

}  // namespace

Json elem_to_json(const Field& f, FieldElem a) {
  if (f.degree() == 1) return a.v;
  return coeffs_json(f, a);
}

FieldElem elem_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) {
    return f.from_int(j.get<std::int64_t>());
  }
  if (j.is_array()) {
    if (j.size() > f.degree()) throw InputError("coefficient vector longer than the extension degree");
    std::vector<std::uint32_t> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InputError("coefficients must be integers");
      const auto v = x.get<std::int64_t>();
      const auto p = static_cast<std::int64_t>(f.characteristic());
      c.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
    }
    return f.from_coeffs(c);
  }
  throw InputError("field element must be an integer or a coefficient array");
}

Json vec_to_json(const Field& f, const Vec& v) {
  Json out = Json::array();
  for (auto a : v) out.push_back(elem_to_json(f, a));
  return out;
}

Json mat_to_json(const Field& f, const Mat& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(f, m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_string(const std::string& text) {
  std::vector<unsigned> parts;
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') s += c;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto end = std::min(s.find(',', start), s.size());
    const std::string tok = s.substr(start, end - start);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InputError("partition \"" + text + "\" must be comma-separated positive integers");
    parts.push_back(v);
    start = end + 1;
  }
  return Partition(std::move(parts));
}

GroupInput group_from_json(const Json& j) {
  const auto degree = uint_at(j, "degree");
  const auto p = uint_at(j, "p");
  std::vector<Perm> gens;
  for (const auto& g : array_at(j, "generators")) {
    if (!g.is_array()) throw InputError("each generator must be an image array");
    Perm perm;
    for (const auto& x : g) perm.push_back(static_cast<std::uint32_t>(as_uint(x, "permutation image")));
    gens.push_back(std::move(perm));
  }
  return {PermGroup(degree, std::move(gens)), static_cast<unsigned>(p)};
}

Json group_to_json(const PermGroup& g, unsigned p) {
  return Json{{"degree", g.degree()}, {"generators", perm_list(g.generators())}, {"p", p}};
}

RestrictedLieAlgebra lie_from_json(const Json& j) {
  const auto p = uint_at(j, "p");
  const auto k = j.contains("k") ? uint_at(j, "k") : 1;
  const Field f = Field::make(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  const auto dim = uint_at(j, "dim");
  if (dim == 0) throw InputError("dim must be positive");

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : array_at(j, "labels")) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != dim) throw InputError("labels has " + std::to_string(labels.size()) + " entries, dim is " +
                                               std::to_string(dim));
  } else {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("b" + std::to_string(i));
  }

  std::vector<std::vector<LieElement>> br(dim, std::vector<LieElement>(dim, LieElement(dim)));
  std::vector<std::vector<bool>> given(dim, std::vector<bool>(dim, false));
  if (j.contains("brackets")) {
    for (const auto& b : array_at(j, "brackets")) {
      const auto i = uint_at(b, "i"), jj = uint_at(b, "j");
      if (i >= dim || jj >= dim) throw InputError("bracket index out of range");
      if (given[i][jj]) throw InputError("bracket (" + std::to_string(i) + "," + std::to_string(jj) + ") listed twice");
      br[i][jj] = sparse_from_json(f, field_of(b, "out"), dim);
      given[i][jj] = true;
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t jj = 0; jj < dim; ++jj)
      if (given[i][jj] && !given[jj][i]) br[jj][i] = vec_scale(f, f.neg(f.one()), br[i][jj]);

  std::vector<LieElement> pmap(dim, LieElement(dim));
  if (j.contains("pmap")) {
    for (const auto& e : array_at(j, "pmap")) {
      const auto i = uint_at(e, "i");
      if (i >= dim) throw InputError("pmap index out of range");
      pmap[i] = sparse_from_json(f, field_of(e, "out"), dim);
    }
  }

  std::optional<std::vector<Mat>> model;
  if (j.contains("matrix_model") && !j["matrix_model"].is_null()) {
    std::vector<Mat> ms;
    for (const auto& m : array_at(j, "matrix_model")) ms.push_back(matrix_from_json(f, m));
    if (ms.size() != dim) throw InputError("matrix_model needs one matrix per basis vector");
    for (const auto& m : ms)
      if (m.rows() != ms.front().rows()) throw InputError("matrix_model matrices differ in size");
    model = std::move(ms);
  }
  return RestrictedLieAlgebra(f, std::move(labels), std::move(br), std::move(pmap), std::move(model));
}

Json lie_to_json(const RestrictedLieAlgebra& g) {
  const Field& f = g.field();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!vec_is_zero(g.structure(i, j)))
        brackets.push_back(Json{{"i", i}, {"j", j}, {"out", sparse_to_json(f, g.structure(i, j))}});
  Json pmap = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!vec_is_zero(g.pmap_of_basis(i)))
      pmap.push_back(Json{{"i", i}, {"out", sparse_to_json(f, g.pmap_of_basis(i))}});
  Json out{{"p", f.characteristic()}, {"k", f.degree()}, {"dim", g.dim()}, {"labels", g.labels()},
           {"brackets", brackets}, {"pmap", pmap}};
  if (g.has_matrix_model()) {
    Json model = Json::array();
    for (const auto& m : g.matrix_model()) model.push_back(mat_to_json(f, m));
    out["matrix_model"] = model;
  }
  return out;
}

GroupInput builtin_group(const std::string& name, unsigned p) {
  if (name == "d8") return {groups::dihedral(4), p};
  if (name == "q8" || name == "quaternion") return {groups::quaternion(), p};
  if (name == "s4") return {groups::symmetric(4), p};
  if (name == "s4xz2") return {groups::direct_product(groups::symmetric(4), groups::cyclic(2)), p};
  if (has_prefix(name, "cyclic:")) return {groups::cyclic(parse_suffix(name, "cyclic:")), p};
  if (has_prefix(name, "dihedral:")) return {groups::dihedral(parse_suffix(name, "dihedral:")), p};
  if (has_prefix(name, "symmetric:")) return {groups::symmetric(parse_suffix(name, "symmetric:")), p};
  throw InputError("unknown builtin group \"" + name +
                   "\" (known: d8, q8, s4, s4xz2, cyclic:N, dihedral:M, symmetric:N)");
}

RestrictedLieAlgebra builtin_lie(const std::string& name, const Field& field) {
  if (has_prefix(name, "sl:")) return algebras::sl(parse_suffix(name, "sl:"), field);
  if (has_prefix(name, "gl:")) return algebras::gl(parse_suffix(name, "gl:"), field);
  if (has_prefix(name, "heisenberg:")) return algebras::heisenberg(parse_suffix(name, "heisenberg:"), field);
  if (has_prefix(name, "abelian:")) return algebras::abelian(parse_suffix(name, "abelian:"), field);
  if (has_prefix(name, "torus:")) return algebras::torus(parse_suffix(name, "torus:"), field);
  throw InputError("unknown builtin algebra \"" + name +
                   "\" (known: sl:N, gl:N, heisenberg:N, abelian:D, torus:D)");
}

Json group_report(const PermGroup& g, unsigned p, const MaximalElemAbResult& r) {
  Json classes = Json::array();
  unsigned srk = 0, qd = 0;
  bool first = true;
  for (std::size_t c = 0; c < r.representatives.size(); ++c) {
    const auto& rep = r.representatives[c];
    classes.push_back(Json{{"rank", rep.rank}, {"generators", perm_list(rep.generators)}, {"size", r.class_sizes[c]}});
    srk = first ? rep.rank : std::min(srk, rep.rank);
    qd = std::max(qd, rep.rank);
    first = false;
  }
  bool equi = true;
  for (const auto& e : r.all) equi = equi && e.rank == srk;
  Json out{{"srk", srk}, {"quillen_dim", qd}, {"classes", classes}, {"equidimensional", equi},
           {"p", p}, {"order", g.order()}, {"maximal_subgroups", r.all.size()}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json lie_report(const RestrictedLieAlgebra& g, const SrkResult& r) {
  const Field& f = g.field();
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses)
    witnesses.push_back(Json{{"point", vec_to_json(f, w.witness.basis.front())},
                             {"local_rank", w.rank},
                             {"basis", elementary_json(f, w.witness)}});
  Json out{{"srk", r.srk},       {"r_min", r.srk},
           {"o_rmin_count", r.o_rmin.size()}, {"witnesses", witnesses},
           {"nullcone_size", r.certified ? Json(r.nullcone_size) : Json(nullptr)}, {"certified", r.certified},
           {"p", f.characteristic()},          {"k", f.degree()},
           {"dim", g.dim()}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json nullcone_report(const RestrictedLieAlgebra& g, const std::vector<LieElement>& points, std::size_t limit) {
  Json listed = Json::array();
  for (std::size_t i = 0; i < points.size() && i < limit; ++i) listed.push_back(vec_to_json(g.field(), points[i]));
  return Json{{"nullcone_size", points.size()},
              {"p", g.field().characteristic()},
              {"k", g.field().degree()},
              {"dim", g.dim()},
              {"labels", g.labels()},
              {"points", listed},
              {"truncated", points.size() > limit}};
}

Json sln_srk_report(unsigned n, unsigned p, const SlnSrk& r) {
  Json out{{"srk", r.rank},
           {"n", n},
           {"p", p},
           {"provenance", to_string(r.provenance)},
           {"strict_inequality", r.strict_inequality},
           {"top_partition", partition_to_json(r.top)}};
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json sln_orbits_report(unsigned n, unsigned p, const Field& f) {
  const SlnSrk s = srk_sln(n, p);
  Json orbits = Json::array();
  for (const auto& row : orbit_table(n, p, f)) {
    Json rank = row.exact ? Json(row.witness_rank) : Json("≥" + std::to_string(row.witness_rank));
    orbits.push_back(Json{{"partition", partition_to_json(row.partition)},
                          {"kind", to_string(row.kind)},
                          {"local_rank", rank},
                          {"witness_dims", row.witness_dims}});
  }
  Json out{{"srk", s.rank}, {"orbits", orbits}};
  try {
    Json o = Json::array();
    for (const auto& lam : o_rmin_sln(n, p)) o.push_back(partition_to_json(lam));
    out["o_rmin"] = o;
  } catch (const PreconditionError& e) {
    out["o_rmin"] = nullptr;
    out["o_rmin_note"] = e.what();
  }
  out["n"] = n;
  out["p"] = p;
  out["k"] = f.degree();
  return out;
}

std::string xi_combination_to_string(const Field& f, const XiCombination& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& [x, coeff] : c.terms) {
    if (!s.empty()) s += " + ";
    if (!f.is_one(coeff)) s += f.to_string(coeff) + "*";
    s += xi_label(x);
  }
  return s;
}

Json centralizer_report(const Partition& lambda, const Field& f, const TracelessCentralizer& z) {
  Json basis = Json::array();
  for (const auto& c : z.basis) basis.push_back(xi_combination_to_string(f, c));
  return Json{{"partition", partition_to_json(lambda)},
              {"p", f.characteristic()},
              {"k", f.degree()},
              {"dim", z.basis.size()},
              {"degenerate", z.degenerate},
              {"basis", basis}};
}

Json witness_report(const Field& f, const std::vector<OrbitWitness>& ws) {
  Json list = Json::array();
  for (const auto& w : ws) {
    const WitnessCheck chk = check_witness(w, f);
    Json xi = Json::array();
    for (const auto& c : w.xi) xi.push_back(xi_combination_to_string(f, c));
    Json mats = Json::array();
    for (const auto& m : w.matrices) mats.push_back(mat_to_json(f, m));
    list.push_back(Json{{"partition", partition_to_json(w.lambda)},
                        {"construction", w.construction},
                        {"dim", w.dim()},
                        {"valid", chk.ok()},
                        {"xi", xi},
                        {"matrices", mats}});
  }
  return Json{{"p", f.characteristic()}, {"k", f.degree()}, {"count", ws.size()}, {"witnesses", list}};
}

Json frob_report(std::size_t n, std::uint32_t p, const Sln2Srk& r) {
  const Field f = Field::make(p);
  const std::size_t srk1 = srk_sln(static_cast<unsigned>(n), p).rank;
  return Json{{"n", n},
              {"p", p},
              {"srk_sln2", r.rank},
              {"witness_pair", Json::array({mat_to_json(f, r.witness.alpha0), mat_to_json(f, r.witness.alpha1)})},
              {"bound_attained", srk_height_bound(2, srk1) == r.rank},
              {"witness_regular", r.witness_regular},
              {"u_e_dim", r.u_e.basis.size()},
              {"v2_dim", r.u_e.v2_dim},
              {"complexity", complexity(r.subgroup)}};
}

Json sweep_report(const Field& f, std::size_t n, const HomomorphismSweep& s) {
  return Json{{"n", n},
              {"p", f.characteristic()},
              {"k", f.degree()},
              {"pairs", s.pairs},
              {"failures", s.failures},
              {"special", s.special},
              {"ok", s.ok()}};
}

}  // namespace satrank::io
