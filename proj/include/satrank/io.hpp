#pragma once

// JSON interchange: input schemas for groups and Lie algebras, report
// builders, and the named instances reachable through --builtin.

#include <string>

#include "json.hpp"
#include "satrank/frobenius.hpp"
#include "satrank/group.hpp"
#include "satrank/lie.hpp"
#include "satrank/oracle.hpp"
#include "satrank/sln.hpp"

namespace satrank::io {

using Json = nlohmann::ordered_json;

/// Parses text; throws InputError on syntax errors.
Json parse(const std::string& text);
/// Two-space indented JSON with scalar arrays kept on one line, so matrices
/// print one row per line. Key order is insertion order.
std::string dump(const Json& j);
/// Reads and parses a file; throws InputError when unreadable or malformed.
Json read_file(const std::string& path);

// Field elements are integers over prime fields and coefficient arrays
// (constant term first) over extensions; both spellings are accepted on input.
Json elem_to_json(const Field& f, FieldElem a);
FieldElem elem_from_json(const Field& f, const Json& j);
Json vec_to_json(const Field& f, const Vec& v);
Json mat_to_json(const Field& f, const Mat& m);
Json partition_to_json(const Partition& p);
Partition partition_from_string(const std::string& text);

struct GroupInput {
  PermGroup group;
  unsigned p;
};

/// {"degree": n, "generators": [[...], ...], "p": p}
GroupInput group_from_json(const Json& j);
Json group_to_json(const PermGroup& g, unsigned p);

/// {"p", "k", "dim", "labels", "brackets": [{"i","j","out":[{"k","c"}]}],
///  "pmap": [{"i","out"}], "matrix_model"?: [[entries row-major], ...]}.
/// Brackets listed for (i, j) imply [b_j, b_i] = -[b_i, b_j] unless (j, i) is
/// listed too. Throws InputError for schema violations and PreconditionError
/// when the data fails the restricted Lie algebra axioms.
RestrictedLieAlgebra lie_from_json(const Json& j);
Json lie_to_json(const RestrictedLieAlgebra& g);

/// Named groups: d8, q8, s4, s4xz2, cyclic:N, dihedral:M (order 2M),
/// symmetric:N, quaternion. The prime defaults to 2.
GroupInput builtin_group(const std::string& name, unsigned p);
/// Named algebras over F_{p^k}: sl:N, gl:N, heisenberg:N, abelian:D, torus:D.
RestrictedLieAlgebra builtin_lie(const std::string& name, const Field& field);

Json group_report(const PermGroup& g, unsigned p, const MaximalElemAbResult& r);
Json lie_report(const RestrictedLieAlgebra& g, const SrkResult& r);
Json nullcone_report(const RestrictedLieAlgebra& g, const std::vector<LieElement>& points, std::size_t limit);
Json sln_srk_report(unsigned n, unsigned p, const SlnSrk& r);
Json sln_orbits_report(unsigned n, unsigned p, const Field& f);
Json centralizer_report(const Partition& lambda, const Field& f, const TracelessCentralizer& z);
Json witness_report(const Field& f, const std::vector<OrbitWitness>& ws);
Json frob_report(std::size_t n, std::uint32_t p, const Sln2Srk& r);
Json sweep_report(const Field& f, std::size_t n, const HomomorphismSweep& s);

std::string xi_combination_to_string(const Field& f, const XiCombination& c);

}  // namespace satrank::io
