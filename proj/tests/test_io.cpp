#include "doctest.h"
#include "satrank/errors.hpp"
#include "satrank/io.hpp"

using namespace satrank;
using io::Json;

TEST_CASE("field elements accept integers and coefficient arrays") {
  const Field f9 = Field::make(3, 2), f5 = Field::make(5);
  for (std::uint32_t v = 0; v < 9; ++v) {
    const FieldElem a{v};
    CHECK(io::elem_from_json(f9, io::elem_to_json(f9, a)) == a);
  }
  CHECK(io::elem_to_json(f5, {3}) == Json(3));
  CHECK(io::elem_to_json(f9, {5}) == Json::parse("[2,1]"));
  CHECK(io::elem_from_json(f5, Json(-1)) == FieldElem{4});
  CHECK(io::elem_from_json(f5, Json::parse("[7]")) == FieldElem{2});
  CHECK(io::elem_from_json(f9, Json::parse("[0,1]")) == FieldElem{3});
  CHECK_THROWS_AS(io::elem_from_json(f9, Json::parse("[0,1,1]")), InputError);
  CHECK_THROWS_AS(io::elem_from_json(f5, Json("2")), InputError);
}

TEST_CASE("group input") {
  const auto in = io::group_from_json(io::parse(R"({"degree":4,"generators":[[1,2,3,0],[3,2,1,0]],"p":2})"));
  CHECK(in.p == 2);
  CHECK(in.group.order() == 8);
  CHECK(srk_group(in.group, in.p) == 2);
  CHECK(io::group_from_json(io::group_to_json(in.group, 2)).group.elements() == in.group.elements());

  CHECK_THROWS_AS(io::parse("{\"degree\": 4,"), InputError);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"degree":4,"p":2})")), InputError);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"degree":4,"generators":[[0,0,1,2]],"p":2})")),
                  PreconditionError);
  CHECK_THROWS_AS(io::group_from_json(io::parse(R"({"degree":-4,"generators":[],"p":2})")), InputError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/satrank.json"), InputError);
}

TEST_CASE("lie input fills the antisymmetric bracket") {
  const auto g = io::lie_from_json(io::parse(
      R"({"p":3,"k":1,"dim":3,"labels":["x","y","z"],
          "brackets":[{"i":0,"j":1,"out":[{"k":2,"c":[1]}]}],"pmap":[{"i":0,"out":[]}]})"));
  CHECK(g.dim() == 3);
  CHECK(g.structure(0, 1) == Vec{{0}, {0}, {1}});
  CHECK(g.structure(1, 0) == Vec{{0}, {0}, {2}});
  CHECK(srk_brute(g).srk == 2);
  // No labels: b0, b1, ...
  const auto a = io::lie_from_json(io::parse(R"({"p":2,"dim":2})"));
  CHECK(a.labels() == std::vector<std::string>{"b0", "b1"});

  // [x, y] = x, [x, z] = y, [y, z] = x fails Jacobi.
  CHECK_THROWS_AS(io::lie_from_json(io::parse(
                      R"({"p":3,"dim":3,"brackets":[{"i":0,"j":1,"out":[{"k":0,"c":1}]},
                          {"i":0,"j":2,"out":[{"k":1,"c":1}]},{"i":1,"j":2,"out":[{"k":0,"c":1}]}]})")),
                  PreconditionError);
  CHECK_THROWS_AS(io::lie_from_json(io::parse(R"({"p":3,"dim":2,"labels":["x"]})")), InputError);
  CHECK_THROWS_AS(io::lie_from_json(io::parse(R"({"p":3,"dim":2,"brackets":[{"i":0,"j":5,"out":[]}]})")),
                  InputError);
  CHECK_THROWS_AS(io::lie_from_json(io::parse(R"({"p":4,"dim":2})")), PreconditionError);
}

TEST_CASE("lie JSON round trip keeps structure, p-map and matrix model") {
  const Field f9 = Field::make(3, 2);
  for (const auto& g : {algebras::sl(3, f9), algebras::heisenberg(2, Field::make(5)), algebras::torus(2, f9),
                        algebras::gl(2, Field::make(2, 4))}) {
    const auto h = io::lie_from_json(io::parse(io::dump(io::lie_to_json(g))));
    REQUIRE(h.dim() == g.dim());
    CHECK(h.labels() == g.labels());
    CHECK(h.has_matrix_model() == g.has_matrix_model());
    if (g.has_matrix_model()) CHECK(h.matrix_model() == g.matrix_model());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      CHECK(h.pmap_of_basis(i) == g.pmap_of_basis(i));
      for (std::size_t j = 0; j < g.dim(); ++j) CHECK(h.structure(i, j) == g.structure(i, j));
    }
  }
}

TEST_CASE("flat row-major matrix models are accepted") {
  const auto g = io::lie_from_json(io::parse(
      R"({"p":5,"dim":3,"labels":["e","f","h"],
          "brackets":[{"i":0,"j":1,"out":[{"k":2,"c":1}]},{"i":2,"j":0,"out":[{"k":0,"c":2}]},
                      {"i":2,"j":1,"out":[{"k":1,"c":-2}]}],
          "pmap":[{"i":2,"out":[{"k":2,"c":1}]}],
          "matrix_model":[[0,1,0,0],[0,0,1,0],[1,0,0,-1]]})"));
  CHECK(g.has_matrix_model());
  CHECK(g.matrix_model()[2](1, 1) == FieldElem{4});
  CHECK(srk_brute(g).srk == 1);
}

TEST_CASE("builtin registry") {
  CHECK(io::builtin_group("d8", 2).group.order() == 8);
  CHECK(io::builtin_group("s4xz2", 2).group.order() == 48);
  CHECK(io::builtin_group("dihedral:6", 3).group.order() == 12);
  CHECK(io::builtin_group("cyclic:9", 3).group.order() == 9);
  CHECK(io::builtin_group("symmetric:5", 5).group.order() == 120);
  CHECK_THROWS_AS(io::builtin_group("a5", 2), InputError);
  CHECK_THROWS_AS(io::builtin_group("cyclic:x", 2), InputError);
  const Field f = Field::make(3);
  CHECK(io::builtin_lie("sl:3", f).dim() == 8);
  CHECK(io::builtin_lie("gl:2", f).dim() == 4);
  CHECK(io::builtin_lie("heisenberg:2", f).dim() == 5);
  CHECK(io::builtin_lie("abelian:4", f).dim() == 4);
  CHECK(io::builtin_lie("torus:2", f).dim() == 2);
  CHECK_THROWS_AS(io::builtin_lie("so:3", f), InputError);
}

TEST_CASE("partition strings") {
  CHECK(io::partition_from_string("3,1") == Partition({3, 1}));
  CHECK(io::partition_from_string("(2, 2, 1)") == Partition({2, 2, 1}));
  CHECK_THROWS_AS(io::partition_from_string("3,,1"), InputError);
  CHECK_THROWS_AS(io::partition_from_string(""), InputError);
  CHECK_THROWS_AS(io::partition_from_string("1,3"), PreconditionError);
}

TEST_CASE("dump keeps scalar arrays inline and round-trips") {
  const Json j = Json{{"b", 1}, {"a", Json::array({1, 2})}, {"m", Json::parse("[[1,0],[0,1]]")}, {"e", Json::array()}};
  CHECK(io::dump(j) == "{\n  \"b\": 1,\n  \"a\": [1,2],\n  \"m\": [\n    [1,0],\n    [0,1]\n  ],\n  \"e\": []\n}\n");
  CHECK(io::parse(io::dump(j)) == j);
}

TEST_CASE("report schemas") {
  const auto d8 = groups::dihedral(4);
  const Json g = io::group_report(d8, 2, maximal_elemab(d8, 2));
  std::vector<std::string> keys;
  for (const auto& [k, _] : g.items()) keys.push_back(k);
  REQUIRE(keys.size() >= 4);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 4) ==
        std::vector<std::string>{"srk", "quillen_dim", "classes", "equidimensional"});
  CHECK(g["srk"] == 2);
  CHECK(g["classes"].size() == 2);

  const Json o = io::sln_orbits_report(4, 5, Field::make(5));
  CHECK(o["srk"] == 3);
  CHECK(o["orbits"][0]["partition"] == Json::parse("[4]"));
  CHECK(o["orbits"][0]["local_rank"] == 3);
  CHECK(o["orbits"][2]["local_rank"] == "≥4");
  CHECK(o["o_rmin"] == Json::parse("[[4],[3,1]]"));

  const Json fr = io::frob_report(3, 5, srk_sln2(3, 5));
  CHECK(fr["srk_sln2"] == 4);
  CHECK(fr["bound_attained"] == true);
  CHECK(fr["witness_pair"][1] == Json::parse("[[0,1,1],[0,0,1],[0,0,0]]"));

  const Json z = io::centralizer_report(Partition({3, 1}), Field::make(5), centralizer_sl_basis(Partition({3, 1}), Field::make(5)));
  CHECK(z["dim"] == 5);
  CHECK(z["basis"].back() == "xi_1^{1,0} + 2*xi_2^{2,0}");
}
