#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "satrank/cli.hpp"
#include "satrank/io.hpp"

using namespace satrank;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SATRANK_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const char* name) {
  return std::filesystem::temp_directory_path() / (std::string("satrank_cli_") + name);
}

}  // namespace

TEST_CASE("reports for the documented invocations") {
  auto g = run({"group-srk", "--file", data("d8.json")});
  REQUIRE(g.code == 0);
  CHECK(g.json()["srk"] == 2);
  CHECK(g.json()["quillen_dim"] == 2);

  auto s = run({"sln-srk", "--n", "4", "--p", "5"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["srk"] == 3);

  auto fr = run({"frob2-srk", "--n", "3", "--p", "5"});
  REQUIRE(fr.code == 0);
  CHECK(fr.json()["srk_sln2"] == 4);

  auto h = run({"lie-srk", "--file", data("h3.json")});
  REQUIRE(h.code == 0);
  CHECK(h.json()["srk"] == 2);
  CHECK(h.json()["o_rmin_count"] == 26);
}

TEST_CASE("every subcommand runs") {
  CHECK(run({"group-srk", "--builtin", "s4", "--p", "3"}).json()["srk"] == 1);
  CHECK(run({"lie-srk", "--builtin", "sl:2", "--p", "3", "--k", "2"}).json()["srk"] == 1);
  const auto sampled = run({"lie-srk", "--builtin", "sl:3", "--p", "3", "--sampled", "20", "--seed", "4"});
  CHECK(sampled.json()["certified"] == false);
  CHECK(sampled.json()["nullcone_size"].is_null());
  CHECK(sampled.json()["srk"].get<int>() >= 2);
  const auto nc = run({"lie-nullcone", "--builtin", "sl:2", "--p", "3", "--limit", "3"});
  CHECK(nc.json()["nullcone_size"] == 9);
  CHECK(nc.json()["points"].size() == 3);
  CHECK(run({"sln-orbits", "--n", "3", "--p", "5"}).json()["o_rmin"] == io::parse("[[3],[2,1]]"));
  CHECK(run({"sln-centralizer", "--partition", "2,2", "--p", "2"}).json()["degenerate"] == true);
  CHECK(run({"sln-witness", "--n", "3", "--p", "2"}).json()["count"] == 2);
  CHECK(run({"sln-witness", "--partition", "2,1,1,1", "--p", "3"}).json()["witnesses"][0]["dim"] == 6);
  CHECK(run({"sln-witness", "--n", "4", "--partition", "4", "--p", "5"}).json()["witnesses"][0]["dim"] == 3);
  const auto v = run({"frob2-verify-exp", "--n", "3", "--p", "5", "--k", "2"});
  CHECK(v.code == 0);
  CHECK(v.json()["pairs"] == 625);
  const auto rp = run({"reproduce-paper", "--only", "1", "--only", "8"});
  CHECK(rp.code == 0);
  CHECK(rp.out.rfind("PASS  1", 0) == 0);
  CHECK(rp.out.find("PASS  8") != std::string::npos);
  CHECK(run({"reproduce-paper", "--only", "4", "--format", "json"}).json()["failed"] == 0);
  CHECK(run({"oracle-crosscheck"}).json()["mismatches"] == 0);
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::vector<std::string> a{"lie-srk", "--builtin", "sl:3", "--p", "2", "--threads", "1"};
  const std::vector<std::string> b{"lie-srk", "--builtin", "sl:3", "--p", "2", "--threads", "4"};
  const auto first = run(a).out;
  CHECK(run(a).out == first);
  CHECK(run(b).out == first);
  const std::vector<std::string> c{"sln-orbits", "--n", "6", "--p", "5", "--format", "table"};
  CHECK(run(c).out == run(c).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"sln-srk", "--p", "5"}).code == cli::kUsage);
  CHECK(run({"sln-srk", "--n", "4", "--p", "5", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"group-srk", "--builtin", "d8", "--file", data("d8.json")}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
  CHECK(run({"sln-srk", "--help"}).code == cli::kOk);

  CHECK(run({"sln-srk", "--n", "4", "--p", "4"}).code == cli::kPrecondition);
  CHECK(run({"frob2-srk", "--n", "5", "--p", "3"}).code == cli::kPrecondition);
  CHECK(run({"group-srk", "--builtin", "cyclic:9", "--p", "2"}).code == cli::kPrecondition);
  CHECK(run({"lie-srk", "--builtin", "sl:4", "--p", "3", "--budget", "1000"}).code == cli::kBudget);

  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"degree\": 4, \"generators\": [[1,2,3,0]";
  CHECK(run({"group-srk", "--file", bad.string()}).code == cli::kBadInput);
  std::ofstream(bad) << "{\"degree\": 4, \"p\": 2}";
  CHECK(run({"group-srk", "--file", bad.string()}).code == cli::kBadInput);
  CHECK(run({"lie-srk", "--file", "/nonexistent/x.json"}).code == cli::kBadInput);
  CHECK(run({"sln-centralizer", "--partition", "3,x", "--p", "5"}).code == cli::kBadInput);
  CHECK(run({"lie-srk", "--builtin", "e8", "--p", "5"}).code == cli::kBadInput);
  std::filesystem::remove(bad);
}

TEST_CASE("SATRANK_BUDGET is the fallback cap") {
  setenv("SATRANK_BUDGET", "1000", 1);
  CHECK(run({"lie-srk", "--builtin", "sl:3", "--p", "3"}).code == cli::kBudget);
  CHECK(run({"lie-srk", "--builtin", "sl:3", "--p", "3", "--budget", "10000000"}).code == cli::kOk);
  setenv("SATRANK_BUDGET", "many", 1);
  CHECK(run({"lie-srk", "--builtin", "sl:2", "--p", "3"}).code == cli::kBadInput);
  unsetenv("SATRANK_BUDGET");
}

TEST_CASE("--out writes the report to a file") {
  const auto path = scratch("out.json");
  const auto r = run({"sln-srk", "--n", "6", "--p", "4", "--out", path.string()});
  CHECK(r.code == cli::kPrecondition);
  const auto ok = run({"sln-srk", "--n", "6", "--p", "7", "--out", path.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());
  CHECK(io::read_file(path.string())["srk"] == 5);
  std::filesystem::remove(path);
}
