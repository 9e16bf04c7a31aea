#include "satrank/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "satrank/acceptance.hpp"
#include "satrank/errors.hpp"
#include "satrank/fixtures.hpp"
#include "satrank/io.hpp"

namespace satrank::cli {

namespace {

using io::Json;

struct Options {
  std::string format = "json";
  std::string out;
  std::optional<std::uint64_t> budget;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;

  std::string file;
  std::string builtin;
  std::optional<unsigned> p;
  unsigned k = 1;
  unsigned n = 0;
  std::string partition;
  std::size_t sampled = 0;
  std::size_t limit = 50;
  std::string out_dir;
  std::vector<int> only;
};

// --budget, then SATRANK_BUDGET, then the module default.
std::optional<std::uint64_t> effective_budget(const Options& o) {
  if (o.budget) return o.budget;
  if (const char* env = std::getenv("SATRANK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError("SATRANK_BUDGET must be a positive integer");
    return v;
  }
  return std::nullopt;
}

SearchLimits limits(const Options& o) {
  SearchLimits l;
  if (auto b = effective_budget(o)) l.max_points = *b;
  l.threads = o.threads;
  return l;
}

SearchBudget oracle_budget(const Options& o) {
  SearchBudget b;
  if (auto v = effective_budget(o)) b.max_points = *v;
  b.deterministic_seed = o.seed;
  return b;
}

unsigned require_p(const Options& o) {
  if (!o.p) throw CLI::RequiredError("--p");
  return *o.p;
}

unsigned require_n(const Options& o) {
  if (o.n == 0) throw CLI::RequiredError("--n");
  return o.n;
}

void require_one_source(const Options& o) {
  if (o.file.empty() == o.builtin.empty()) throw CLI::ValidationError("exactly one of --file and --builtin is required");
}

io::GroupInput load_group(const Options& o) {
  require_one_source(o);
  io::GroupInput in = o.file.empty() ? io::builtin_group(o.builtin, o.p.value_or(2)) : io::group_from_json(io::read_file(o.file));
  if (o.p) in.p = *o.p;
  if (auto b = effective_budget(o)) in.group = PermGroup(in.group.degree(), in.group.generators(), *b);
  return in;
}

RestrictedLieAlgebra load_lie(const Options& o) {
  require_one_source(o);
  if (!o.file.empty()) return io::lie_from_json(io::read_file(o.file));
  return io::builtin_lie(o.builtin, Field::make(require_p(o), o.k));
}

// Lossy human rendering: one line per top-level key, arrays of objects one
// element per line.
std::string render_table(const Json& j) {
  std::ostringstream out;
  if (!j.is_object()) return j.dump() + "\n";
  std::size_t width = 0;
  for (const auto& [key, _] : j.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : j.items()) {
    out << key << std::string(width - key.size() + 2, ' ');
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << value.size() << " entries\n";
      for (const auto& row : value) {
        out << "  -";
        for (const auto& [k2, v2] : row.items())
          if (!(v2.is_array() && v2.size() > 8)) out << " " << k2 << "=" << (v2.is_string() ? v2.get<std::string>() : v2.dump());
        out << "\n";
      }
    } else {
      out << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return out.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

void emit_json(const Options& o, const Json& j, std::ostream& out) {
  emit(o, o.format == "table" ? render_table(j) : io::dump(j), out);
}

int cmd_group_srk(const Options& o, std::ostream& out) {
  const auto in = load_group(o);
  srk_group(in.group, in.p);  // precondition: p divides |G|
  emit_json(o, io::group_report(in.group, in.p, maximal_elemab(in.group, in.p)), out);
  return kOk;
}

int cmd_lie_srk(const Options& o, std::ostream& out) {
  const auto g = load_lie(o);
  const auto r = o.sampled ? srk_sampled(g, o.sampled, o.seed, limits(o)) : srk_brute(g, limits(o));
  emit_json(o, io::lie_report(g, r), out);
  return kOk;
}

int cmd_lie_nullcone(const Options& o, std::ostream& out) {
  const auto g = load_lie(o);
  emit_json(o, io::nullcone_report(g, nullcone(g, limits(o)), o.limit), out);
  return kOk;
}

int cmd_sln_srk(const Options& o, std::ostream& out) {
  const unsigned n = require_n(o), p = require_p(o);
  emit_json(o, io::sln_srk_report(n, p, srk_sln(n, p)), out);
  return kOk;
}

int cmd_sln_orbits(const Options& o, std::ostream& out) {
  const unsigned n = require_n(o), p = require_p(o);
  emit_json(o, io::sln_orbits_report(n, p, Field::make(p, o.k)), out);
  return kOk;
}

int cmd_sln_centralizer(const Options& o, std::ostream& out) {
  if (o.partition.empty()) throw CLI::RequiredError("--partition");
  const Partition lambda = io::partition_from_string(o.partition);
  const Field f = Field::make(require_p(o), o.k);
  emit_json(o, io::centralizer_report(lambda, f, centralizer_sl_basis(lambda, f)), out);
  return kOk;
}

int cmd_sln_witness(const Options& o, std::ostream& out) {
  const unsigned p = require_p(o);
  const Field f = Field::make(p, o.k);
  std::optional<Partition> lambda;
  if (!o.partition.empty()) lambda = io::partition_from_string(o.partition);
  const unsigned n = lambda ? lambda->n() : require_n(o);
  if (o.n && lambda && lambda->n() != o.n) throw PreconditionError("--partition is not a partition of --n");
  if (!lambda) lambda = Partition({n - 1, 1});

  std::vector<OrbitWitness> ws;
  if (*lambda == Partition({n})) {
    ws.push_back(regular_witness(n, f));
  } else if (n >= 3 && *lambda == Partition({n - 1, 1})) {
    ws = subregular_witnesses(n, p, f);
  } else {
    ws.push_back(lower_orbit_witness(*lambda, p, f));
  }
  emit_json(o, io::witness_report(f, ws), out);
  return kOk;
}

int cmd_frob2_srk(const Options& o, std::ostream& out) {
  const unsigned n = require_n(o), p = require_p(o);
  emit_json(o, io::frob_report(n, p, srk_sln2(n, p)), out);
  return kOk;
}

int cmd_frob2_verify_exp(const Options& o, std::ostream& out) {
  const unsigned n = require_n(o), p = require_p(o);
  const Field fp = Field::make(p), f = Field::make(p, o.k);
  const auto w = srk_sln2(n, p).witness;
  const NilPair a{mat_embed(fp, f, w.alpha0), mat_embed(fp, f, w.alpha1)};
  const auto sweep = sweep_homomorphism(f, make_one_param(f, make_nil_pair(f, a.alpha0, a.alpha1)), o.threads);
  emit_json(o, io::sweep_report(f, n, sweep), out);
  return sweep.ok() ? kOk : kMismatch;
}

int cmd_oracle_crosscheck(const Options& o, std::ostream& out, std::ostream& err) {
  const SearchBudget budget = oracle_budget(o);
  if (!o.out_dir.empty()) std::filesystem::create_directories(o.out_dir);
  Json summary = Json::array();
  std::size_t mismatches = 0;
  for (const auto& name : fixture_names()) {
    const auto r = run_fixture(name, budget);
    if (!r.mismatch.empty()) {
      ++mismatches;
      err << "satrank: mismatch on " << name << ": " << r.mismatch << "\n";
    }
    summary.push_back(Json{{"name", name},
                           {"oracle", r.fixture.at("oracle")},
                           {"result", r.fixture.at("result").contains("srk") ? r.fixture.at("result").at("srk")
                                                                              : r.fixture.at("result").at("count")},
                           {"agrees", r.mismatch.empty()}});
    if (!o.out_dir.empty()) {
      std::ofstream f(std::filesystem::path(o.out_dir) / (name + ".json"), std::ios::binary);
      if (!f) throw InputError("cannot write fixture " + name);
      f << io::dump(r.fixture);
    }
  }
  emit_json(o, Json{{"fixtures", summary}, {"mismatches", mismatches}}, out);
  return mismatches ? kMismatch : kOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  AcceptanceOptions opt;
  opt.threads = o.threads;
  opt.only = o.only;
  const auto results = run_acceptance(opt);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  if (o.format == "json") {
    Json rows = Json::array();
    for (const auto& r : results)
      rows.push_back(Json{{"id", r.id},
                          {"title", r.title},
                          {"pass", r.pass},
                          {"seconds", r.seconds},
                          {"limit_seconds", r.limit_seconds},
                          {"detail", r.detail}});
    emit(o, io::dump(Json{{"criteria", rows}, {"failed", failed}}), out);
  } else {
    std::string text;
    for (const auto& r : results) text += format_result(r) + "\n";
    emit(o, text, out);
  }
  return failed ? kMismatch : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saturation rank of finite groups and restricted Lie algebras", "satrank"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--budget", o.budget, "enumeration cap; falls back to SATRANK_BUDGET")->check(CLI::PositiveNumber);
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 1024u));
  };
  auto source = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "JSON input file");
    sub->add_option("--builtin", o.builtin, "named instance");
  };
  auto field = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic");
    sub->add_option("--k", o.k, "extension degree")->check(CLI::Range(1u, 4u));
  };
  auto np = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "matrix size")->check(CLI::Range(1u, 64u));
    field(sub);
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> handlers;
  auto add = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    handlers.emplace_back(sub, std::move(fn));
    return sub;
  };

  auto* g = add("group-srk", "maximal elementary abelian p-subgroups and srk of a permutation group",
                [&] { return cmd_group_srk(o, out); });
  source(g);
  g->add_option("--p", o.p, "prime (overrides the file)");

  auto* ls = add("lie-srk", "srk of a restricted Lie algebra by nullcone search", [&] { return cmd_lie_srk(o, out); });
  source(ls);
  field(ls);
  ls->add_option("--sampled", o.sampled, "sample this many nullcone points instead (upper estimate)");
  ls->add_option("--seed", o.seed, "seed for --sampled");

  auto* ln = add("lie-nullcone", "restricted nullcone of a Lie algebra", [&] { return cmd_lie_nullcone(o, out); });
  source(ln);
  field(ln);
  ln->add_option("--limit", o.limit, "points to list");

  np(add("sln-srk", "srk of sl_n over F_p", [&] { return cmd_sln_srk(o, out); }));
  np(add("sln-orbits", "nilpotent orbits of the restricted nullcone with local ranks",
         [&] { return cmd_sln_orbits(o, out); }));
  auto* sc = add("sln-centralizer", "xi basis of the traceless centralizer of x_lambda",
                 [&] { return cmd_sln_centralizer(o, out); });
  field(sc);
  sc->add_option("--partition", o.partition, "e.g. 3,1");
  auto* sw = add("sln-witness", "elementary subalgebras through x_lambda", [&] { return cmd_sln_witness(o, out); });
  np(sw);
  sw->add_option("--partition", o.partition, "defaults to (n-1,1)");
  np(add("frob2-srk", "srk of the second Frobenius kernel of SL_n", [&] { return cmd_frob2_srk(o, out); }));
  np(add("frob2-verify-exp", "exhaustive homomorphism sweep of exp_a over F_{p^k}",
         [&] { return cmd_frob2_verify_exp(o, out); }));
  auto* oc = add("oracle-crosscheck", "run every oracle fixture against the structured code",
                 [&] { return cmd_oracle_crosscheck(o, out, err); });
  oc->add_option("--out-dir", o.out_dir, "write one fixture file per instance");
  oc->add_option("--seed", o.seed, "seed for sampled oracles");
  auto* rp = add("reproduce-paper", "run the acceptance table", [&] { return cmd_reproduce(o, out); });
  rp->add_option("--only", o.only, "criterion ids")->check(CLI::Range(1, 9));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  if (rp->parsed() && rp->get_option("--format")->count() == 0) o.format = "table";

  try {
    for (auto& [sub, fn] : handlers)
      if (sub->parsed()) return fn();
  } catch (const CLI::Error& e) {
    err << "satrank: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "satrank: input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "satrank: precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetError& e) {
    err << "satrank: budget: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "satrank: internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace satrank::cli
