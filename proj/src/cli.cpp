#include "pathpart/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathpart/dag_pp.hpp"
#include "pathpart/error.hpp"
#include "pathpart/graph_io.hpp"
#include "pathpart/ilp.hpp"
#include "pathpart/nd.hpp"
#include "pathpart/oracle.hpp"
#include "pathpart/reductions.hpp"
#include "pathpart/spp_xp.hpp"
#include "pathpart/vc.hpp"

namespace pathpart {

namespace {

using nlohmann::json;

// Thresholds for --algo auto, overridable through PATHPART_LIMITS.
struct Limits {
  std::size_t xp_max_k = 4;
  std::size_t xp_max_n = 40;
  std::size_t nd_max = 8;
  std::size_t oracle_max_vertices = 0;
  std::uint64_t oracle_node_limit = 50'000'000;
};

Limits load_limits() {
  Limits lim;
  const char* path = std::getenv("PATHPART_LIMITS");
  if (!path || !*path) return lim;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, std::string("cannot open limits file ") + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::kParseError, "limits line without '=': " + line);
    auto key = line.substr(0, eq);
    std::uint64_t value = 0;
    try {
      value = std::stoull(line.substr(eq + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError, "limits value is not a number: " + line);
    }
    if (key == "xp_max_k") lim.xp_max_k = value;
    else if (key == "xp_max_n") lim.xp_max_n = value;
    else if (key == "nd_max") lim.nd_max = value;
    else if (key == "oracle_max_vertices") lim.oracle_max_vertices = value;
    else if (key == "oracle_node_limit") lim.oracle_node_limit = value;
    else throw Error(ErrorCode::kParseError, "unknown limits key: " + key);
  }
  return lim;
}

PathKind parse_kind(const std::string& s) {
  if (s == "pp") return PathKind::kUnrestricted;
  if (s == "ipp") return PathKind::kInduced;
  if (s == "spp") return PathKind::kShortest;
  throw Error(ErrorCode::kParseError, "unknown kind " + s);
}

CoverMode parse_mode(const std::string& s) {
  if (s == "partition") return CoverMode::kPartition;
  if (s == "cover") return CoverMode::kCover;
  if (s == "ed-cover") return CoverMode::kEdgeDisjointCover;
  throw Error(ErrorCode::kParseError, "unknown mode " + s);
}

json paths_json(const PathSystem& sys) {
  json arr = json::array();
  for (const auto& p : sys.paths) {
    json one = json::array();
    for (auto v : p) one.push_back(v + 1);
    arr.push_back(std::move(one));
  }
  return arr;
}

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorCode::kUnsupportedInput, what); }

struct SolveFlags {
  std::string file;
  std::string kind = "pp";
  std::string mode = "partition";
  std::string algo = "auto";
  std::optional<std::size_t> k;
  std::optional<std::size_t> k_dual;
  unsigned threads = 1;
  std::string dump_ilp;
};

std::string choose_algo(const Graph& g, Variant variant, const SolveFlags& f, const Limits& lim) {
  if (f.k_dual) return "dual";
  bool dag = g.is_directed() && is_dag(g);
  bool partition = variant.mode == CoverMode::kPartition;
  if (variant.kind == PathKind::kUnrestricted) {
    if (dag && partition) return "dag-pp";
    if (!g.is_directed() && partition) return "vc";
    return "oracle";
  }
  if (variant.kind == PathKind::kShortest && partition && f.k && *f.k <= lim.xp_max_k &&
      g.order() <= lim.xp_max_n && (!g.is_directed() || dag))
    return "xp";
  auto cls = g.is_directed() ? dnd_classes(g) : nd_classes(g);
  if (cls.size() <= lim.nd_max) return "nd";
  return "oracle";
}

int cmd_solve(const SolveFlags& f, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  auto g = read_graph_file(f.file);
  Variant variant{parse_kind(f.kind), parse_mode(f.mode)};
  auto lim = load_limits();
  auto algo = f.algo == "auto" ? choose_algo(g, variant, f, lim) : f.algo;
  OracleBudget budget{lim.oracle_max_vertices, lim.oracle_node_limit, true};
  const auto n = g.order();

  bool partition = variant.mode == CoverMode::kPartition;
  std::optional<PathSystem> system;
  std::string answer;
  std::optional<std::size_t> k_requested = f.k;

  // Optimum-producing algorithms answer a k query by comparison.
  auto finish_optimum = [&](PathSystem sys) {
    if (k_requested) {
      answer = sys.size() <= *k_requested ? "yes" : "no";
      if (answer == "yes") system = std::move(sys);
    } else {
      answer = "optimum";
      system = std::move(sys);
    }
  };
  auto finish_decision = [&](Decision d) {
    answer = d.yes ? "yes" : "no";
    if (d.yes) system = std::move(d.witness);
  };

  if (algo == "oracle") {
    if (k_requested) finish_decision(decide(g, variant, *k_requested, budget));
    else finish_optimum(solve_exact(g, variant, budget));
  } else if (algo == "dag-pp") {
    if (variant.kind != PathKind::kUnrestricted || !partition || !g.is_directed() || !is_dag(g))
      unsupported("dag-pp requires pp, partition and a DAG");
    finish_optimum(solve_dagpp(g));
  } else if (algo == "xp") {
    if (variant.kind != PathKind::kShortest || !partition) unsupported("xp requires spp and partition");
    XpOptions opts{f.threads, true};
    if (k_requested) {
      finish_decision(solve_spp_xp(g, *k_requested, opts));
    } else if (n == 0) {
      finish_optimum(PathSystem{{}, variant});
    } else {
      for (std::size_t k = 1; k <= n; ++k) {
        auto d = solve_spp_xp(g, k, opts);
        if (d.yes) {
          finish_optimum(std::move(*d.witness));
          break;
        }
      }
    }
  } else if (algo == "nd") {
    if (!f.dump_ilp.empty()) {
      std::ofstream dump(f.dump_ilp);
      if (!dump) throw Error(ErrorCode::kParseError, "cannot write " + f.dump_ilp);
      for (const auto& ilp : nd_ilps(g, variant)) dump << to_lp_text(ilp) << '\n';
    }
    finish_optimum(solve_nd(g, variant));
  } else if (algo == "vc") {
    if (variant.kind != PathKind::kUnrestricted || !partition) unsupported("vc requires pp and partition");
    finish_optimum(solve_upp_vc(g, UppVcOptions{true, f.threads, {}}));
  } else if (algo == "dual") {
    if (!f.k_dual) unsupported("dual requires --k-dual");
    auto r = solve_dual(g, *f.k_dual, variant);
    k_requested = n - *f.k_dual;
    finish_decision(std::move(r.decision));
  } else {
    throw Error(ErrorCode::kParseError, "unknown algorithm " + algo);
  }

  bool verified = system && verify(g, *system).valid();
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json doc;
  doc["problem"] = std::string(to_string(variant.kind)) + "/" + std::string(to_string(variant.mode));
  doc["kind"] = to_string(variant.kind);
  doc["mode"] = to_string(variant.mode);
  doc["direction"] = g.is_directed() ? "directed" : "undirected";
  doc["n"] = n;
  doc["m"] = g.size();
  if (k_requested) doc["k_requested"] = *k_requested;
  doc["answer"] = answer;
  doc["value"] = system ? json(system->size()) : json(nullptr);
  doc["paths"] = system ? paths_json(*system) : json::array();
  doc["algorithm"] = algo;
  doc["elapsed_ms"] = elapsed;
  doc["verified"] = verified;
  out << doc.dump(2) << '\n';
  return verified ? kExitOk : kExitInvalid;
}

int cmd_params(const std::string& file, std::ostream& out) {
  auto g = read_graph_file(file);
  auto dist = all_pairs_distances(g);
  json doc;
  doc["n"] = g.order();
  doc["m"] = g.size();
  doc["direction"] = g.is_directed() ? "directed" : "undirected";
  doc["connected"] = connected_components(g).size() <= 1;
  doc["diameter"] = dist.max_finite();
  doc["degeneracy"] = degeneracy(g).value;
  doc["bipartite"] = bipartition(g).has_value();
  doc["nd"] = nd_classes(g).size();
  if (g.is_directed()) doc["dnd"] = dnd_classes(g).size();
  doc["vc"] = min_vertex_cover(underlying_undirected(g)).size();
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& graph_file, const std::string& solution_file, std::ostream& out) {
  auto g = read_graph_file(graph_file);
  std::ifstream in(solution_file);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + solution_file);
  PathSystem sys;
  try {
    auto doc = json::parse(in);
    sys.variant = {parse_kind(doc.at("kind").get<std::string>()), parse_mode(doc.at("mode").get<std::string>())};
    for (const auto& p : doc.at("paths")) {
      Path path;
      for (const auto& v : p) {
        auto id = v.get<long long>();
        if (id < 1 || static_cast<std::size_t>(id) > g.order())
          throw Error(ErrorCode::kParseError, "solution vertex out of range");
        path.push_back(static_cast<Vertex>(id - 1));
      }
      sys.paths.push_back(std::move(path));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("solution file: ") + e.what());
  }
  auto verdict = verify(g, sys);
  json doc;
  doc["valid"] = verdict.valid();
  doc["failures"] = json::array();
  for (const auto& fl : verdict.failures) {
    json one;
    one["reason"] = to_string(fl.reason);
    one["path"] = fl.path_index ? json(*fl.path_index + 1) : json(nullptr);
    one["vertex"] = fl.vertex ? json(*fl.vertex + 1) : json(nullptr);
    doc["failures"].push_back(std::move(one));
  }
  out << doc.dump(2) << '\n';
  return verdict.valid() ? kExitOk : kExitInvalid;
}

// Random 3-DM instance; when q >= p a perfect matching is planted first.
ThreeDmInstance random_3dm(std::uint32_t p, std::size_t q, std::mt19937_64& rng) {
  ThreeDmInstance inst{p, {}};
  std::set<std::array<std::uint32_t, 3>> seen;
  std::vector<std::uint32_t> count(3 * static_cast<std::size_t>(p), 0);
  auto try_add = [&](std::array<std::uint32_t, 3> t) {
    for (int s = 0; s < 3; ++s)
      if (count[s * p + t[s]] >= 3) return false;
    if (!seen.insert(t).second) return false;
    for (int s = 0; s < 3; ++s) ++count[s * p + t[s]];
    inst.triples.push_back(t);
    return true;
  };
  if (q >= p) {
    std::vector<std::uint32_t> ys(p), zs(p);
    std::iota(ys.begin(), ys.end(), 0u);
    std::iota(zs.begin(), zs.end(), 0u);
    std::shuffle(ys.begin(), ys.end(), rng);
    std::shuffle(zs.begin(), zs.end(), rng);
    for (std::uint32_t x = 0; x < p; ++x) try_add({x, ys[x], zs[x]});
  }
  std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
  for (std::size_t attempts = 0; inst.triples.size() < q && attempts < 100000; ++attempts)
    try_add({pick(rng), pick(rng), pick(rng)});
  if (inst.triples.size() < q) throw Error(ErrorCode::kMalformedInstance, "q exceeds what the occurrence bound allows");
  std::shuffle(inst.triples.begin(), inst.triples.end(), rng);
  return inst;
}

Graph random_gnp(std::size_t n, double prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(prob);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::undirected(n, edges);
}

// Bipartite graph of order 4k, maximum degree 3, containing k planted
// induced P4s plus random extra edges between opposite sides.
Graph random_4uipp_base(std::size_t k, std::size_t extra, std::mt19937_64& rng) {
  const auto n = 4 * k;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::uint8_t> side(n);
  std::vector<std::size_t> deg(n, 0);
  std::set<Edge> edges;
  auto link = [&](Vertex u, Vertex v) {
    edges.insert({std::min(u, v), std::max(u, v)});
    ++deg[u];
    ++deg[v];
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < 4; ++j) side[perm[4 * i + j]] = j % 2;
    for (std::size_t j = 0; j + 1 < 4; ++j) link(perm[4 * i + j], perm[4 * i + j + 1]);
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t added = 0, attempts = 0; added < extra && attempts < 100000; ++attempts) {
    Vertex u = pick(rng), v = pick(rng);
    if (side[u] == side[v] || deg[u] >= 3 || deg[v] >= 3 || edges.count({std::min(u, v), std::max(u, v)})) continue;
    link(u, v);
    ++added;
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::undirected(n, list);
}

struct GenerateFlags {
  std::string family;
  std::uint64_t seed = 1;
  std::string out;
  std::string base;
  std::uint32_t p = 1;
  std::size_t q = 1;
  std::string orientation = "cw";
  std::string kind = "spp";
  std::size_t n = 5;
  double prob = 0.5;
  std::size_t k = 2;
  std::size_t extra = 0;
};

int cmd_generate(const GenerateFlags& f, std::ostream& out) {
  std::mt19937_64 rng(f.seed);
  ReductionOutput red;
  if (f.family == "3dm") {
    auto inst = random_3dm(f.p, f.q, rng);
    Orientation o = f.orientation == "ccw" ? Orientation::kCounterClockwise : Orientation::kClockwise;
    red = gen_3dm_to_dagspp(inst, std::vector<Orientation>(inst.triples.size(), o), parse_kind(f.kind));
  } else if (f.family == "clique") {
    auto base = f.base.empty() ? random_gnp(f.n, f.prob, rng) : read_graph_file(f.base);
    red = gen_clique_to_dagspp(base, f.k);
  } else {
    auto base = f.base.empty() ? random_4uipp_base(f.k, f.extra, rng) : read_graph_file(f.base);
    red = gen_4uipp_to_uspp(base);
  }
  {
    std::ofstream gf(f.out + ".graph");
    if (!gf) throw Error(ErrorCode::kParseError, "cannot write " + f.out + ".graph");
    gf << "c " << f.family << " reduction, k_target " << red.k_target << '\n';
    write_graph(gf, red.graph);
    std::ofstream lf(f.out + ".labels");
    write_labels(lf, red.labels);
  }
  out << "k_target " << red.k_target << '\n';
  return kExitOk;
}

int exit_code(ErrorCode code, bool generating) {
  switch (code) {
    case ErrorCode::kParseError:
      return kExitParse;
    case ErrorCode::kUnsupportedInput:
    case ErrorCode::kNotADag:
      return kExitUnsupported;
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    default:
      return generating ? kExitGenerator : kExitInvalid;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Path partition and cover solvers"};
  app.require_subcommand(1);

  SolveFlags solve;
  auto* s = app.add_subcommand("solve", "Solve a path partition or cover problem");
  s->add_option("file", solve.file, "Graph file")->required();
  s->add_option("--kind", solve.kind, "pp, ipp or spp")->check(CLI::IsMember({"pp", "ipp", "spp"}));
  s->add_option("--mode", solve.mode, "partition, cover or ed-cover")
      ->check(CLI::IsMember({"partition", "cover", "ed-cover"}));
  s->add_option("--algo", solve.algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "oracle", "dag-pp", "xp", "nd", "vc", "dual"}));
  s->add_option("--k", solve.k, "Decide whether at most k paths suffice");
  s->add_option("--k-dual", solve.k_dual, "Decide whether at most n - k paths suffice");
  s->add_option("--threads", solve.threads, "Worker threads")->check(CLI::PositiveNumber);
  s->add_option("--dump-ilp", solve.dump_ilp, "Write the class programs to this file (nd)");

  std::string params_file;
  auto* pc = app.add_subcommand("params", "Report structural parameters");
  pc->add_option("file", params_file, "Graph file")->required();

  GenerateFlags gen;
  auto* gc = app.add_subcommand("generate", "Generate a reduction instance");
  gc->add_option("family", gen.family, "3dm, clique or 4uipp")->required()->check(CLI::IsMember({"3dm", "clique", "4uipp"}));
  gc->add_option("--seed", gen.seed, "Random seed");
  gc->add_option("--out", gen.out, "Output prefix")->required();
  gc->add_option("--base", gen.base, "Source graph file (clique, 4uipp)");
  gc->add_option("--p", gen.p, "3-DM elements per side")->check(CLI::PositiveNumber);
  gc->add_option("--q", gen.q, "3-DM triple count");
  gc->add_option("--orientation", gen.orientation, "cw or ccw (3dm)")->check(CLI::IsMember({"cw", "ccw"}));
  gc->add_option("--kind", gen.kind, "spp or ipp (3dm)")->check(CLI::IsMember({"spp", "ipp"}));
  gc->add_option("--n", gen.n, "Random source graph order (clique)");
  gc->add_option("--prob", gen.prob, "Random source edge probability (clique)")->check(CLI::Range(0.0, 1.0));
  gc->add_option("--k", gen.k, "Clique size, or number of planted P4s (4uipp)");
  gc->add_option("--extra", gen.extra, "Extra random edges (4uipp)");

  std::string verify_graph, verify_solution;
  auto* vc = app.add_subcommand("verify", "Check a solution file against a graph");
  vc->add_option("graph", verify_graph, "Graph file")->required();
  vc->add_option("solution", verify_solution, "Solution JSON")->required();

  std::vector<std::string> argv_store{"pathpart"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*s) return cmd_solve(solve, out);
    if (*pc) return cmd_params(params_file, out);
    if (*gc) return cmd_generate(gen, out);
    return cmd_verify(verify_graph, verify_solution, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code(), static_cast<bool>(*gc));
  }
}

}  // namespace pathpart
