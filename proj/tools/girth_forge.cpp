#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gf/basegen.hpp"
#include "gf/excise.hpp"
#include "gf/runner.hpp"
#include "gf/verify.hpp"

using namespace gf;
namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Pregraph> load_bases(const std::string& path) {
  std::vector<Pregraph> bases;
  std::istringstream in(slurp(path));
  std::string line, block;
  auto flush = [&] {
    if (block.find_first_not_of(" \t\n") != std::string::npos)
      bases.push_back(parse_pregraph(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty())
      flush();
    else
      block += line + "\n";
  }
  flush();
  return bases;
}

std::vector<SimpleGraph> load_graph6(const std::string& path) {
  std::vector<SimpleGraph> gs;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) gs.push_back(from_graph6(line));
  return gs;
}

int cmd_gen_base(int k, int n, bool no_loops, bool no_semi,
                 const std::string& out) {
  auto bases = generate_base_graphs(k, n, !no_loops, !no_semi);
  std::ostringstream ss;
  for (const auto& b : bases) ss << serialize_pregraph(b) << "\n";
  if (out.empty())
    std::cout << ss.str();
  else
    std::ofstream(out) << ss.str();
  std::cerr << bases.size() << " base graphs\n";
  return 0;
}

int cmd_search(const std::string& mode, int k, int g,
               const std::string& bases_file, const std::string& groups_dir,
               const std::string& config_file, int hill_n,
               const std::string& out_dir) {
  SearchConfig cfg;
  if (!config_file.empty()) cfg = parse_search_config(slurp(config_file));
  cfg.g_min = g;
  cfg.rng_seed = seed_from_env(cfg.rng_seed);
  fs::create_directories(out_dir);

  std::vector<FiniteGroup> groups;
  std::vector<std::string> files;
  for (const auto& ent : fs::directory_iterator(groups_dir))
    if (ent.is_regular_file()) files.push_back(ent.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) groups.push_back(group_by_name(f));
  if (groups.empty()) throw std::runtime_error("no group tables in " + groups_dir);

  long long total = 0;
  auto out_sink = [&](const std::string& tag) {
    auto path = fs::path(out_dir) / (tag + ".g6");
    return [&, path](const SimpleGraph& lifted, const VoltageAssignment&) {
      if (!is_k_regular(lifted, k)) return false;
      std::ofstream(path, std::ios::app) << to_graph6(lifted) << "\n";
      total++;
      return true;
    };
  };

  if (mode == "hill") {
    if (hill_n <= 0) throw std::runtime_error("hill mode needs --n");
    for (const auto& gr : groups) {
      auto res = hill_climb(hill_n, gr, g, cfg.t_ts,
                            out_sink("hill-" + gr.name));
      std::cerr << "hill " << gr.name << ": " << res.steps << " steps\n";
    }
  } else {
    std::vector<Pregraph> bases = load_bases(bases_file);
    for (size_t bi = 0; bi < bases.size(); bi++)
      for (const auto& gr : groups) {
        std::string tag = "base" + std::to_string(bi) + "-" + gr.name;
        if (mode == "bta")
          bta(bases[bi], gr, cfg, out_sink(tag));
        else if (mode == "tabu")
          tabu_search(bases[bi], gr, cfg, CostMode::kGirth, out_sink(tag));
        else
          throw std::runtime_error("unknown mode " + mode);
      }
  }
  std::cerr << total << " lifts written to " << out_dir << "\n";
  return 0;
}

int cmd_excise(const std::string& pattern, const std::string& cage_file, int k,
               const std::string& out) {
  SimpleGraph g = load_graph6(cage_file).at(0);
  ExcisionPlan plan = plan_excision(g, pattern_from_name(pattern), k);
  SimpleGraph h = excise(g, plan);
  std::cerr << "anchors u=" << plan.u << " v=" << plan.v << ", removed "
            << plan.removed.size() << " vertices, " << h.n << " remain\n";
  if (out.empty())
    std::cout << to_graph6(h) << "\n";
  else
    std::ofstream(out) << to_graph6(h) << "\n";
  return 0;
}

int cmd_complete(int k, int g, int limit, double budget,
                 const std::string& in_file, const std::string& out_dir) {
  SimpleGraph damaged = load_graph6(in_file).at(0);
  auto done = complete_to_regular(damaged, k, g, limit, budget);
  fs::create_directories(out_dir);
  std::ofstream out(fs::path(out_dir) / "completions.g6");
  for (const auto& r : done) out << to_graph6(r) << "\n";
  std::cerr << done.size() << " completions\n";
  return done.empty() ? 1 : 0;
}

int cmd_verify(const std::string& in_file, int k, int g, bool vgr, bool egr,
               bool no_g1, const std::string& report) {
  ClassifyTargets targets;
  targets.lambdas = vgr || egr;
  targets.g_plus_1 = no_g1;
  bool all_ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& graph : load_graph6(in_file)) {
    GraphReport r = classify(graph, targets);
    bool ok = true;
    if (k > 0) ok = ok && r.min_degree == k && r.max_degree == k;
    if (g > 0) ok = ok && r.girth == g;
    if (no_g1) ok = ok && !r.has_g_plus_1_cycle;
    all_ok = all_ok && ok;
    nlohmann::json j{{"n", r.n},
                     {"min_degree", r.min_degree},
                     {"max_degree", r.max_degree},
                     {"girth", r.girth == kInfGirth ? -1 : r.girth},
                     {"connected", r.connected},
                     {"bipartite", r.bipartite},
                     {"ok", ok}};
    if (r.lambda_v) j["lambda_v"] = *r.lambda_v;
    if (r.lambda_e) j["lambda_e"] = *r.lambda_e;
    if (targets.g_plus_1) j["has_g_plus_1_cycle"] = r.has_g_plus_1_cycle;
    if (k > 0 && r.girth != kInfGirth)
      j["moore_deficiency"] = r.moore_deficiency;
    if (report == "json") {
      out.push_back(j);
    } else {
      std::cout << "n=" << r.n << " degree=[" << r.min_degree << ","
                << r.max_degree << "] girth="
                << (r.girth == kInfGirth ? std::string("inf")
                                         : std::to_string(r.girth))
                << (r.connected ? " connected" : " disconnected")
                << (r.bipartite ? " bipartite" : "");
      if (r.lambda_v) std::cout << " lambda_v=" << *r.lambda_v;
      if (r.lambda_e) std::cout << " lambda_e=" << *r.lambda_e;
      if (targets.g_plus_1)
        std::cout << (r.has_g_plus_1_cycle ? " has-g1" : " no-g1");
      std::cout << (ok ? " OK" : " FAIL") << "\n";
    }
  }
  if (report == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_run(const std::string& jobs_file, int workers,
            const std::string& catalog_file) {
  auto jobs = parse_jobs(slurp(jobs_file));
  Catalog cat(catalog_file);
  RunSummary sum = run(jobs, workers, cat);
  nlohmann::json j{{"jobs", sum.jobs},
                   {"emitted", sum.emitted},
                   {"inserted", sum.inserted},
                   {"duplicates", sum.duplicates},
                   {"errors", sum.errors}};
  for (const auto& [key, best] : sum.best)
    j["best"][key] = {{"order", best.order}, {"count", best.count}};
  std::cout << j.dump(2) << "\n";
  return sum.errors.empty() ? 0 : 1;
}

int cmd_catalog_best(const std::string& problem,
                     const std::string& catalog_file) {
  Catalog cat(catalog_file);
  auto b = cat.best(parse_problem(problem).key());
  if (b.order < 0) {
    std::cout << "none\n";
    return 1;
  }
  std::cout << b.order << " " << b.count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"voltage-graph lift search for small regular graphs of given girth"};
  app.require_subcommand(1);

  int k = 3, n = 2, g = 5, limit = 100, workers = 1, hill_n = 0;
  double budget = 10.0;
  bool no_loops = false, no_semi = false, vgr = false, egr = false,
       no_g1 = false;
  std::string out, mode = "bta", bases, groups, config, pattern, in_file,
              report = "text", jobs, catalog, problem;

  auto* gen = app.add_subcommand("gen-base", "generate k-regular base pregraphs");
  gen->add_option("--k", k)->required();
  gen->add_option("--n", n)->required();
  gen->add_flag("--no-loops", no_loops);
  gen->add_flag("--no-semi", no_semi);
  gen->add_option("-o", out);

  auto* se = app.add_subcommand("search", "search voltage assignments");
  se->add_option("--mode", mode)->check(CLI::IsMember({"bta", "tabu", "hill"}));
  se->add_option("--k", k)->required();
  se->add_option("--girth", g)->required();
  se->add_option("--bases", bases);
  se->add_option("--groups", groups)->required();
  se->add_option("--config", config);
  se->add_option("--n", hill_n, "base order for hill mode");
  se->add_option("-o", out)->required();

  auto* ex = app.add_subcommand("excise", "remove an excision pattern from a cage");
  ex->add_option("--pattern", pattern)->required();
  ex->add_option("--cage", in_file)->required();
  ex->add_option("--k", k)->required();
  ex->add_option("-o", out);

  auto* co = app.add_subcommand("complete", "complete a damaged graph to k-regular");
  co->add_option("--k", k)->required();
  co->add_option("--girth", g)->required();
  co->add_option("--limit", limit);
  co->add_option("--budget", budget);
  co->add_option("-i", in_file)->required();
  co->add_option("-o", out)->required();

  auto* ve = app.add_subcommand("verify", "classify graphs and check claims");
  ve->add_option("-i", in_file)->required();
  ve->add_option("--k", k);
  ve->add_option("--girth", g);
  ve->add_flag("--vgr", vgr);
  ve->add_flag("--egr", egr);
  ve->add_flag("--no-g1", no_g1);
  ve->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
  k = g = 0;  // verify checks only what is given

  auto* ru = app.add_subcommand("run", "execute a job list against a catalog");
  ru->add_option("--jobs", jobs)->required();
  ru->add_option("--workers", workers);
  ru->add_option("--catalog", catalog)->required();

  auto* ca = app.add_subcommand("catalog", "query the catalog");
  auto* cb = ca->add_subcommand("best", "best order for a problem");
  cb->add_option("--problem", problem)->required();
  cb->add_option("--catalog", catalog)->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (gen->parsed()) return cmd_gen_base(k, n, no_loops, no_semi, out);
    if (se->parsed())
      return cmd_search(mode, k, g, bases, groups, config, hill_n, out);
    if (ex->parsed()) return cmd_excise(pattern, in_file, k, out);
    if (co->parsed()) return cmd_complete(k, g, limit, budget, in_file, out);
    if (ve->parsed()) return cmd_verify(in_file, k, g, vgr, egr, no_g1, report);
    if (ru->parsed()) return cmd_run(jobs, workers, catalog);
    if (cb->parsed()) return cmd_catalog_best(problem, catalog);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
