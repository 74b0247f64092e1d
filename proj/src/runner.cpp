#include "gf/runner.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gf/basegen.hpp"
#include "gf/excise.hpp"
#include "gf/verify.hpp"

namespace gf {
namespace {

using nlohmann::json;

std::vector<long long> parse_args(const std::string& text, size_t open) {
  size_t close = text.rfind(')');
  if (close == std::string::npos || close < open)
    throw std::runtime_error("malformed problem: " + text);
  std::vector<long long> out;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

}  // namespace

std::string Problem::key() const {
  std::ostringstream ss;
  switch (kind) {
    case Kind::kCage: ss << "cage(" << k << "," << g << ")"; break;
    case Kind::kVgr: ss << "vgr(" << k << "," << g << "," << param << ")"; break;
    case Kind::kEgr: ss << "egr(" << k << "," << g << "," << param << ")"; break;
    case Kind::kNoG1: ss << "no-g1(" << k << "," << g << ")"; break;
    case Kind::kSpectrum:
      ss << "spectrum(" << k << "," << g << "," << param << ")";
      break;
  }
  return ss.str();
}

Problem parse_problem(const std::string& text) {
  size_t open = text.find('(');
  if (open == std::string::npos)
    throw std::runtime_error("malformed problem: " + text);
  std::string head = text.substr(0, open);
  auto args = parse_args(text, open);
  Problem p;
  size_t need = 2;
  if (head == "cage") {
    p.kind = Problem::Kind::kCage;
  } else if (head == "vgr") {
    p.kind = Problem::Kind::kVgr;
    need = 3;
  } else if (head == "egr") {
    p.kind = Problem::Kind::kEgr;
    need = 3;
  } else if (head == "no-g1") {
    p.kind = Problem::Kind::kNoG1;
  } else if (head == "spectrum") {
    p.kind = Problem::Kind::kSpectrum;
    need = 3;
  } else {
    throw std::runtime_error("unknown problem kind: " + head);
  }
  if (args.size() != need)
    throw std::runtime_error("wrong argument count in " + text);
  p.k = (int)args[0];
  p.g = (int)args[1];
  if (need == 3) p.param = args[2];
  if (p.k < 2 || p.g < 3)
    throw std::runtime_error("problem needs k >= 2, g >= 3: " + text);
  return p;
}

bool problem_accepts(const Problem& p, const SimpleGraph& g) {
  if (!is_k_regular(g, p.k)) return false;
  ClassifyTargets t;
  t.lambdas = p.kind == Problem::Kind::kVgr || p.kind == Problem::Kind::kEgr;
  t.g_plus_1 = p.kind == Problem::Kind::kNoG1;
  GraphReport r = classify(g, t);
  if (r.girth != p.g) return false;
  switch (p.kind) {
    case Problem::Kind::kCage: return true;
    case Problem::Kind::kVgr: return r.lambda_v && *r.lambda_v == p.param;
    case Problem::Kind::kEgr: return r.lambda_e && *r.lambda_e == p.param;
    case Problem::Kind::kNoG1: return !r.has_g_plus_1_cycle;
    case Problem::Kind::kSpectrum: return g.n == p.param;
  }
  return false;
}

FiniteGroup group_by_name(const std::string& name) {
  if (name.find('/') != std::string::npos ||
      name.find(".tbl") != std::string::npos) {
    std::ifstream in(name);
    if (!in.good()) throw std::runtime_error("cannot open group file " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    FiniteGroup g = load_group(ss.str());
    if (g.name.empty()) g.name = std::filesystem::path(name).stem().string();
    return g;
  }
  size_t x = name.find('x');
  if (x != std::string::npos) {
    FiniteGroup g = direct_product(group_by_name(name.substr(0, x)),
                                   group_by_name(name.substr(x + 1)));
    g.name = name;
    return g;
  }
  size_t colon = name.find(':');
  if (colon != std::string::npos) {
    // Cm:Cn(t)
    size_t open = name.find('(', colon);
    if (name[0] != 'C' || name[colon + 1] != 'C' || open == std::string::npos)
      throw std::runtime_error("unknown group name: " + name);
    int m = std::stoi(name.substr(1, colon - 1));
    int n = std::stoi(name.substr(colon + 2, open - colon - 2));
    long t = std::stol(name.substr(open + 1));
    FiniteGroup g = semidirect_product_cyclic(m, n, t);
    g.name = name;
    return g;
  }
  if (name.size() > 1 && name[0] == 'C') return cyclic(std::stoi(name.substr(1)));
  if (name.size() > 1 && name[0] == 'D')
    return dihedral(std::stoi(name.substr(1)));
  throw std::runtime_error("unknown group name: " + name);
}

std::vector<JobSpec> parse_jobs(const std::string& json_text) {
  json doc = json::parse(json_text);
  if (!doc.is_array()) throw std::runtime_error("jobs file: expected an array");
  std::vector<JobSpec> jobs;
  for (const auto& j : doc) {
    JobSpec job;
    job.problem = parse_problem(j.at("problem").get<std::string>());
    job.mode = j.value("mode", std::string("bta"));
    job.base_file = j.value("base_file", std::string());
    job.base_k = j.value("base_k", 0);
    job.base_n_max = j.value("base_n_max", 0);
    if (j.contains("groups"))
      job.groups = j["groups"].get<std::vector<std::string>>();
    job.group_dir = j.value("group_dir", std::string());
    job.hill_n = j.value("hill_n", 0);
    job.graph_file = j.value("graph_file", std::string());
    job.pattern = j.value("pattern", std::string());
    job.config.g_min = job.problem.g;
    if (j.contains("config")) {
      std::ostringstream cfg;
      for (auto it = j["config"].begin(); it != j["config"].end(); ++it)
        cfg << it.key() << "="
            << (it.value().is_string() ? it.value().get<std::string>()
                                       : it.value().dump())
            << "\n";
      SearchConfig base = job.config;
      SearchConfig parsed = parse_search_config(cfg.str());
      // parse_search_config starts from defaults; re-apply on top of g_min
      base = parsed;
      if (!j["config"].contains("g_min")) base.g_min = job.problem.g;
      job.config = base;
    }
    jobs.push_back(std::move(job));
  }
  return jobs;
}

std::string digest_of(const std::string& canonical) {
  // FNV-1a, stable across runs and platforms
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

Catalog::Catalog(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in.good()) return;  // fresh catalog
  std::string line;
  for (long long no = 1; std::getline(in, line); no++) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
      seen_.insert({j.at("problem").get<std::string>(),
                    j.at("digest").get<std::string>()});
      orders_[j["problem"]][j.at("order").get<int>()]++;
    } catch (const std::exception& e) {
      throw std::runtime_error("corrupt catalog line " + std::to_string(no) +
                               " in " + path_ + ": " + e.what());
    }
  }
}

bool Catalog::insert(const CatalogEntry& e) {
  std::lock_guard<std::mutex> lk(mu_);
  if (!seen_.insert({e.problem, e.digest}).second) return false;
  orders_[e.problem][e.order]++;
  json j{{"problem", e.problem},
         {"order", e.order},
         {"digest", e.digest},
         {"provenance", json::parse(e.provenance.empty() ? "{}" : e.provenance)}};
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << "\n";
  return true;
}

Catalog::Best Catalog::best(const std::string& problem_key) const {
  std::lock_guard<std::mutex> lk(mu_);
  auto it = orders_.find(problem_key);
  if (it == orders_.end() || it->second.empty()) return {};
  auto first = it->second.begin();
  return {first->first, first->second};
}

size_t Catalog::size() const {
  std::lock_guard<std::mutex> lk(mu_);
  return seen_.size();
}

namespace {

std::vector<Pregraph> job_bases(const JobSpec& job) {
  std::vector<Pregraph> bases;
  if (!job.base_file.empty()) {
    std::ifstream in(job.base_file);
    if (!in.good())
      throw std::runtime_error("cannot open base file " + job.base_file);
    std::stringstream block;
    std::string line;
    auto flush = [&] {
      std::string text = block.str();
      if (text.find_first_not_of(" \t\n") != std::string::npos)
        bases.push_back(parse_pregraph(text));
      block.str("");
    };
    while (std::getline(in, line)) {
      if (line.empty())
        flush();
      else
        block << line << "\n";
    }
    flush();
  }
  for (int n = 1; n <= job.base_n_max; n++) {
    auto gen = generate_base_graphs(job.base_k, n);
    bases.insert(bases.end(), gen.begin(), gen.end());
  }
  return bases;
}

std::vector<FiniteGroup> job_groups(const JobSpec& job) {
  std::vector<FiniteGroup> groups;
  for (const auto& name : job.groups) groups.push_back(group_by_name(name));
  if (!job.group_dir.empty()) {
    std::vector<std::string> files;
    for (const auto& ent : std::filesystem::directory_iterator(job.group_dir))
      if (ent.is_regular_file()) files.push_back(ent.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw std::runtime_error("no group tables in " + job.group_dir);
    for (const auto& f : files) groups.push_back(group_by_name(f));
  }
  return groups;
}

struct JobStats {
  long long emitted = 0, inserted = 0, duplicates = 0;
};

void run_one(const JobSpec& job, Catalog& cat, JobStats& stats) {
  const std::string pkey = job.problem.key();
  auto timestamp = [] {
    return (long long)std::chrono::duration_cast<std::chrono::seconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  };
  SearchConfig cfg = job.config;
  cfg.rng_seed = seed_from_env(cfg.rng_seed);

  auto sink_for = [&](const std::string& base_id, const std::string& group) {
    return [&, base_id, group](const SimpleGraph& lifted,
                               const VoltageAssignment& alpha) {
      if (!problem_accepts(job.problem, lifted)) return false;
      stats.emitted++;
      std::ostringstream volts;
      for (int a : alpha.volt) volts << a << ",";
      CatalogEntry e;
      e.problem = pkey;
      e.order = lifted.n;
      e.digest = digest_of(canonical_form(lifted));
      json prov{{"mode", job.mode},
                {"base", base_id},
                {"group", group},
                {"assignment", digest_of(volts.str())},
                {"seed", cfg.rng_seed},
                {"timestamp", timestamp()}};
      e.provenance = prov.dump();
      if (cat.insert(e))
        stats.inserted++;
      else
        stats.duplicates++;
      return true;
    };
  };

  if (job.mode == "excise") {
    std::ifstream in(job.graph_file);
    if (!in.good())
      throw std::runtime_error("cannot open graph file " + job.graph_file);
    std::string line;
    std::getline(in, line);
    SimpleGraph g = from_graph6(line);
    ExcisionPlan plan =
        plan_excision(g, pattern_from_name(job.pattern), job.problem.k);
    SimpleGraph h = excise(g, plan);
    auto sink = sink_for(job.graph_file + ":" + job.pattern, "-");
    for (const auto& done :
         complete_to_regular(h, job.problem.k, job.problem.g, 1000, cfg.t_bta))
      sink(done, VoltageAssignment(0));
    return;
  }

  std::vector<FiniteGroup> groups = job_groups(job);
  if (groups.empty()) throw std::runtime_error("job has no groups: " + pkey);

  if (job.mode == "hill") {
    if (job.hill_n <= 0) throw std::runtime_error("hill mode needs hill_n");
    for (const auto& gr : groups)
      hill_climb(job.hill_n, gr, job.problem.g, cfg.t_ts,
                 sink_for("hill-n" + std::to_string(job.hill_n), gr.name));
    return;
  }

  std::vector<Pregraph> bases = job_bases(job);
  if (bases.empty()) throw std::runtime_error("job has no base graphs: " + pkey);
  for (size_t bi = 0; bi < bases.size(); bi++) {
    std::string base_id = "base" + std::to_string(bi) + "-n" +
                          std::to_string(bases[bi].n) + "e" +
                          std::to_string(bases[bi].edges.size());
    for (const auto& gr : groups) {
      auto sink = sink_for(base_id, gr.name);
      if (job.mode == "bta") {
        bta(bases[bi], gr, cfg, sink);
      } else if (job.mode == "tabu") {
        CostMode mode = job.problem.kind == Problem::Kind::kVgr ||
                                job.problem.kind == Problem::Kind::kEgr
                            ? CostMode::kRegularity
                            : CostMode::kGirth;
        tabu_search(bases[bi], gr, cfg, mode, sink);
      } else {
        throw std::runtime_error("unknown mode: " + job.mode);
      }
    }
  }
}

}  // namespace

RunSummary run(const std::vector<JobSpec>& jobs, int workers, Catalog& cat) {
  RunSummary sum;
  sum.jobs = (int)jobs.size();
  std::vector<JobStats> stats(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        run_one(jobs[i], cat, stats[i]);
      } catch (const std::exception& e) {
        errors[i] = jobs[i].problem.key() + ": " + e.what();
      }
    }
  };
  int nthreads = std::max(1, std::min<int>(workers, (int)jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; t++) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (size_t i = 0; i < jobs.size(); i++) {
    sum.emitted += stats[i].emitted;
    sum.inserted += stats[i].inserted;
    sum.duplicates += stats[i].duplicates;
    if (!errors[i].empty()) sum.errors.push_back(errors[i]);
    sum.best[jobs[i].problem.key()] = cat.best(jobs[i].problem.key());
  }
  return sum;
}

}  // namespace gf
