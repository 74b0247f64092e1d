#include "gf/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gf {

namespace {

using Clock = std::chrono::steady_clock;

double now_s() {
  return std::chrono::duration<double>(Clock::now().time_since_epoch())
      .count();
}

}  // namespace

SearchConfig parse_search_config(const std::string& text) {
  SearchConfig c;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    auto as_i = [&] { return std::stoi(val); };
    auto as_d = [&] { return std::stod(val); };
    if (key == "g_min") c.g_min = as_i();
    else if (key == "g_nbr") c.g_nbr = as_i();
    else if (key == "t_bta") c.t_bta = as_d();
    else if (key == "t_ts") c.t_ts = as_d();
    else if (key == "t_ts_init") c.t_ts_init = as_d();
    else if (key == "t_edge_autos") c.t_edge_autos = as_d();
    else if (key == "max_edge_autos") c.max_edge_autos = as_i();
    else if (key == "max_group_autos") c.max_group_autos = as_i();
    else if (key == "tabu_len_factor") c.tabu_len_factor = as_i();
    else if (key == "penalty_C") c.penalty_C = as_d();
    else if (key == "walk_samples_m") c.walk_samples_m = as_i();
    else if (key == "stagnation_limit") c.stagnation_limit = as_i();
    else if (key == "perturb_moves") c.perturb_moves = as_i();
    else if (key == "rng_seed") c.rng_seed = std::stoull(val);
    else if (key == "prune_girth") c.prune_girth = as_i();
    else if (key == "prune_canon") c.prune_canon = as_i();
    else if (key == "use_edge_autos") c.use_edge_autos = as_i();
    else if (key == "use_group_autos") c.use_group_autos = as_i();
    else throw std::invalid_argument("unknown config key: " + key);
  }
  if (c.g_nbr > c.g_min) throw std::invalid_argument("g_nbr > g_min");
  return c;
}

std::string serialize_search_config(const SearchConfig& c) {
  std::ostringstream out;
  out << "g_min=" << c.g_min << "\ng_nbr=" << c.g_nbr
      << "\nt_bta=" << c.t_bta << "\nt_ts=" << c.t_ts
      << "\nt_ts_init=" << c.t_ts_init << "\nt_edge_autos=" << c.t_edge_autos
      << "\nmax_edge_autos=" << c.max_edge_autos
      << "\nmax_group_autos=" << c.max_group_autos
      << "\ntabu_len_factor=" << c.tabu_len_factor
      << "\npenalty_C=" << c.penalty_C
      << "\nwalk_samples_m=" << c.walk_samples_m
      << "\nstagnation_limit=" << c.stagnation_limit
      << "\nperturb_moves=" << c.perturb_moves << "\nrng_seed=" << c.rng_seed
      << "\nprune_girth=" << c.prune_girth << "\nprune_canon=" << c.prune_canon
      << "\nuse_edge_autos=" << c.use_edge_autos
      << "\nuse_group_autos=" << c.use_group_autos << "\n";
  return out.str();
}

uint64_t seed_from_env(uint64_t fallback) {
  const char* env = std::getenv("GIRTH_FORGE_SEED");
  if (!env || !*env) return fallback;
  return std::strtoull(env, nullptr, 10);
}

int resolved_g_nbr(const SearchConfig& c, CostMode mode) {
  if (c.g_nbr > 0) return c.g_nbr;
  return mode == CostMode::kGirth ? std::max(3, c.g_min - 2) : c.g_min;
}

namespace {

struct AutoSets {
  std::vector<EdgeAutomorphism> edge;
  std::vector<GroupAutomorphism> group;
};

AutoSets collect_autos(const Pregraph& g, const FiniteGroup& gr,
                       const SpanningTree& tree, const SearchConfig& cfg) {
  AutoSets a;
  if (cfg.use_edge_autos) {
    a.edge = edge_automorphisms(g, tree, cfg.max_edge_autos, cfg.t_edge_autos)
                 .autos;
  } else {
    EdgeAutomorphism id;
    id.vertex_perm.resize(g.n);
    id.edge_perm.resize(g.edges.size());
    id.dart_perm.resize(g.darts.size());
    for (int v = 0; v < g.n; v++) id.vertex_perm[v] = v;
    for (size_t e = 0; e < g.edges.size(); e++) id.edge_perm[e] = (int)e;
    for (size_t d = 0; d < g.darts.size(); d++) id.dart_perm[d] = (int)d;
    a.edge.push_back(std::move(id));
  }
  if (cfg.use_group_autos) {
    a.group = automorphisms(gr, cfg.max_group_autos).autos;
  } else {
    GroupAutomorphism id;
    id.perm.resize(gr.n);
    for (int i = 0; i < gr.n; i++) id.perm[i] = i;
    a.group.push_back(std::move(id));
  }
  return a;
}

struct BtaCtx {
  const Pregraph& g;
  const FiniteGroup& gr;
  const SearchConfig& cfg;
  const LiftSink& sink;
  Structural* st;
  AutoSets autos;
  double deadline;
  BtaResult res;
  bool stop_on_first = false;
  bool found_first = false;
  int first_g_req = 0;  // girth requirement in stop_on_first mode

  void rec(size_t level) {
    if (found_first || (!res.complete)) return;
    if (now_s() > deadline) {
      res.complete = false;
      return;
    }
    if (level == st->useful.size()) {
      if (stop_on_first) {
        found_first = true;
        return;
      }
      res.leaves++;
      auto lifted = lift(g, gr, st->alpha);
      if (lifted && sink(*lifted, st->alpha)) res.emitted++;
      return;
    }
    int d = st->useful[level];
    int g_req = stop_on_first ? first_g_req : cfg.g_min;
    for (int a : st->admissible[level]) {
      st->alpha.set(g, gr, d, a);
      if (cfg.prune_girth && cannot_achieve_girth(g, gr, d, g_req, st->alpha))
        continue;
      if (cfg.prune_canon && not_canonical(g, gr, st->alpha, st->useful,
                                           autos.edge, autos.group))
        continue;
      rec(level + 1);
      if (found_first || !res.complete) break;
    }
    if (!found_first) st->alpha.clear(g, d);
  }
};

}  // namespace

BtaResult bta(const Pregraph& g, const FiniteGroup& gr,
              const SearchConfig& cfg, const LiftSink& sink) {
  auto st = structural_checks(g, gr, cfg.g_min);
  if (!st) {
    BtaResult r;
    r.rejected = true;
    return r;
  }
  BtaCtx ctx{g, gr, cfg, sink, &*st,
             collect_autos(g, gr, st->tree, cfg),
             now_s() + cfg.t_bta};
  ctx.rec(0);
  return ctx.res;
}

double cost_girth(const Pregraph& g, const FiniteGroup& gr,
                  const VoltageAssignment& alpha, int g_min, int m, double C,
                  std::mt19937_64& rng) {
  // all assigned darts, with out-lists restricted to assigned ones
  std::vector<int> darts;
  for (int d = 0; d < (int)g.darts.size(); d++)
    if (g.darts[d].edge >= 0 && alpha.assigned(d)) darts.push_back(d);
  if (darts.empty() || m <= 0) return 0.0;
  std::vector<std::vector<int>> out(g.n);
  for (int d : darts) out[g.darts[d].tail].push_back(d);

  double total = 0.0;
  int max_len = 2 * g_min;
  for (int i = 0; i < m; i++) {
    for (int attempt = 0; attempt < 50; attempt++) {
      int d0 = darts[rng() % darts.size()];
      int start = g.darts[d0].tail;
      int net = alpha.volt[d0];
      int pos = g.darts[d0].head;
      int prev = d0;
      int len = 1;
      bool closed = (pos == start);
      while (!closed && len < max_len) {
        // non-reversing next darts
        int choices = 0, pick = -1;
        int prev_inv = g.darts[prev].inv;
        for (int d : out[pos]) {
          if (d == prev_inv) continue;
          choices++;
          if (rng() % choices == 0) pick = d;
        }
        if (pick < 0) break;  // dead end
        net = gr.mul(net, alpha.volt[pick]);
        pos = g.darts[pick].head;
        prev = pick;
        len++;
        closed = (pos == start);
      }
      if (!closed) continue;
      total += gr.ord(net) == 1 ? C : 1.0 / (double(len) * gr.ord(net));
      break;
    }
  }
  return total;
}

double cost_reg(const Pregraph& g, const FiniteGroup& gr,
                const VoltageAssignment& alpha, int girth_cap) {
  int girth = lift_girth_via_base(g, gr, alpha, girth_cap);
  if (girth > girth_cap) return 0.0;  // no short walks: uniform zero counts

  std::vector<long long> fv(g.n, 0), fd(g.darts.size(), 0);
  // all closed non-reversing walks of net voltage 0 and length == girth
  std::vector<int> walk;
  std::function<void(int, int, int, int)> dfs = [&](int start, int pos,
                                                    int net, int prev) {
    if ((int)walk.size() == girth) {
      if (pos == start && net == 0) {
        fv[start]++;
        for (int d : walk) {
          fd[d]++;
          fv[g.darts[d].head]++;
        }
        fv[start]--;  // start == final head, counted once per visit
      }
      return;
    }
    for (int d : g.out[pos]) {
      if (!alpha.assigned(d)) continue;
      if (prev >= 0 && d == g.darts[prev].inv) continue;
      walk.push_back(d);
      dfs(start, g.darts[d].head, gr.mul(net, alpha.volt[d]), d);
      walk.pop_back();
    }
  };
  for (int v = 0; v < g.n; v++) dfs(v, v, 0, -1);

  auto variance = [](const std::vector<long long>& xs) {
    if (xs.empty()) return 0.0;
    double mean = 0;
    for (long long x : xs) mean += double(x);
    mean /= double(xs.size());
    double var = 0;
    for (long long x : xs)
      var += (double(x) - mean) * (double(x) - mean);
    return var / double(xs.size());
  };
  // only real darts (skip unused semi-edge slots)
  std::vector<long long> fd_real;
  for (size_t d = 0; d < g.darts.size(); d++)
    if (g.darts[d].edge >= 0) fd_real.push_back(fd[d]);
  return std::min(variance(fv), variance(fd_real));
}

namespace {

struct TabuList {
  size_t capacity;
  std::deque<std::pair<int, int>> q;

  void push(std::pair<int, int> move) {
    q.push_back(move);
    while (q.size() > capacity) q.pop_front();
  }
  bool contains(std::pair<int, int> move) const {
    return std::find(q.begin(), q.end(), move) != q.end();
  }
};

}  // namespace

TsResult tabu_search(const Pregraph& g, const FiniteGroup& gr,
                     const SearchConfig& cfg, CostMode mode,
                     const LiftSink& sink) {
  TsResult res;
  auto st = structural_checks(g, gr, cfg.g_min);
  if (!st) {
    res.rejected = true;
    return res;
  }
  int g_nbr = resolved_g_nbr(cfg, mode);
  AutoSets autos = collect_autos(g, gr, st->tree, cfg);

  // initial solution: first assignment valid at g_nbr, depth-first ascending
  {
    BtaCtx init{g,   gr,  cfg, sink, &*st,
                autos, now_s() + cfg.t_ts_init};
    init.stop_on_first = true;
    init.first_g_req = g_nbr;
    init.rec(0);
    if (!init.found_first) return res;  // init_ok stays false
  }
  res.init_ok = true;

  std::mt19937_64 rng(seed_from_env(cfg.rng_seed));
  TabuList tabu{size_t(cfg.tabu_len_factor) * size_t(gr.n), {}};
  double c_global = std::numeric_limits<double>::infinity();
  double deadline = now_s() + cfg.t_ts;
  long long since_improvement = 0;
  size_t m = st->useful.size();

  auto cost = [&]() {
    return mode == CostMode::kGirth
               ? cost_girth(g, gr, st->alpha, cfg.g_min, cfg.walk_samples_m,
                            cfg.penalty_C, rng)
               : cost_reg(g, gr, st->alpha, 2 * cfg.g_min);
  };
  auto perturb = [&]() {
    for (int i = 0; i < cfg.perturb_moves && m > 0; i++) {
      for (int attempt = 0; attempt < 20; attempt++) {
        size_t pos = rng() % m;
        int d = st->useful[pos];
        const auto& N = st->admissible[pos];
        int b = N[rng() % N.size()];
        int old = st->alpha.volt[d];
        st->alpha.set(g, gr, d, b);
        if (cannot_achieve_girth(g, gr, d, g_nbr, st->alpha)) {
          st->alpha.set(g, gr, d, old);
          continue;
        }
        break;
      }
    }
  };

  while (now_s() < deadline) {
    res.iterations++;
    // current assignment achieving g_min is offered to the sink
    if (lift_girth_via_base(g, gr, st->alpha, cfg.g_min - 1) == cfg.g_min) {
      auto lifted = lift(g, gr, st->alpha);
      if (lifted && sink(*lifted, st->alpha)) res.emitted++;
    }
    if (since_improvement > cfg.stagnation_limit) {
      perturb();
      since_improvement = 0;
    }
    double c_best = std::numeric_limits<double>::infinity();
    int d_best = -1, b_best = -1;
    for (size_t pos = 0; pos < m; pos++) {
      int d = st->useful[pos];
      int a = st->alpha.volt[d];
      for (int b : st->admissible[pos]) {
        if (b == a) continue;
        st->alpha.set(g, gr, d, b);
        bool skip =
            (cfg.prune_girth &&
             cannot_achieve_girth(g, gr, d, g_nbr, st->alpha)) ||
            (cfg.prune_canon && not_canonical(g, gr, st->alpha, st->useful,
                                              autos.edge, autos.group));
        if (!skip) {
          double c = cost();
          if (c < c_best &&
              (!tabu.contains({d, b}) || c < c_global)) {
            c_best = c;
            d_best = d;
            b_best = b;
          }
        }
        st->alpha.set(g, gr, d, a);
      }
      if (now_s() > deadline) break;
    }
    if (c_best < c_global) {
      c_global = c_best;
      since_improvement = 0;
    } else {
      since_improvement++;
    }
    if (d_best >= 0) {
      int undo = st->alpha.volt[d_best];
      st->alpha.set(g, gr, d_best, b_best);
      tabu.push({d_best, undo});  // the move that would revert this change
    } else {
      perturb();
    }
  }
  res.best_cost = c_global;
  return res;
}

HillResult hill_climb(int n, const FiniteGroup& gr, int g, double budget_s,
                      const LiftSink& sink) {
  HillResult res;
  res.base.n = n;
  res.base.rebuild_darts();
  res.alpha = VoltageAssignment(0);
  double deadline = now_s() + budget_s;

  // candidate tuples: add one full edge (u <= v; loop when u == v) carrying
  // voltage a; ordered by (u, v, a) — i.e. smallest new dart index first
  struct Tuple {
    int u, v, a;
  };
  auto candidates = [&](const Pregraph& base, const VoltageAssignment& alpha) {
    std::vector<Tuple> out;
    Pregraph trial = base;
    VoltageAssignment va = alpha;
    va.volt.resize(alpha.volt.size() + 2, kUnassigned);
    for (int u = 0; u < n; u++)
      for (int v = u; v < n; v++) {
        trial.edges.push_back({u, v, false});
        trial.rebuild_darts();
        int d = int(2 * (trial.edges.size() - 1));
        for (int a = 0; a < gr.n; a++) {
          if (u == v && a == 0) continue;
          va.set(trial, gr, d, a);
          if (lift_girth_via_base(trial, gr, va, g - 1) >= g)
            out.push_back({u, v, a});
        }
        va.volt[d] = va.volt[d + 1] = kUnassigned;
        trial.edges.pop_back();
      }
    trial.rebuild_darts();
    return out;
  };

  while (now_s() < deadline) {
    std::vector<Tuple> ts = candidates(res.base, res.alpha);
    if (ts.empty()) break;
    // greedily maximize the number of follow-up tuples
    size_t best_i = 0;
    long long best_score = -1;
    for (size_t i = 0; i < ts.size() && now_s() < deadline; i++) {
      Pregraph next = res.base;
      next.edges.push_back({ts[i].u, ts[i].v, false});
      next.rebuild_darts();
      VoltageAssignment va = res.alpha;
      va.volt.resize(next.darts.size(), kUnassigned);
      va.set(next, gr, int(next.darts.size()) - 2, ts[i].a);
      long long score = (long long)candidates(next, va).size();
      if (score > best_score) {
        best_score = score;
        best_i = i;
      }
    }
    const Tuple& t = ts[best_i];
    res.base.edges.push_back({t.u, t.v, false});
    res.base.rebuild_darts();
    res.alpha.volt.resize(res.base.darts.size(), kUnassigned);
    res.alpha.set(res.base, gr, int(res.base.darts.size()) - 2, t.a);
    res.steps++;
    auto lifted = lift(res.base, gr, res.alpha);
    if (lifted) {
      sink(*lifted, res.alpha);
      res.best = std::move(*lifted);
    }
  }
  return res;
}

}  // namespace gf
