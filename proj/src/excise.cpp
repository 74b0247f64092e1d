#include "gf/excise.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

namespace gf {
namespace {

std::vector<int> at_distance(const std::vector<int>& dist, int d) {
  std::vector<int> out;
  for (int v = 0; v < (int)dist.size(); v++)
    if (dist[v] == d) out.push_back(v);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error("excision precondition failed: " + what);
}

}  // namespace

ExcisionPattern pattern_from_name(const std::string& name) {
  if (name == "girth8-original") return ExcisionPattern::kGirth8Original;
  if (name == "girth8-full") return ExcisionPattern::kGirth8Full;
  if (name == "girth12-k4") return ExcisionPattern::kGirth12K4;
  if (name == "girth12-k6") return ExcisionPattern::kGirth12K6;
  throw std::runtime_error("unknown excision pattern: " + name);
}

std::string pattern_name(ExcisionPattern p) {
  switch (p) {
    case ExcisionPattern::kGirth8Original: return "girth8-original";
    case ExcisionPattern::kGirth8Full: return "girth8-full";
    case ExcisionPattern::kGirth12K4: return "girth12-k4";
    case ExcisionPattern::kGirth12K6: return "girth12-k6";
  }
  return "?";
}

std::vector<int> neighborhood(const SimpleGraph& g, int v, int i) {
  return at_distance(bfs_distances(g, v), i);
}

std::vector<int> co_neighborhood(const SimpleGraph& g, int u, int v, int i) {
  auto du = bfs_distances(g, u), dv = bfs_distances(g, v);
  std::vector<int> out;
  for (int w = 0; w < g.n; w++)
    if (du[w] == i && dv[w] == i) out.push_back(w);
  return out;
}

ExcisionPlan plan_excision(const SimpleGraph& g, ExcisionPattern pattern,
                           int k, int anchor_u, int anchor_v) {
  const int need_dist =
      (pattern == ExcisionPattern::kGirth8Original ||
       pattern == ExcisionPattern::kGirth8Full)
          ? 4
          : 6;
  ExcisionPlan plan;
  plan.pattern = pattern;
  plan.u = anchor_u >= 0 ? anchor_u : 0;
  require(plan.u < g.n, "anchor u out of range");
  auto du = bfs_distances(g, plan.u);
  if (anchor_v >= 0) {
    plan.v = anchor_v;
    require(plan.v < g.n && du[plan.v] == need_dist,
            "anchors not at distance " + std::to_string(need_dist));
  } else {
    for (int w = 0; w < g.n && plan.v < 0; w++)
      if (du[w] == need_dist) plan.v = w;
    require(plan.v >= 0,
            "no vertex at distance " + std::to_string(need_dist) +
                " from anchor");
  }
  auto dv = bfs_distances(g, plan.v);

  std::set<int> removed = {plan.u, plan.v};
  auto add_all = [&](const std::vector<int>& vs) {
    removed.insert(vs.begin(), vs.end());
  };
  auto layer = [&](int iu, int iv) {
    std::vector<int> out;
    for (int w = 0; w < g.n; w++)
      if (du[w] == iu && dv[w] == iv) out.push_back(w);
    return out;
  };

  add_all(at_distance(du, 1));
  add_all(at_distance(dv, 1));

  switch (pattern) {
    case ExcisionPattern::kGirth8Original:
    case ExcisionPattern::kGirth8Full: {
      auto mid = layer(2, 2);
      require((int)mid.size() == k, "|N2(u,v)| != k");
      if (pattern == ExcisionPattern::kGirth8Full) {
        add_all(mid);
      } else {
        // keep the three smallest-indexed middle vertices
        add_all({mid.begin() + std::min<size_t>(3, mid.size()), mid.end()});
      }
      break;
    }
    case ExcisionPattern::kGirth12K4:
    case ExcisionPattern::kGirth12K6: {
      auto mid = layer(3, 3), near_u = layer(2, 4), near_v = layer(4, 2);
      require((int)mid.size() == k, "|N3(u,v)| != k");
      require((int)near_u.size() == k, "|N2(u) ^ N4(v)| != k");
      require((int)near_v.size() == k, "|N4(u) ^ N2(v)| != k");
      if (pattern == ExcisionPattern::kGirth12K4) {
        add_all(mid);
        removed.insert(near_u.front());  // smallest-indexed extra vertex
      } else {
        add_all(near_u);
        add_all(near_v);
        add_all({mid.begin() + std::min<size_t>(3, mid.size()), mid.end()});
      }
      break;
    }
  }
  plan.removed.assign(removed.begin(), removed.end());

  int expect = 0;
  switch (pattern) {
    case ExcisionPattern::kGirth8Original: expect = 3 * k - 1; break;
    case ExcisionPattern::kGirth8Full: expect = 3 * k + 2; break;
    case ExcisionPattern::kGirth12K4: expect = 3 * k + 3; break;
    case ExcisionPattern::kGirth12K6: expect = 5 * k - 1; break;
  }
  require((int)plan.removed.size() == expect,
          "removed-set size " + std::to_string(plan.removed.size()) +
              " != " + std::to_string(expect) +
              " (overlapping layers; is the input a cage?)");
  return plan;
}

SimpleGraph excise(const SimpleGraph& g, const ExcisionPlan& plan) {
  std::vector<int> newid(g.n, -1);
  int m = 0;
  size_t pos = 0;
  for (int v = 0; v < g.n; v++) {
    if (pos < plan.removed.size() && plan.removed[pos] == v) {
      pos++;
      continue;
    }
    newid[v] = m++;
  }
  SimpleGraph h(m);
  for (int v = 0; v < g.n; v++) {
    if (newid[v] < 0) continue;
    for (int w : g.adj[v])
      if (w > v && newid[w] >= 0) h.add_edge(newid[v], newid[w]);
  }
  return h;
}

namespace {

struct Completer {
  SimpleGraph g;
  int k, gmin, limit;
  double deadline;
  std::vector<SimpleGraph> out;
  bool stop = false;

  static double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
  }

  // true if v is within distance gmin-2 of u (new edge would close a short
  // cycle)
  bool too_close(int u, int v) {
    std::vector<int> dist(g.n, -1), q = {u};
    dist[u] = 0;
    for (size_t h = 0; h < q.size(); h++) {
      int x = q[h];
      if (dist[x] >= gmin - 2) break;
      for (int y : g.adj[x])
        if (dist[y] < 0) {
          if (y == v) return true;
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    return false;
  }

  // prev_u/prev_w: last edge added, to keep partner choices for a fixed
  // deficient vertex ascending (each edge set enumerated once)
  void rec(int prev_u, int prev_w) {
    if (stop) return;
    if (now_s() > deadline) {
      stop = true;
      return;
    }
    int u = -1;
    for (int v = 0; v < g.n && u < 0; v++)
      if ((int)g.adj[v].size() < k) u = v;
    if (u < 0) {
      out.push_back(g);
      if ((int)out.size() >= limit) stop = true;
      return;
    }
    int w0 = (u == prev_u) ? prev_w + 1 : u + 1;
    for (int w = w0; w < g.n && !stop; w++) {
      if ((int)g.adj[w].size() >= k || g.has_edge(u, w)) continue;
      if (too_close(u, w)) continue;
      g.add_edge(u, w);
      rec(u, w);
      g.remove_edge(u, w);
    }
  }
};

}  // namespace

std::vector<SimpleGraph> complete_to_regular(const SimpleGraph& g, int k,
                                             int girth_min, int limit,
                                             double budget_s) {
  if (g.max_degree() > k)
    throw std::runtime_error("complete_to_regular: degree above k");
  Completer c{g, k, girth_min, limit, Completer::now_s() + budget_s, {}};
  c.rec(-1, -1);
  return c.out;
}

}  // namespace gf
