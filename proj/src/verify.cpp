#include "gf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gf {

long long moore_bound(int k, int g) {
  if (k < 2 || g < 3) throw std::invalid_argument("need k >= 2, g >= 3");
  long long m;
  if (g % 2 == 1) {  // g = 2r+1: 1 + k * sum_{i<r} (k-1)^i
    int r = (g - 1) / 2;
    long long sum = 0, pw = 1;
    for (int i = 0; i < r; i++) { sum += pw; pw *= k - 1; }
    m = 1 + (long long)k * sum;
  } else {  // g = 2r: 2 * sum_{i<r} (k-1)^i
    int r = g / 2;
    long long sum = 0, pw = 1;
    for (int i = 0; i < r; i++) { sum += pw; pw *= k - 1; }
    m = 2 * sum;
  }
  return m;
}

namespace {

// enumerate simple cycles of length exactly `len` whose minimal vertex is
// the start; each cycle visits `fn` once (orientation fixed by second < last)
void for_each_cycle(const SimpleGraph& g, int len,
                    const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> path;
  std::vector<char> used(g.n, 0);
  bool stop = false;
  std::function<void(int, int)> dfs = [&](int root, int v) {
    if (stop) return;
    if ((int)path.size() == len) {
      if (g.has_edge(v, root) && path[1] < path.back())
        stop = !fn(path);
      return;
    }
    for (int w : g.adj[v]) {
      if (w <= root || used[w]) continue;
      // can we still close? remaining steps must reach root
      used[w] = 1;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      used[w] = 0;
      if (stop) return;
    }
  };
  for (int root = 0; root < g.n && !stop; root++) {
    path = {root};
    used.assign(g.n, 0);
    used[root] = 1;
    dfs(root, root);
    used[root] = 0;
  }
}

}  // namespace

GirthRegularity girth_cycle_regularity(const SimpleGraph& g) {
  GirthRegularity r;
  r.girth = girth(g);
  if (r.girth == kInfGirth)
    throw std::invalid_argument("acyclic graph has no girth cycles");
  std::map<std::pair<int, int>, int> edge_index;
  for (int u = 0; u < g.n; u++)
    for (int v : g.adj[u])
      if (u < v) {
        int id = (int)edge_index.size();
        edge_index[{u, v}] = id;
      }
  r.per_vertex.assign(g.n, 0);
  r.per_edge.assign(edge_index.size(), 0);
  for_each_cycle(g, r.girth, [&](const std::vector<int>& cyc) {
    r.cycle_count++;
    for (size_t i = 0; i < cyc.size(); i++) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      r.per_vertex[u]++;
      r.per_edge[edge_index.at({std::min(u, v), std::max(u, v)})]++;
    }
    return true;
  });
  auto common = [](const std::vector<long long>& xs) {
    std::optional<long long> c;
    for (long long x : xs) {
      if (!c) c = x;
      if (*c != x) return std::optional<long long>();
    }
    return c;
  };
  r.lambda_v = common(r.per_vertex);
  r.lambda_e = common(r.per_edge);
  return r;
}

bool has_cycle_of_length(const SimpleGraph& g, int len) {
  if (len < 3) return false;
  bool found = false;
  for_each_cycle(g, len, [&](const std::vector<int>&) {
    found = true;
    return false;  // stop
  });
  return found;
}

GraphReport classify(const SimpleGraph& g, const ClassifyTargets& t) {
  GraphReport rep;
  rep.n = g.n;
  if (g.n > 0) {
    int lo = g.n ? (int)g.adj[0].size() : 0, hi = lo;
    for (int v = 0; v < g.n; v++) {
      lo = std::min(lo, (int)g.adj[v].size());
      hi = std::max(hi, (int)g.adj[v].size());
    }
    rep.min_degree = lo;
    rep.max_degree = hi;
  }
  rep.girth = girth(g);
  rep.connected = is_connected(g);
  rep.bipartite = is_bipartite(g);
  if (t.lambdas && rep.girth != kInfGirth) {
    GirthRegularity r = girth_cycle_regularity(g);
    rep.lambda_v = r.lambda_v;
    rep.lambda_e = r.lambda_e;
    rep.lambda_checked = true;
  }
  if (t.g_plus_1 && rep.girth != kInfGirth) {
    rep.has_g_plus_1_cycle = has_cycle_of_length(g, rep.girth + 1);
    rep.g1_checked = true;
  }
  if (t.canonical) rep.canonical = canonical_form(g);
  if (rep.min_degree == rep.max_degree && rep.min_degree >= 2 &&
      rep.girth != kInfGirth && rep.girth >= 3)
    rep.moore_deficiency = g.n - moore_bound(rep.min_degree, rep.girth);
  return rep;
}

}  // namespace gf
