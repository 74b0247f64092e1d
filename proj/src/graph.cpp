#include "gf/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace gf {

bool SimpleGraph::has_edge(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

bool SimpleGraph::add_edge(int u, int v) {
  if (u == v || has_edge(u, v)) return false;
  adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
  adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
  return true;
}

void SimpleGraph::remove_edge(int u, int v) {
  auto it = std::lower_bound(adj[u].begin(), adj[u].end(), v);
  if (it != adj[u].end() && *it == v) adj[u].erase(it);
  it = std::lower_bound(adj[v].begin(), adj[v].end(), u);
  if (it != adj[v].end() && *it == u) adj[v].erase(it);
}

long long SimpleGraph::edge_count() const {
  long long s = 0;
  for (auto& a : adj) s += (long long)a.size();
  return s / 2;
}

int SimpleGraph::max_degree() const {
  size_t m = 0;
  for (auto& a : adj) m = std::max(m, a.size());
  return (int)m;
}

int girth(const SimpleGraph& g) {
  int best = kInfGirth;
  std::vector<int> dist(g.n), par(g.n);
  for (int root = 0; root < g.n; root++) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0; par[root] = -1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front(); q.pop();
      if (best != kInfGirth && 2 * dist[u] + 1 >= best) break;
      for (int w : g.adj[u]) {
        if (w == par[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1; par[w] = u; q.push(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best;
}

bool is_connected(const SimpleGraph& g) {
  if (g.n == 0) return true;
  std::vector<char> vis(g.n, 0);
  std::queue<int> q;
  q.push(0); vis[0] = 1;
  int seen = 1;
  while (!q.empty()) {
    int u = q.front(); q.pop();
    for (int w : g.adj[u])
      if (!vis[w]) { vis[w] = 1; seen++; q.push(w); }
  }
  return seen == g.n;
}

bool is_bipartite(const SimpleGraph& g) {
  std::vector<int> side(g.n, -1);
  for (int s = 0; s < g.n; s++) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front(); q.pop();
      for (int w : g.adj[u]) {
        if (side[w] < 0) { side[w] = side[u] ^ 1; q.push(w); }
        else if (side[w] == side[u]) return false;
      }
    }
  }
  return true;
}

bool is_k_regular(const SimpleGraph& g, int k) {
  for (auto& a : g.adj)
    if ((int)a.size() != k) return false;
  return true;
}

std::vector<int> bfs_distances(const SimpleGraph& g, int src) {
  std::vector<int> dist(g.n, -1);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front(); q.pop();
    for (int w : g.adj[u])
      if (dist[w] < 0) { dist[w] = dist[u] + 1; q.push(w); }
  }
  return dist;
}

namespace {

// iterated color refinement; returns number of cells
int refine(const SimpleGraph& g, std::vector<int>& color) {
  int n = g.n;
  std::vector<std::pair<std::vector<int>, int>> sig(n);
  std::vector<int> order(n);
  while (true) {
    for (int v = 0; v < n; v++) {
      auto& s = sig[v].first;
      s.clear();
      s.push_back(color[v]);
      for (int w : g.adj[v]) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
      sig[v].second = v;
    }
    for (int v = 0; v < n; v++) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[a].first < sig[b].first;
    });
    std::vector<int> nc(n);
    int cells = 0;
    for (int i = 0; i < n; i++) {
      if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) cells++;
      nc[order[i]] = cells;
    }
    cells++;
    bool stable = true;
    for (int v = 0; v < n; v++)
      if (nc[v] != color[v]) { stable = false; break; }
    color = nc;
    if (stable) return cells;
  }
}

std::string certificate(const SimpleGraph& g, const std::vector<int>& color,
                        const std::vector<int>& init) {
  int n = g.n;
  std::vector<int> pos(n), order(n);
  for (int v = 0; v < n; v++) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return color[a] < color[b]; });
  for (int i = 0; i < n; i++) pos[order[i]] = i;
  std::string cert;
  cert.reserve(8 + n + size_t(n) * n / 8);
  cert += std::to_string(n);
  cert += ':';
  std::string bits((size_t(n) * n + 7) / 8, '\0');
  for (int v = 0; v < n; v++)
    for (int w : g.adj[v]) {
      size_t idx = size_t(pos[v]) * n + pos[w];
      bits[idx / 8] |= char(1 << (idx % 8));
    }
  cert += bits;
  // record the original color classes in canonical vertex order
  for (int i = 0; i < n; i++) {
    cert += ',';
    cert += std::to_string(init[order[i]]);
  }
  return cert;
}

struct CanonCtx {
  const SimpleGraph& g;
  const std::vector<int>& init;
  std::string best;
  bool have_best = false;

  void rec(std::vector<int> color) {
    int cells = refine(g, color);
    if (cells == g.n) {
      std::string cert = certificate(g, color, init);
      if (!have_best || cert < best) { best = std::move(cert); have_best = true; }
      return;
    }
    // smallest non-singleton cell, lowest color on tie
    std::vector<int> count(cells, 0);
    for (int v = 0; v < g.n; v++) count[color[v]]++;
    int target = -1;
    for (int c = 0; c < cells; c++)
      if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
    // children: individualize each member; keep those with the minimal
    // refined-partition trace (isomorphism-invariant pruning)
    std::vector<std::pair<std::vector<int>, std::vector<int>>> children;
    std::vector<int> best_trace;
    for (int v = 0; v < g.n; v++) {
      if (color[v] != target) continue;
      std::vector<int> child = color;
      child[v] = cells;  // split off v
      int ccells = refine(g, child);
      std::vector<int> trace(ccells, 0);
      for (int u = 0; u < g.n; u++) trace[child[u]]++;
      if (best_trace.empty() || trace < best_trace) {
        best_trace = trace;
        children.clear();
      }
      if (trace == best_trace) children.push_back({std::move(child), {}});
    }
    for (auto& ch : children) rec(std::move(ch.first));
  }
};

}  // namespace

std::string canonical_form(const SimpleGraph& g,
                           const std::vector<int>* colors) {
  std::vector<int> color(g.n, 0);
  if (colors) {
    // rank the given colors canonically
    std::vector<int> vals(*colors);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int v = 0; v < g.n; v++)
      color[v] = int(std::lower_bound(vals.begin(), vals.end(),
                                      (*colors)[v]) - vals.begin());
  }
  // canonicalize connected components independently; isomorphic graphs have
  // equal multisets of component certificates
  std::vector<int> comp(g.n, -1);
  int ncomp = 0;
  for (int s = 0; s < g.n; s++) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : g.adj[u])
        if (comp[w] < 0) { comp[w] = ncomp; stack.push_back(w); }
    }
    ncomp++;
  }
  auto canon_one = [](const SimpleGraph& h, const std::vector<int>& col) {
    CanonCtx ctx{h, col};
    ctx.rec(col);
    return ctx.have_best ? ctx.best : certificate(h, col, col);
  };
  if (ncomp == 1) return canon_one(g, color);
  std::vector<std::string> parts(ncomp);
  for (int c = 0; c < ncomp; c++) {
    std::vector<int> map(g.n, -1);
    int m = 0;
    for (int v = 0; v < g.n; v++)
      if (comp[v] == c) map[v] = m++;
    SimpleGraph sub(m);
    std::vector<int> subcol(m);
    for (int v = 0; v < g.n; v++) {
      if (comp[v] != c) continue;
      subcol[map[v]] = color[v];
      for (int w : g.adj[v])
        if (v < w) sub.add_edge(map[v], map[w]);
    }
    parts[c] = canon_one(sub, subcol);
  }
  std::sort(parts.begin(), parts.end());
  std::string out = std::to_string(g.n) + "#";
  for (const std::string& p : parts)
    out += std::to_string(p.size()) + ":" + p;
  return out;
}

std::string to_graph6(const SimpleGraph& g) {
  std::string s;
  long long n = g.n;
  if (n <= 62) {
    s += char(n + 63);
  } else if (n <= 258047) {
    s += '~';
    s += char(((n >> 12) & 63) + 63);
    s += char(((n >> 6) & 63) + 63);
    s += char((n & 63) + 63);
  } else {
    throw std::runtime_error("graph6: n too large");
  }
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < g.n; j++)
    for (int i = 0; i < j; i++) {
      if (g.has_edge(i, j)) cur |= char(1 << bit);
      if (--bit < 0) { s += char(cur + 63); cur = 0; bit = 5; }
    }
  if (bit != 5) s += char(cur + 63);
  return s;
}

SimpleGraph from_graph6(const std::string& line) {
  size_t p = 0;
  auto next = [&]() -> int {
    if (p >= line.size()) throw std::runtime_error("graph6: truncated");
    int c = (unsigned char)line[p++] - 63;
    if (c < 0 || c > 63) throw std::runtime_error("graph6: bad byte");
    return c;
  };
  long long n;
  if (line.empty()) throw std::runtime_error("graph6: empty");
  if (line[0] == '~') {
    p = 1;
    if (line.size() > 1 && line[1] == '~')
      throw std::runtime_error("graph6: n too large");
    long long a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  SimpleGraph g((int)n);
  int bit = -1, cur = 0;
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++) {
      if (bit < 0) { cur = next(); bit = 5; }
      if (cur & (1 << bit)) g.add_edge(i, j);
      bit--;
    }
  return g;
}

}  // namespace gf
