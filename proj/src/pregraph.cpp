#include "gf/pregraph.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gf {

void Pregraph::rebuild_darts() {
  darts.assign(2 * edges.size(), Dart{});
  out.assign(n, {});
  for (size_t e = 0; e < edges.size(); e++) {
    const PgEdge& ed = edges[e];
    int d0 = int(2 * e), d1 = d0 + 1;
    if (ed.semi) {
      darts[d0] = {ed.u, ed.u, d0, (int)e, true};
      darts[d1] = {-1, -1, -1, -1, false};  // unused slot
      out[ed.u].push_back(d0);
    } else {
      darts[d0] = {ed.u, ed.v, d1, (int)e, false};
      darts[d1] = {ed.v, ed.u, d0, (int)e, false};
      out[ed.u].push_back(d0);
      out[ed.v].push_back(d1);
    }
  }
}

Pregraph parse_pregraph(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  Pregraph g;
  if (!(in >> kw) || kw != "pregraph")
    throw std::runtime_error("pregraph file must start with 'pregraph'");
  if (!(in >> g.n) || g.n <= 0) throw std::runtime_error("bad vertex count");
  int u;
  std::string second;
  while (in >> u >> second) {
    if (u < 0 || u >= g.n)
      throw std::runtime_error("vertex index out of range: " +
                               std::to_string(u));
    if (second == ";") {
      g.edges.push_back({u, -1, true});
    } else {
      int v = std::stoi(second);
      if (v < 0 || v >= g.n)
        throw std::runtime_error("vertex index out of range: " + second);
      g.edges.push_back({u, v, false});
    }
  }
  g.rebuild_darts();
  return g;
}

std::string serialize_pregraph(const Pregraph& g) {
  std::ostringstream out;
  out << "pregraph " << g.n << "\n";
  for (const PgEdge& e : g.edges) {
    if (e.semi) out << e.u << " ;\n";
    else out << e.u << " " << e.v << "\n";
  }
  return out.str();
}

std::vector<int> degree_sequence(const Pregraph& g) {
  std::vector<int> d(g.n);
  for (int v = 0; v < g.n; v++) d[v] = g.degree(v);
  return d;
}

bool is_k_regular(const Pregraph& g, int k) {
  for (int v = 0; v < g.n; v++)
    if (g.degree(v) != k) return false;
  return true;
}

bool is_connected(const Pregraph& g) {
  if (g.n == 0) return true;
  std::vector<char> vis(g.n, 0);
  std::queue<int> q;
  q.push(0); vis[0] = 1;
  int seen = 1;
  while (!q.empty()) {
    int v = q.front(); q.pop();
    for (int d : g.out[v]) {
      int w = g.darts[d].head;
      if (!vis[w]) { vis[w] = 1; seen++; q.push(w); }
    }
  }
  return seen == g.n;
}

SpanningTree spanning_tree(const Pregraph& g) {
  if (!is_connected(g)) throw std::runtime_error("spanning_tree: disconnected");
  SpanningTree t;
  t.edge_in_tree.assign(g.edges.size(), 0);
  t.dart_in_tree.assign(g.darts.size(), 0);
  std::vector<char> vis(g.n, 0);
  std::vector<int> q{0};
  vis[0] = 1;
  for (size_t h = 0; h < q.size(); h++) {
    int v = q[h];
    for (int d : g.out[v]) {  // out lists are in edge-index order
      const Dart& dd = g.darts[d];
      if (dd.semi || dd.head == v) continue;
      if (!vis[dd.head]) {
        vis[dd.head] = 1;
        t.edges.push_back(dd.edge);
        t.edge_in_tree[dd.edge] = 1;
        t.dart_in_tree[2 * dd.edge] = t.dart_in_tree[2 * dd.edge + 1] = 1;
        q.push_back(dd.head);
      }
    }
  }
  // all-pairs tree distances (n is small)
  t.path_len.assign(g.n, std::vector<int>(g.n, -1));
  for (int s = 0; s < g.n; s++) {
    t.path_len[s][s] = 0;
    std::vector<int> bq{s};
    for (size_t h = 0; h < bq.size(); h++) {
      int v = bq[h];
      for (int d : g.out[v]) {
        const Dart& dd = g.darts[d];
        if (!t.dart_in_tree.empty() && dd.edge >= 0 &&
            !dd.semi && t.edge_in_tree[dd.edge] && t.path_len[s][dd.head] < 0) {
          t.path_len[s][dd.head] = t.path_len[s][v] + 1;
          bq.push_back(dd.head);
        }
      }
    }
  }
  return t;
}

std::vector<int> useful_darts(const Pregraph& g, const SpanningTree& tree) {
  std::vector<int> out;
  for (size_t e = 0; e < g.edges.size(); e++) {
    if (tree.edge_in_tree[e]) continue;
    out.push_back(int(2 * e));  // loops/semi-edges are never in the tree
  }
  return out;
}

EdgeAutomorphismList edge_automorphisms(const Pregraph& g,
                                        const SpanningTree& tree, int limit,
                                        double budget_s) {
  using clock = std::chrono::steady_clock;
  auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                     std::chrono::duration<double>(budget_s));
  EdgeAutomorphismList result;

  // parallel classes: full non-loop by vertex pair, loops and semis by vertex
  std::map<std::pair<int, int>, std::vector<int>> full_cls;
  std::vector<std::vector<int>> loop_cls(g.n), semi_cls(g.n);
  for (size_t e = 0; e < g.edges.size(); e++) {
    const PgEdge& ed = g.edges[e];
    if (ed.semi) semi_cls[ed.u].push_back((int)e);
    else if (ed.u == ed.v) loop_cls[ed.u].push_back((int)e);
    else full_cls[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}].push_back((int)e);
  }

  std::vector<int> vperm(g.n, -1);
  std::vector<char> used(g.n, 0);
  std::vector<int> deg = degree_sequence(g);

  auto class_of = [&](int u, int v) -> const std::vector<int>* {
    auto it = full_cls.find({std::min(u, v), std::max(u, v)});
    return it == full_cls.end() ? nullptr : &it->second;
  };

  // For a complete vertex perm, enumerate edge bijections class by class.
  auto emit_edge_maps = [&](auto&& self_done) {
    std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> cls;
    for (auto& [uv, edges_src] : full_cls) {
      auto* tgt = class_of(vperm[uv.first], vperm[uv.second]);
      if (!tgt || tgt->size() != edges_src.size()) return;
      cls.push_back({&edges_src, tgt});
    }
    for (int v = 0; v < g.n; v++) {
      if (loop_cls[v].size() != loop_cls[vperm[v]].size()) return;
      if (semi_cls[v].size() != semi_cls[vperm[v]].size()) return;
      if (!loop_cls[v].empty()) cls.push_back({&loop_cls[v], &loop_cls[vperm[v]]});
      if (!semi_cls[v].empty()) cls.push_back({&semi_cls[v], &semi_cls[vperm[v]]});
    }
    std::vector<int> eperm(g.edges.size(), -1);
    std::function<void(size_t)> assign_cls = [&](size_t ci) {
      if ((int)result.autos.size() >= limit || clock::now() > deadline) {
        result.complete = false;
        return;
      }
      if (ci == cls.size()) {
        // tree condition: non-tree edges map to non-tree edges
        for (size_t e = 0; e < g.edges.size(); e++)
          if (!tree.edge_in_tree[e] && tree.edge_in_tree[eperm[e]]) return;
        EdgeAutomorphism a;
        a.vertex_perm = vperm;
        a.edge_perm = eperm;
        a.dart_perm.assign(g.darts.size(), -1);
        for (size_t e = 0; e < g.edges.size(); e++) {
          const PgEdge& src = g.edges[e];
          const PgEdge& dst = g.edges[eperm[e]];
          int d0 = int(2 * e), t0 = 2 * eperm[e];
          if (src.semi) {
            a.dart_perm[d0] = t0;
          } else if (src.u == src.v) {
            a.dart_perm[d0] = t0;
            a.dart_perm[d0 + 1] = t0 + 1;
          } else {
            bool flip = (vperm[src.u] != dst.u);
            a.dart_perm[d0] = flip ? t0 + 1 : t0;
            a.dart_perm[d0 + 1] = flip ? t0 : t0 + 1;
          }
        }
        result.autos.push_back(std::move(a));
        return;
      }
      const auto& src = *cls[ci].first;
      std::vector<int> tgt = *cls[ci].second;
      std::sort(tgt.begin(), tgt.end());
      do {
        for (size_t i = 0; i < src.size(); i++) eperm[src[i]] = tgt[i];
        assign_cls(ci + 1);
        if (!result.complete) return;
      } while (std::next_permutation(tgt.begin(), tgt.end()));
    };
    assign_cls(0);
    (void)self_done;
  };

  std::function<void(int)> place = [&](int v) {
    if ((int)result.autos.size() >= limit || clock::now() > deadline) {
      result.complete = false;
      return;
    }
    if (v == g.n) {
      emit_edge_maps(0);
      return;
    }
    for (int w = 0; w < g.n; w++) {
      if (used[w] || deg[w] != deg[v]) continue;
      // adjacency multiset consistency against already-placed vertices
      bool ok = true;
      for (int u = 0; u < v && ok; u++) {
        auto* c1 = class_of(u, v);
        auto* c2 = class_of(vperm[u], w);
        size_t s1 = c1 ? c1->size() : 0, s2 = c2 ? c2->size() : 0;
        if (s1 != s2) ok = false;
      }
      if (!ok) continue;
      used[w] = 1; vperm[v] = w;
      place(v + 1);
      used[w] = 0; vperm[v] = -1;
      if (!result.complete) return;
    }
  };
  place(0);
  return result;
}

}  // namespace gf
