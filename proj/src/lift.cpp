#include "gf/lift.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <tuple>

namespace gf {

std::optional<Structural> structural_checks(const Pregraph& g,
                                            const FiniteGroup& gr, int g_min) {
  Structural s{spanning_tree(g), {}, {}, VoltageAssignment(g.darts.size())};
  s.useful = useful_darts(g, s.tree);
  for (int e : s.tree.edges) {
    s.alpha.volt[2 * e] = 0;
    s.alpha.volt[2 * e + 1] = 0;
  }
  std::vector<int> invs = involutions(gr);
  std::vector<int> semi_count(g.n, 0);
  for (const PgEdge& e : g.edges)
    if (e.semi) semi_count[e.u]++;
  for (int v = 0; v < g.n; v++)
    if (semi_count[v] > (int)invs.size()) return std::nullopt;

  for (int d : s.useful) {
    const Dart& dd = g.darts[d];
    std::vector<int> N;
    if (dd.semi) {
      N = invs;
    } else if (dd.tail == dd.head) {  // loop: walk of length s has net a^s
      for (int a = 1; a < gr.n; a++)
        if (gr.ord(a) >= g_min) N.push_back(a);
    } else {
      int q = s.tree.path_len[dd.tail][dd.head];
      for (int a = 0; a < gr.n; a++) {
        if (a == 0 && q + 1 < g_min) continue;
        if ((long long)(q + 1) * gr.ord(a) < g_min) continue;
        N.push_back(a);
      }
    }
    if (N.empty()) return std::nullopt;
    s.admissible.push_back(std::move(N));
  }
  return s;
}

namespace {

bool exists_cnr_walk(const Pregraph& g, const FiniteGroup& gr, int a_cur,
                     int d_prev, int v_cur, int v_target, int len, int len_max,
                     const VoltageAssignment& alpha) {
  if (len >= len_max) return false;
  int d_prev_inv = g.darts[d_prev].inv;
  for (int d : g.out[v_cur]) {
    if (!alpha.assigned(d) || d == d_prev_inv) continue;
    int a_new = gr.mul(a_cur, alpha.volt[d]);
    int w = g.darts[d].head;
    if (w == v_target && a_new == 0) return true;
    if (exists_cnr_walk(g, gr, a_new, d, w, v_target, len + 1, len_max, alpha))
      return true;
  }
  return false;
}

}  // namespace

bool cannot_achieve_girth(const Pregraph& g, const FiniteGroup& gr, int d,
                          int g_min, const VoltageAssignment& alpha) {
  int dinv = g.darts[d].inv;
  return exists_cnr_walk(g, gr, alpha.volt[dinv], dinv, g.darts[d].tail,
                         g.darts[d].head, 1, g_min - 1, alpha);
}

bool not_canonical(const Pregraph& g, const FiniteGroup& gr,
                   const VoltageAssignment& alpha,
                   const std::vector<int>& useful,
                   const std::vector<EdgeAutomorphism>& edge_autos,
                   const std::vector<GroupAutomorphism>& group_autos) {
  const int INF = INT_MAX;
  size_t m = useful.size();
  std::vector<int> cur(m), perm(m);
  for (size_t i = 0; i < m; i++)
    cur[i] = alpha.assigned(useful[i]) ? alpha.volt[useful[i]] : INF;
  for (const EdgeAutomorphism& ea : edge_autos) {
    for (size_t i = 0; i < m; i++) {
      int img = ea.dart_perm[useful[i]];
      perm[i] = alpha.assigned(img) ? alpha.volt[img] : INF;
    }
    for (const GroupAutomorphism& ga : group_autos) {
      for (size_t i = 0; i < m; i++) {
        // the group automorphism acts on the permuted list so that every
        // member of the equivalence class is compared against the current
        // one; the current assignment survives iff it is the lex-minimum
        int lhs = perm[i] == INF ? INF : ga.perm[perm[i]];
        int rhs = cur[i];
        if (lhs < rhs) return true;
        if (lhs > rhs) break;
      }
    }
  }
  return false;
}

std::optional<SimpleGraph> lift(const Pregraph& g, const FiniteGroup& gr,
                                const VoltageAssignment& alpha) {
  int N = gr.n;
  SimpleGraph out(g.n * N);
  for (size_t e = 0; e < g.edges.size(); e++) {
    const PgEdge& ed = g.edges[e];
    int d = int(2 * e);
    int a = alpha.volt[d];
    if (a == kUnassigned) return std::nullopt;
    if (ed.semi) {
      if (a == 0 || gr.mul(a, a) != 0) return std::nullopt;
      std::vector<char> done(N, 0);
      for (int s = 0; s < N; s++) {
        if (done[s]) continue;
        int t = gr.mul(s, a);
        done[s] = done[t] = 1;
        if (!out.add_edge(ed.u * N + s, ed.u * N + t)) return std::nullopt;
      }
    } else {
      for (int s = 0; s < N; s++) {
        if (!out.add_edge(ed.u * N + s, ed.v * N + gr.mul(s, a)))
          return std::nullopt;
      }
    }
  }
  return out;
}

int lift_girth_via_base(const Pregraph& g, const FiniteGroup& gr,
                        const VoltageAssignment& alpha, int cap) {
  int N = gr.n;
  // degenerate cases: loops and parallel edges in the lift
  std::map<std::tuple<int, int, int>, int> edge_keys;
  for (size_t e = 0; e < g.edges.size(); e++) {
    const PgEdge& ed = g.edges[e];
    int a = alpha.volt[2 * e];
    if (a == kUnassigned) continue;  // partial: unassigned darts unusable
    std::tuple<int, int, int> key;
    if (ed.semi) {
      if (a == 0) return std::min(1, cap + 1);
      key = {ed.u, ed.u, a};
    } else if (ed.u == ed.v) {
      if (a == 0) return std::min(1, cap + 1);
      // an involution voltage doubles up the fiber edges of a loop
      if (gr.mul(a, a) == 0) return std::min(2, cap + 1);
      key = {ed.u, ed.u, std::min(a, gr.inv(a))};
    } else {
      int u = ed.u, v = ed.v;
      if (u > v) { std::swap(u, v); a = gr.inv(a); }
      key = {u, v, a};
    }
    if (edge_keys.count(key)) return std::min(2, cap + 1);
    edge_keys[key] = 1;
  }

  // arcs per base vertex: (head vertex, voltage, edge id)
  std::vector<std::vector<std::tuple<int, int, int>>> arcs(g.n);
  for (int d = 0; d < (int)g.darts.size(); d++) {
    const Dart& dd = g.darts[d];
    if (dd.edge < 0 || !alpha.assigned(d)) continue;
    arcs[dd.tail].push_back({dd.head, alpha.volt[d], dd.edge});
  }

  int best = cap + 1;
  int total = g.n * N;
  std::vector<int> dist(total);
  std::vector<std::pair<int, long long>> pedge(total);
  std::vector<int> frontier, next;
  for (int root_v = 0; root_v < g.n; root_v++) {
    std::fill(dist.begin(), dist.end(), -1);
    int root = root_v * N;
    dist[root] = 0;
    pedge[root] = {-1, -1};
    frontier = {root};
    int max_depth = best / 2;  // cycles up to 2*max_depth+1 detectable
    for (int depth = 0; depth <= max_depth && !frontier.empty(); depth++) {
      next.clear();
      for (int node : frontier) {
        int v = node / N, s = node % N;
        for (auto& [w, a, eid] : arcs[v]) {
          int node2 = w * N + gr.mul(s, a);
          std::pair<int, long long> key = {eid,
                                           std::min((long long)node,
                                                    (long long)node2)};
          if (key == pedge[node]) continue;
          if (dist[node2] < 0) {
            if (depth + 1 <= max_depth) {
              dist[node2] = depth + 1;
              pedge[node2] = key;
              next.push_back(node2);
            }
          } else {
            int cyc = depth + dist[node2] + 1;
            if (cyc < best) {
              best = cyc;
              max_depth = best / 2;
            }
          }
        }
      }
      std::swap(frontier, next);
    }
    if (best <= 3) break;
  }
  return best;
}

}  // namespace gf
