#include "gf/basegen.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gf/graph.hpp"

namespace gf {

std::string pregraph_canonical_form(const Pregraph& g) {
  // incidence encoding: color 0 = vertex, 1 = full edge, 2 = semi, 3 = loop
  int extra = (int)g.edges.size();
  SimpleGraph enc(g.n + extra);
  std::vector<int> colors(g.n + extra, 0);
  for (int e = 0; e < extra; e++) {
    const PgEdge& ed = g.edges[e];
    int w = g.n + e;
    if (ed.semi) {
      colors[w] = 2;
      enc.add_edge(ed.u, w);
    } else if (ed.u == ed.v) {
      colors[w] = 3;
      enc.add_edge(ed.u, w);
    } else {
      colors[w] = 1;
      enc.add_edge(ed.u, w);
      enc.add_edge(ed.v, w);
    }
  }
  return canonical_form(enc, &colors);
}

std::vector<Pregraph> generate_multigraphs(const DegreeDistribution& dist) {
  int k = (int)dist.count.size() - 1;
  std::vector<int> deg;  // descending target degrees
  for (int d = k; d >= 0; d--)
    for (int c = 0; c < dist.count[d]; c++) deg.push_back(d);
  int n = (int)deg.size();
  std::vector<Pregraph> out;
  std::set<std::string> seen;
  if (n == 0) return out;

  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> rem = deg;

  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == n - 1) {
      if (rem[n - 1] != 0) return;
      Pregraph g;
      g.n = n;
      for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
          for (int c = 0; c < mult[u][v]; c++) g.edges.push_back({u, v, false});
      g.rebuild_darts();
      if (n > 1 && !is_connected(g)) return;
      std::string form = pregraph_canonical_form(g);
      if (seen.insert(form).second) out.push_back(std::move(g));
      return;
    }
    if (j == n) {
      if (rem[i] != 0) return;
      rec(i + 1, i + 2);
      return;
    }
    // vertices after j can still absorb this much of rem[i]
    int later = 0;
    for (int w = j + 1; w < n; w++) later += rem[w];
    for (int m = 0; m <= std::min(rem[i], rem[j]); m++) {
      if (rem[i] - m > later) continue;
      mult[i][j] = mult[j][i] = m;
      rem[i] -= m;
      rem[j] -= m;
      rec(i, j + 1);
      rem[i] += m;
      rem[j] += m;
    }
    mult[i][j] = mult[j][i] = 0;
  };
  if (n == 1) {
    if (deg[0] == 0) {
      Pregraph g;
      g.n = 1;
      g.rebuild_darts();
      out.push_back(std::move(g));
    }
    return out;
  }
  rec(0, 1);
  return out;
}

std::vector<Pregraph> complete_with_loops_semiedges(const Pregraph& g, int k,
                                                    bool allow_loops,
                                                    bool allow_semi) {
  for (int v = 0; v < g.n; v++)
    if (g.degree(v) > k)
      throw std::invalid_argument("vertex degree exceeds k");
  int total_def = 0;
  for (int v = 0; v < g.n; v++) total_def += k - g.degree(v);
  if (!allow_semi && total_def % 2 != 0)
    throw std::invalid_argument("odd total deficiency without semi-edges");

  // per-vertex options: (loops, semis) with 2*loops + semis = deficiency
  std::vector<std::vector<std::pair<int, int>>> options(g.n);
  for (int v = 0; v < g.n; v++) {
    int def = k - g.degree(v);
    for (int loops = def / 2; loops >= 0; loops--) {
      int semis = def - 2 * loops;
      if (loops > 0 && !allow_loops) continue;
      if (semis > 0 && !allow_semi) continue;
      options[v].push_back({loops, semis});
    }
  }
  std::vector<Pregraph> out;
  std::vector<int> pick(g.n, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n) {
      Pregraph h = g;
      for (int u = 0; u < g.n; u++) {
        auto [loops, semis] = options[u][pick[u]];
        for (int c = 0; c < loops; c++) h.edges.push_back({u, u, false});
        for (int c = 0; c < semis; c++) h.edges.push_back({u, -1, true});
      }
      h.rebuild_darts();
      out.push_back(std::move(h));
      return;
    }
    for (pick[v] = 0; pick[v] < (int)options[v].size(); pick[v]++) rec(v + 1);
  };
  for (int v = 0; v < g.n; v++)
    if (options[v].empty()) return out;
  rec(0);
  return out;
}

std::vector<Pregraph> generate_base_graphs(int k, int n, bool allow_loops,
                                           bool allow_semi, int cap) {
  if (n > cap) throw std::invalid_argument("order exceeds generation cap");
  if (k < 1 || n < 1) throw std::invalid_argument("need k >= 1, n >= 1");

  std::vector<std::pair<std::string, Pregraph>> found;
  std::set<std::string> seen;

  // all degree distributions (count of vertices per degree 0..k)
  DegreeDistribution dist;
  dist.count.assign(k + 1, 0);
  std::function<void(int, int)> walk = [&](int d, int left) {
    if (d == k) {
      dist.count[k] = left;
      for (const Pregraph& mg : generate_multigraphs(dist))
        for (Pregraph& h : complete_with_loops_semiedges(mg, k, allow_loops,
                                                         allow_semi)) {
          if (!is_k_regular(h, k) || !is_connected(h)) continue;
          std::string form = pregraph_canonical_form(h);
          if (seen.insert(form).second)
            found.push_back({std::move(form), std::move(h)});
        }
      return;
    }
    // degree-0 vertices only survive connectivity when n == 1
    int hi = (d == 0 && n > 1) ? 0 : left;
    for (int c = 0; c <= hi; c++) {
      dist.count[d] = c;
      walk(d + 1, left - c);
    }
    dist.count[d] = 0;
  };
  walk(0, n);

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) {
              if (a.second.edges.size() != b.second.edges.size())
                return a.second.edges.size() < b.second.edges.size();
              return a.first < b.first;
            });
  std::vector<Pregraph> out;
  out.reserve(found.size());
  for (auto& [form, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace gf
