#include "gf/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gf {

namespace {

void finish(FiniteGroup& g) {
  int n = g.n;
  // identity law
  for (int a = 0; a < n; a++) {
    if (g.table[0][a] != a || g.table[a][0] != a)
      throw std::runtime_error("identity law fails at element " +
                               std::to_string(a));
  }
  // rows/columns bijective
  for (int a = 0; a < n; a++) {
    std::vector<char> seen_r(n, 0), seen_c(n, 0);
    for (int b = 0; b < n; b++) {
      int r = g.table[a][b], c = g.table[b][a];
      if (r < 0 || r >= n || c < 0 || c >= n)
        throw std::runtime_error("entry out of range at row " +
                                 std::to_string(a));
      if (seen_r[r]++) throw std::runtime_error(
          "row " + std::to_string(a) + " not bijective (repeat " +
          std::to_string(r) + ")");
      if (seen_c[c]++) throw std::runtime_error(
          "column " + std::to_string(a) + " not bijective");
    }
  }
  // associativity: full check up to order 256, sampled above
  auto assoc = [&](int a, int b, int c) {
    if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
      throw std::runtime_error("associativity fails at (" + std::to_string(a) +
                               "," + std::to_string(b) + "," +
                               std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (int a = 0; a < n; a++)
      for (int b = 0; b < n; b++)
        for (int c = 0; c < n; c++) assoc(a, b, c);
  } else {
    unsigned long long s = 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < 200000; i++) {
      s ^= s << 13; s ^= s >> 7; s ^= s << 17;
      int a = int(s % n), b = int((s >> 20) % n), c = int((s >> 40) % n);
      assoc(a, b, c);
    }
  }
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      if (g.table[a][b] == 0) {
        if (g.table[b][a] != 0)
          throw std::runtime_error("one-sided inverse at " + std::to_string(a));
        g.inverse[a] = b;
      }
  for (int a = 0; a < n; a++)
    if (g.inverse[a] < 0) {
      if (g.table[a][a] == a && a != 0)
        throw std::runtime_error("idempotent non-identity breaks inverse law");
      throw std::runtime_error("no inverse for element " + std::to_string(a));
    }
  g.elem_order.assign(n, 1);
  for (int a = 0; a < n; a++) {
    int x = a, o = 1;
    while (x != 0) { x = g.table[x][a]; o++; }
    g.elem_order[a] = o;
  }
}

}  // namespace

FiniteGroup load_group(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  FiniteGroup g;
  if (!(in >> kw) || kw != "group")
    throw std::runtime_error("group file must start with 'group'");
  if (!(in >> g.name >> g.n) || g.n <= 0)
    throw std::runtime_error("bad group header");
  g.table.assign(g.n, std::vector<int>(g.n));
  for (int a = 0; a < g.n; a++)
    for (int b = 0; b < g.n; b++)
      if (!(in >> g.table[a][b]))
        throw std::runtime_error("truncated table at row " + std::to_string(a));
  finish(g);
  return g;
}

std::string serialize_group(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << (g.name.empty() ? "g" : g.name) << " " << g.n << "\n";
  for (int a = 0; a < g.n; a++) {
    for (int b = 0; b < g.n; b++) out << (b ? " " : "") << g.table[a][b];
    out << "\n";
  }
  return out.str();
}

FiniteGroup cyclic(int n) {
  if (n <= 0) throw std::runtime_error("cyclic: n must be positive");
  FiniteGroup g;
  g.n = n;
  g.name = "C" + std::to_string(n);
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++) g.table[a][b] = (a + b) % n;
  finish(g);
  return g;
}

FiniteGroup dihedral(int n) {
  if (n <= 0) throw std::runtime_error("dihedral: n must be positive");
  FiniteGroup g;
  g.n = 2 * n;
  g.name = "D" + std::to_string(n);
  g.table.assign(g.n, std::vector<int>(g.n));
  auto m = [n](int i) { return ((i % n) + n) % n; };
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      g.table[i][j] = m(i + j);              // r r
      g.table[i][n + j] = n + m(i + j);      // r s
      g.table[n + i][j] = n + m(i - j);      // s r
      g.table[n + i][n + j] = m(i - j);      // s s
    }
  finish(g);
  return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int order_cap) {
  long long n = (long long)a.n * b.n;
  if (n > order_cap)
    throw std::runtime_error("direct_product: order above cap");
  FiniteGroup g;
  g.n = int(n);
  g.name = a.name + "x" + b.name;
  g.table.assign(g.n, std::vector<int>(g.n));
  for (int a1 = 0; a1 < a.n; a1++)
    for (int b1 = 0; b1 < b.n; b1++)
      for (int a2 = 0; a2 < a.n; a2++)
        for (int b2 = 0; b2 < b.n; b2++)
          g.table[a1 * b.n + b1][a2 * b.n + b2] =
              a.table[a1][a2] * b.n + b.table[b1][b2];
  finish(g);
  return g;
}

FiniteGroup semidirect_product_cyclic(int m, int n, long t) {
  if (m <= 0 || n <= 0) throw std::runtime_error("semidirect: bad orders");
  t = ((t % m) + m) % m;
  // t must be a unit with t^n = 1 mod m
  long tn = 1;
  for (int i = 0; i < n; i++) tn = (tn * t) % m;
  long gcd = std::gcd((long)m, t == 0 ? (long)m : t);
  if (gcd != 1 || tn != 1)
    throw std::runtime_error("semidirect: t is not an order-dividing-" +
                             std::to_string(n) + " unit mod " +
                             std::to_string(m));
  FiniteGroup g;
  g.n = m * n;
  g.name = "C" + std::to_string(m) + ":C" + std::to_string(n) + "t" +
           std::to_string(t);
  g.table.assign(g.n, std::vector<int>(g.n));
  std::vector<long> tp(n, 1);
  for (int x = 1; x < n; x++) tp[x] = (tp[x - 1] * t) % m;
  for (int a = 0; a < m; a++)
    for (int x = 0; x < n; x++)
      for (int b = 0; b < m; b++)
        for (int y = 0; y < n; y++)
          g.table[a * n + x][b * n + y] =
              int((a + tp[x] * b) % m) * n + (x + y) % n;
  finish(g);
  return g;
}

std::vector<int> involutions(const FiniteGroup& g) {
  std::vector<int> out;
  for (int a = 1; a < g.n; a++)
    if (g.elem_order[a] == 2) out.push_back(a);
  return out;
}

AutomorphismList automorphisms(const FiniteGroup& g, int limit) {
  // greedy minimal generating set by index
  std::vector<int> gens;
  std::vector<char> closed(g.n, 0);
  closed[0] = 1;
  int covered = 1;
  auto close_over = [&](std::vector<char>& cl, int& count) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (int a = 0; a < g.n; a++)
        if (cl[a])
          for (int b = 0; b < g.n; b++)
            if (cl[b] && !cl[g.table[a][b]]) {
              cl[g.table[a][b]] = 1; count++; grew = true;
            }
    }
  };
  while (covered < g.n) {
    int s = 0;
    while (closed[s]) s++;
    gens.push_back(s);
    closed[s] = 1; covered++;
    close_over(closed, covered);
  }

  // expression of every element as (parent, generator) via BFS words
  std::vector<int> par(g.n, -1), via(g.n, -1);
  {
    std::vector<int> q{0};
    std::vector<char> vis(g.n, 0); vis[0] = 1;
    for (size_t h = 0; h < q.size(); h++) {
      int a = q[h];
      for (int s : gens) {
        int b = g.table[a][s];
        if (!vis[b]) { vis[b] = 1; par[b] = a; via[b] = s; q.push_back(b); }
      }
    }
  }

  AutomorphismList result;
  std::vector<int> img(gens.size(), -1);
  std::vector<int> phi(g.n, -1);

  // build phi from generator images following the BFS word tree; then the
  // homomorphism property phi(a*s) = phi(a)*phi(s) for generators s suffices.
  auto build_and_check = [&]() -> bool {
    std::fill(phi.begin(), phi.end(), -1);
    phi[0] = 0;
    std::vector<int> order_of_def{0};
    std::vector<char> def(g.n, 0); def[0] = 1;
    for (size_t h = 0; h < order_of_def.size(); h++) {
      int a = order_of_def[h];
      for (size_t gi = 0; gi < gens.size(); gi++) {
        int b = g.table[a][gens[gi]];
        int pb = g.table[phi[a]][img[gi]];
        if (!def[b]) { def[b] = 1; phi[b] = pb; order_of_def.push_back(b); }
        else if (phi[b] != pb) return false;
      }
    }
    if ((int)order_of_def.size() != g.n) return false;  // image not all of G
    // bijectivity
    std::vector<char> hit(g.n, 0);
    for (int a = 0; a < g.n; a++) {
      if (hit[phi[a]]++) return false;
    }
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t gi) {
    if ((int)result.autos.size() >= limit) { result.complete = false; return; }
    if (gi == gens.size()) {
      if (build_and_check()) result.autos.push_back({phi});
      return;
    }
    for (int c = 0; c < g.n; c++) {
      if (g.elem_order[c] != g.elem_order[gens[gi]]) continue;
      img[gi] = c;
      rec(gi + 1);
      if ((int)result.autos.size() >= limit && !result.complete) return;
    }
  };
  if (g.n == 1) {
    result.autos.push_back({{0}});
  } else {
    rec(0);
  }
  return result;
}

}  // namespace gf
