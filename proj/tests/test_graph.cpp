#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gf/graph.hpp"

using namespace gf;

static SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; i++) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

static SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; i++) g.add_edge(i, (i + 1) % n);
  return g;
}

TEST_CASE("basic ops") {
  SimpleGraph g(4);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));  // duplicate
  CHECK_FALSE(g.add_edge(2, 2));  // loop
  CHECK(g.has_edge(0, 1));
  CHECK(g.edge_count() == 1);
  g.remove_edge(0, 1);
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("girth") {
  CHECK(girth(petersen()) == 5);
  CHECK(girth(cycle(7)) == 7);
  SimpleGraph tree(5);
  tree.add_edge(0, 1);
  tree.add_edge(1, 2);
  tree.add_edge(1, 3);
  CHECK(girth(tree) == kInfGirth);
  SimpleGraph k4(4);
  for (int i = 0; i < 4; i++)
    for (int j = i + 1; j < 4; j++) k4.add_edge(i, j);
  CHECK(girth(k4) == 3);
}

TEST_CASE("connectivity, bipartiteness, regularity") {
  CHECK(is_connected(petersen()));
  CHECK(is_k_regular(petersen(), 3));
  CHECK_FALSE(is_bipartite(petersen()));
  CHECK(is_bipartite(cycle(8)));
  CHECK_FALSE(is_bipartite(cycle(9)));
  SimpleGraph two = cycle(3);
  two.n = 6;
  two.adj.resize(6);
  two.add_edge(4, 5);
  CHECK_FALSE(is_connected(two));
}

TEST_CASE("bfs distances") {
  std::vector<int> d = bfs_distances(petersen(), 0);
  CHECK(d[0] == 0);
  CHECK(*std::max_element(d.begin(), d.end()) == 2);  // diameter 2
}

TEST_CASE("canonical form separates and identifies") {
  SimpleGraph p = petersen();
  // random relabeling must give the same canonical form
  std::mt19937 rng(12345);
  std::vector<int> perm(10);
  for (int i = 0; i < 10; i++) perm[i] = i;
  for (int rep = 0; rep < 5; rep++) {
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph q(10);
    for (int u = 0; u < 10; u++)
      for (int v : p.adj[u])
        if (u < v) q.add_edge(perm[u], perm[v]);
    CHECK(canonical_form(q) == canonical_form(p));
  }
  // different 3-regular girth-5-free graphs differ
  CHECK(canonical_form(p) != canonical_form(cycle(10)));
  // the two 3-regular graphs on 6 vertices: K_3,3 vs prism
  SimpleGraph k33(6), prism(6);
  for (int i = 0; i < 3; i++)
    for (int j = 3; j < 6; j++) k33.add_edge(i, j);
  for (int i = 0; i < 3; i++) {
    prism.add_edge(i, (i + 1) % 3);
    prism.add_edge(3 + i, 3 + (i + 1) % 3);
    prism.add_edge(i, 3 + i);
  }
  CHECK(canonical_form(k33) != canonical_form(prism));
}

TEST_CASE("canonical form respects colors") {
  SimpleGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  std::vector<int> c1{0, 1, 0}, c2{1, 0, 0};
  CHECK(canonical_form(path, &c1) != canonical_form(path, &c2));
  std::vector<int> c3{0, 0, 1};  // isomorphic to c2 placement
  CHECK(canonical_form(path, &c2) == canonical_form(path, &c3));
}

TEST_CASE("graph6 round trip") {
  for (int n : {1, 5, 30, 63, 100, 200}) {
    std::mt19937 rng(n);
    SimpleGraph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 4 == 0) g.add_edge(u, v);
    SimpleGraph back = from_graph6(to_graph6(g));
    CHECK(back.n == g.n);
    CHECK(back.adj == g.adj);
  }
  // known encoding: K_4 is "C~"
  SimpleGraph k4(4);
  for (int i = 0; i < 4; i++)
    for (int j = i + 1; j < 4; j++) k4.add_edge(i, j);
  CHECK(to_graph6(k4) == "C~");
  SimpleGraph c4 = from_graph6("Cr");  // 4-cycle
  CHECK(c4.edge_count() == 4);
  CHECK(girth(c4) == 4);
}
