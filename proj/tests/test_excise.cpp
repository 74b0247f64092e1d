#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "gf/excise.hpp"
#include "gf/verify.hpp"

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

static SimpleGraph heawood() {
  SimpleGraph g(14);
  int shifts[] = {5, -5};
  for (int i = 0; i < 14; i++) {
    g.add_edge(i, (i + 1) % 14);
    g.add_edge(i, ((i + shifts[i % 2]) % 14 + 14) % 14);
  }
  return g;
}

static SimpleGraph load_cage(const std::string& name) {
  std::ifstream in(std::string(GF_SOURCE_DIR) + "/fixtures/cages/" + name);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  return from_graph6(line);
}

TEST_CASE("neighborhood layers of the Petersen graph") {
  SimpleGraph p = petersen();
  CHECK(neighborhood(p, 0, 0) == std::vector<int>{0});
  CHECK(neighborhood(p, 0, 1).size() == 3);
  CHECK(neighborhood(p, 0, 2).size() == 6);
  CHECK(neighborhood(p, 0, 3).empty());
  // diameter-2 graph: no vertex pair at distance 2 from both ends of an edge
  // has to exist, but co-N1 of nonadjacent vertices is their common neighbor
  auto common = co_neighborhood(p, 0, 2, 1);
  CHECK(common.size() == 1);
}

TEST_CASE("girth-8 excision on the (4,8)-cage") {
  SimpleGraph c = load_cage("cage_4_8.g6");
  REQUIRE(c.n == 80);
  REQUIRE(is_k_regular(c, 4));
  REQUIRE(girth(c) == 8);

  ExcisionPlan orig = plan_excision(c, ExcisionPattern::kGirth8Original, 4);
  CHECK(orig.removed.size() == 11);  // 3k - 1
  SimpleGraph h = excise(c, orig);
  CHECK(h.n == 69);
  CHECK(girth(h) >= 8);
  CHECK(h.max_degree() <= 4);

  ExcisionPlan full = plan_excision(c, ExcisionPattern::kGirth8Full, 4);
  CHECK(full.removed.size() == 14);  // 3k + 2
  CHECK(excise(c, full).n == 66);

  // distance-4 layer identity |N2(u,v)| = k, for every distance-4 anchor pair
  auto du = bfs_distances(c, 0);
  int checked = 0;
  for (int v = 0; v < c.n; v++)
    if (du[v] == 4) {
      CHECK(co_neighborhood(c, 0, v, 2).size() == 4);
      checked++;
    }
  CHECK(checked > 0);
}

TEST_CASE("girth-12 excision on the (4,12)-cage") {
  SimpleGraph c = load_cage("cage_4_12.g6");
  REQUIRE(c.n == 728);
  REQUIRE(is_k_regular(c, 4));

  ExcisionPlan plan = plan_excision(c, ExcisionPattern::kGirth12K4, 4);
  CHECK(plan.removed.size() == 15);  // 3k + 3
  SimpleGraph h = excise(c, plan);
  CHECK(h.n == 713);
  CHECK(girth(h) >= 12);
}

TEST_CASE("girth-12 excision on the (6,12)-cage") {
  SimpleGraph c = load_cage("cage_6_12.g6");
  REQUIRE(c.n == 7812);

  ExcisionPlan plan = plan_excision(c, ExcisionPattern::kGirth12K6, 6);
  CHECK(plan.removed.size() == 29);  // 5k - 1
  CHECK(excise(c, plan).n == 7783);
}

TEST_CASE("excision rejects bad anchors and non-cage layer sizes") {
  SimpleGraph p = petersen();  // diameter 2: no distance-4 pair
  CHECK_THROWS(plan_excision(p, ExcisionPattern::kGirth8Original, 3));
  SimpleGraph c = load_cage("cage_4_8.g6");
  CHECK_THROWS(plan_excision(c, ExcisionPattern::kGirth8Original, 4, 0, 1));
}

TEST_CASE("completion restores the Heawood graph minus two vertices") {
  SimpleGraph h = heawood();
  ExcisionPlan drop;
  drop.pattern = ExcisionPattern::kGirth8Original;
  drop.u = 0;
  drop.v = 1;
  drop.removed = {0, 1};  // adjacent pair
  SimpleGraph g = excise(h, drop);
  REQUIRE(g.n == 12);

  auto done = complete_to_regular(g, 3, 5, 100, 5.0);
  CHECK(!done.empty());
  bool any = false;
  for (const auto& r : done) {
    CHECK(is_k_regular(r, 3));
    CHECK(girth(r) >= 5);
    if (girth(r) >= 5) any = true;
  }
  CHECK(any);
}

TEST_CASE("completion dead ends and no-ops") {
  SimpleGraph k4(4);  // K4 minus an edge: cannot reach girth 4
  k4.add_edge(0, 1);
  k4.add_edge(0, 2);
  k4.add_edge(0, 3);
  k4.add_edge(1, 2);
  k4.add_edge(1, 3);
  CHECK(complete_to_regular(k4, 3, 4, 10, 1.0).empty());

  auto same = complete_to_regular(petersen(), 3, 5, 10, 1.0);
  REQUIRE(same.size() == 1);
  CHECK(canonical_form(same[0]) == canonical_form(petersen()));

  SimpleGraph over(2);
  over.add_edge(0, 1);
  CHECK_THROWS(complete_to_regular(over, 0, 3, 10, 1.0));
}
