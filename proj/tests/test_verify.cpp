#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

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
  // LCF [5,-5]^7
  SimpleGraph g(14);
  int shifts[] = {5, -5};
  for (int i = 0; i < 14; i++) {
    g.add_edge(i, (i + 1) % 14);
    g.add_edge(i, ((i + shifts[i % 2]) % 14 + 14) % 14);
  }
  return g;
}

TEST_CASE("moore bound") {
  CHECK(moore_bound(3, 5) == 10);
  CHECK(moore_bound(3, 12) == 126);
  CHECK(moore_bound(4, 12) == 728);
  CHECK(moore_bound(5, 12) == 2730);
  CHECK(moore_bound(6, 12) == 7812);
  CHECK(moore_bound(3, 6) == 14);
  CHECK(moore_bound(4, 8) == 80);
  CHECK(moore_bound(7, 5) == 50);
  // independent closed-form check across the small range
  for (int k = 2; k <= 14; k++)
    for (int g = 3; g <= 12; g++) {
      long long expect;
      if (g % 2) {
        expect = 1;
        long long layer = k;
        for (int i = 0; i < (g - 1) / 2; i++) { expect += layer; layer *= k - 1; }
      } else {
        expect = 0;
        long long layer = 1;
        for (int i = 0; i < g / 2; i++) { expect += 2 * layer; layer *= k - 1; }
      }
      CHECK(moore_bound(k, g) == expect);
    }
  CHECK_THROWS(moore_bound(1, 5));
  CHECK_THROWS(moore_bound(3, 2));
}

TEST_CASE("girth cycle regularity of Petersen and Heawood") {
  GirthRegularity p = girth_cycle_regularity(petersen());
  CHECK(p.girth == 5);
  CHECK(p.cycle_count == 12);
  CHECK(p.lambda_v == 6);
  CHECK(p.lambda_e == 4);
  // handshake identities
  long long sv = std::accumulate(p.per_vertex.begin(), p.per_vertex.end(), 0LL);
  long long se = std::accumulate(p.per_edge.begin(), p.per_edge.end(), 0LL);
  CHECK(sv == p.girth * p.cycle_count);
  CHECK(se == p.girth * p.cycle_count);

  GirthRegularity h = girth_cycle_regularity(heawood());
  CHECK(h.girth == 6);
  REQUIRE(h.lambda_e.has_value());
  CHECK(*h.lambda_e == h.cycle_count * 6 / 21);
  long long hv = std::accumulate(h.per_vertex.begin(), h.per_vertex.end(), 0LL);
  CHECK(hv == 6 * h.cycle_count);

  // irregular example: triangle with a pendant path keeps girth 3
  SimpleGraph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);  // adds a 4-cycle? 0-2-3-4-0 length 4 and triangle 0-1-2
  GirthRegularity ir = girth_cycle_regularity(g);
  CHECK(ir.girth == 3);
  CHECK_FALSE(ir.lambda_v.has_value());

  SimpleGraph tree(3);
  tree.add_edge(0, 1);
  CHECK_THROWS(girth_cycle_regularity(tree));
}

TEST_CASE("cycle of given length") {
  SimpleGraph p = petersen();
  CHECK(has_cycle_of_length(p, 5));
  CHECK(has_cycle_of_length(p, 6));
  CHECK_FALSE(has_cycle_of_length(p, 3));
  CHECK_FALSE(has_cycle_of_length(p, 4));
  SimpleGraph h = heawood();
  CHECK_FALSE(has_cycle_of_length(h, 7));  // bipartite, odd length
  CHECK(has_cycle_of_length(h, 8));
  SimpleGraph c7(7);
  for (int i = 0; i < 7; i++) c7.add_edge(i, (i + 1) % 7);
  CHECK(has_cycle_of_length(c7, 7));
  CHECK_FALSE(has_cycle_of_length(c7, 6));
}

TEST_CASE("classify") {
  ClassifyTargets t;
  t.lambdas = true;
  t.g_plus_1 = true;
  t.canonical = true;
  GraphReport rep = classify(petersen(), t);
  CHECK(rep.n == 10);
  CHECK(rep.min_degree == 3);
  CHECK(rep.max_degree == 3);
  CHECK(rep.girth == 5);
  CHECK(rep.connected);
  CHECK_FALSE(rep.bipartite);
  CHECK(rep.lambda_v == 6);
  CHECK(rep.lambda_e == 4);
  CHECK(rep.has_g_plus_1_cycle);
  CHECK_FALSE(rep.canonical.empty());
  CHECK(rep.moore_deficiency == 0);  // Petersen is a Moore graph

  GraphReport hw = classify(heawood(), t);
  CHECK(hw.bipartite);
  CHECK(hw.moore_deficiency == 0);

  SimpleGraph empty(0);
  GraphReport er = classify(empty);
  CHECK(er.n == 0);
  CHECK(er.girth == kInfGirth);
}
