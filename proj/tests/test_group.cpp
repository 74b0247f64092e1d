#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gf/group.hpp"

using namespace gf;

TEST_CASE("cyclic group basics") {
  FiniteGroup z6 = cyclic(6);
  CHECK(z6.n == 6);
  CHECK(z6.mul(4, 5) == 3);
  CHECK(z6.inv(2) == 4);
  CHECK(z6.ord(0) == 1);
  CHECK(z6.ord(1) == 6);
  CHECK(z6.ord(2) == 3);
  CHECK(z6.ord(3) == 2);
  CHECK(involutions(z6) == std::vector<int>{3});
}

TEST_CASE("dihedral group") {
  FiniteGroup d5 = dihedral(5);
  CHECK(d5.n == 10);
  // r_i r_j = r_{i+j}; s_j = index 5+j; s_i s_j = r_{i-j}
  CHECK(d5.mul(2, 3) == 0);
  CHECK(d5.mul(5 + 2, 5 + 2) == 0);
  CHECK(d5.mul(1, 5 + 0) == 5 + 1);   // r_1 s_0 = s_1
  CHECK(d5.mul(5 + 3, 1) == 5 + 2);   // s_3 r_1 = s_2
  CHECK(involutions(d5).size() == 5);  // the five reflections
  for (int s : involutions(d5)) CHECK(s >= 5);
}

TEST_CASE("direct product") {
  FiniteGroup g = direct_product(cyclic(3), cyclic(4));
  CHECK(g.n == 12);
  CHECK(g.ord(1 * 4 + 1) == 12);
  // (a,b) index a*|B|+b
  CHECK(g.mul(1 * 4 + 2, 2 * 4 + 3) == 0 * 4 + 1);
}

TEST_CASE("semidirect product C7 x| C3, t=2") {
  FiniteGroup g = semidirect_product_cyclic(7, 3, 2);
  CHECK(g.n == 21);
  // (a,x)(b,y) = (a + 2^x b mod 7, x+y mod 3), index a*3+x
  CHECK(g.mul(1 * 3 + 1, 1 * 3 + 0) == 3 * 3 + 1);  // (1+2*1, 1) = (3,1)
  CHECK(g.ord(0 * 3 + 1) == 3);
  CHECK(g.ord(1 * 3 + 0) == 7);
}

TEST_CASE("semidirect rejects invalid twist") {
  CHECK_THROWS(semidirect_product_cyclic(31, 9, 2));  // 2^9 != 1 mod 31
  CHECK_NOTHROW(semidirect_product_cyclic(31, 9, 5));
}

TEST_CASE("serialize/load round trip and validation") {
  FiniteGroup d4 = dihedral(4);
  std::string txt = serialize_group(d4);
  FiniteGroup back = load_group(txt);
  CHECK(back.n == 8);
  CHECK(back.table == d4.table);
  CHECK(back.name == d4.name);

  // broken table: non-identity idempotent
  std::string bad = "group bad 2\n0 1\n1 1\n";
  CHECK_THROWS(load_group(bad));
}

TEST_CASE("automorphism counts") {
  // |Aut(C_n)| = phi(n)
  CHECK(automorphisms(cyclic(5)).autos.size() == 4);
  CHECK(automorphisms(cyclic(8)).autos.size() == 4);
  // |Aut(D_4)| = 8, |Aut(D_5)| = 20
  CHECK(automorphisms(dihedral(4)).autos.size() == 8);
  CHECK(automorphisms(dihedral(5)).autos.size() == 20);
  // |Aut(C2 x C2)| = 6
  CHECK(automorphisms(direct_product(cyclic(2), cyclic(2))).autos.size() == 6);
  // limit truncation flags incompleteness
  AutomorphismList cut = automorphisms(dihedral(5), 7);
  CHECK_FALSE(cut.complete);
  CHECK(cut.autos.size() == 7);
}

TEST_CASE("automorphisms are valid and include identity") {
  FiniteGroup g = semidirect_product_cyclic(13, 9, 3);
  AutomorphismList al = automorphisms(g);
  CHECK(al.complete);
  CHECK(al.autos.size() == 468);
  bool has_id = false;
  for (const GroupAutomorphism& a : al.autos) {
    CHECK(a.perm[0] == 0);
    bool id = true;
    for (int i = 0; i < g.n; i++) id = id && a.perm[i] == i;
    has_id = has_id || id;
  }
  CHECK(has_id);
  // spot check the homomorphism property
  const GroupAutomorphism& a = al.autos.back();
  for (int i = 0; i < g.n; i += 7)
    for (int j = 0; j < g.n; j += 11)
      CHECK(a.perm[g.mul(i, j)] == g.mul(a.perm[i], a.perm[j]));
}
