#pragma once
#include <string>
#include <vector>

namespace gf {

// Finite group as an explicit multiplication table. Identity is element 0.
struct FiniteGroup {
  int n = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  std::vector<int> inverse;
  std::vector<int> elem_order;
  std::string name;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int ord(int a) const { return elem_order[a]; }
};

struct GroupAutomorphism {
  std::vector<int> perm;
};

struct AutomorphismList {
  std::vector<GroupAutomorphism> autos;
  bool complete = true;
};

// Throws std::runtime_error with offending indices on invalid tables.
FiniteGroup load_group(const std::string& text);
std::string serialize_group(const FiniteGroup& g);

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n; r_0..r_{n-1}, s_0..s_{n-1}, s_i = r^i s
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           int order_cap = 4096);
// C_m x| C_n, (a,x)(b,y) = (a + t^x b mod m, x+y mod n), index a*n + x.
FiniteGroup semidirect_product_cyclic(int m, int n, long t);

std::vector<int> involutions(const FiniteGroup& g);

// Generator-image backtracking over a greedy minimal generating set,
// deterministic order, capped at `limit` results.
AutomorphismList automorphisms(const FiniteGroup& g, int limit = 2000);

}  // namespace gf
