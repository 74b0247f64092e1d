#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gf/graph.hpp"

namespace gf {

struct GraphReport {
  int n = 0;
  int min_degree = 0, max_degree = 0;
  int girth = kInfGirth;  // kInfGirth == acyclic
  bool connected = false;
  bool bipartite = false;
  std::optional<long long> lambda_v;  // nullopt == irregular or skipped
  std::optional<long long> lambda_e;
  bool lambda_checked = false;
  bool has_g_plus_1_cycle = false;
  bool g1_checked = false;
  std::string canonical;  // empty when skipped
  long long moore_deficiency = 0;  // n - M(k, girth), when regular & cyclic
};

long long moore_bound(int k, int g);  // throws for k < 2 or g < 3

struct GirthRegularity {
  int girth = kInfGirth;
  long long cycle_count = 0;                 // number of girth cycles
  std::vector<long long> per_vertex, per_edge;  // edge index = position in
                                                // sorted (u<v) edge list
  std::optional<long long> lambda_v, lambda_e;
};

// Counts each girth cycle exactly once; throws on acyclic input.
GirthRegularity girth_cycle_regularity(const SimpleGraph& g);

bool has_cycle_of_length(const SimpleGraph& g, int len);

struct ClassifyTargets {
  bool lambdas = false;
  bool g_plus_1 = false;
  bool canonical = false;
};

GraphReport classify(const SimpleGraph& g, const ClassifyTargets& t = {});

}  // namespace gf
