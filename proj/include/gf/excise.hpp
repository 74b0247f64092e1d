#pragma once
#include <string>
#include <vector>

#include "gf/graph.hpp"

namespace gf {

enum class ExcisionPattern {
  kGirth8Original,  // u, v at distance 4; N1(u); N1(v); N2(u,v) minus three
  kGirth8Full,      // same but all of N2(u,v)
  kGirth12K4,       // u, v at distance 6; N1(u); N1(v); N3(u,v); one extra
  kGirth12K6,       // ... N2(u)^N4(v); N4(u)^N2(v); N3(u,v) minus three
};

ExcisionPattern pattern_from_name(const std::string& name);
std::string pattern_name(ExcisionPattern p);

struct ExcisionPlan {
  ExcisionPattern pattern;
  int u = -1, v = -1;
  std::vector<int> removed;  // sorted
};

std::vector<int> neighborhood(const SimpleGraph& g, int v, int i);
std::vector<int> co_neighborhood(const SimpleGraph& g, int u, int v, int i);

// Verifies the pattern's distance/layer-size preconditions and computes the
// removed set. Anchors default to u = 0 and the first BFS vertex at the
// required distance; retained/extra vertices are the smallest-indexed ones.
ExcisionPlan plan_excision(const SimpleGraph& g, ExcisionPattern pattern,
                           int k, int anchor_u = -1, int anchor_v = -1);

// Induced subgraph on the complement of plan.removed.
SimpleGraph excise(const SimpleGraph& g, const ExcisionPlan& plan);

// k-regular supergraphs of g with girth >= girth_min on the same vertex set,
// via backtracking over deficient-vertex pairings (new edges only between
// vertices at distance >= girth_min - 1).
std::vector<SimpleGraph> complete_to_regular(const SimpleGraph& g, int k,
                                             int girth_min, int limit,
                                             double budget_s);

}  // namespace gf
