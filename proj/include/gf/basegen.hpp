#pragma once
#include <string>
#include <vector>

#include "gf/pregraph.hpp"

namespace gf {

// count[d] = number of vertices of degree d, d = 0..k (degree-0 vertices
// only matter for n = 1, where the empty multigraph is still connected).
struct DegreeDistribution {
  std::vector<int> count;
};

// Pregraph isomorphism code: loops/semi-edges/full edges become colored
// gadget vertices of an incidence graph, reducing the problem to colored
// simple-graph canonical forms.
std::string pregraph_canonical_form(const Pregraph& g);

// All connected loop-free, semi-edge-free multigraphs with the given degree
// distribution, pairwise non-isomorphic, deterministic order.
std::vector<Pregraph> generate_multigraphs(const DegreeDistribution& dist);

// All ways to raise every vertex to degree k using loops (2 per vertex
// degree) and semi-edges (1 each); raw, duplicates removed by the caller.
std::vector<Pregraph> complete_with_loops_semiedges(const Pregraph& g, int k,
                                                    bool allow_loops = true,
                                                    bool allow_semi = true);

// Connected k-regular pregraphs of order n, pairwise non-isomorphic,
// deterministic order. Throws when n exceeds `cap`.
std::vector<Pregraph> generate_base_graphs(int k, int n,
                                           bool allow_loops = true,
                                           bool allow_semi = true,
                                           int cap = 12);

}  // namespace gf
