#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gf {

struct SimpleGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  explicit SimpleGraph(int n_ = 0) : n(n_), adj(n_) {}
  bool has_edge(int u, int v) const;
  bool add_edge(int u, int v);  // false if loop/duplicate
  void remove_edge(int u, int v);
  long long edge_count() const;
  int max_degree() const;
};

constexpr int kInfGirth = INT32_MAX;

int girth(const SimpleGraph& g);          // kInfGirth for forests
bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_k_regular(const SimpleGraph& g, int k);
std::vector<int> bfs_distances(const SimpleGraph& g, int src);

// Canonical form via color refinement + backtracking over the first smallest
// non-singleton cell, with partition-trace pruning. Equal strings iff
// (color-respecting) isomorphic.
std::string canonical_form(const SimpleGraph& g,
                           const std::vector<int>* colors = nullptr);

std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(const std::string& line);

}  // namespace gf
