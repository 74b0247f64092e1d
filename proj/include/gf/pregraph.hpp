#pragma once
#include <string>
#include <vector>

namespace gf {

// Multigraph with loops, parallel edges and semi-edges, plus a dart view.
// Full non-loop edge e=(u,v): darts 2e (u->v) and 2e+1 (v->u).
// Loop at u: darts 2e, 2e+1 both at u, mutually inverse.
// Semi-edge at u: dart 2e only, self-inverse.
struct PgEdge {
  int u = 0, v = 0;
  bool semi = false;  // semi-edges use u only
};

struct Dart {
  int tail = 0, head = 0;
  int inv = -1;
  int edge = -1;
  bool semi = false;
};

struct Pregraph {
  int n = 0;
  std::vector<PgEdge> edges;
  std::vector<Dart> darts;                // indexed 2e (+1)
  std::vector<std::vector<int>> out;      // darts by tail vertex

  void rebuild_darts();
  int degree(int v) const { return (int)out[v].size(); }
};

Pregraph parse_pregraph(const std::string& text);
std::string serialize_pregraph(const Pregraph& g);

std::vector<int> degree_sequence(const Pregraph& g);
bool is_k_regular(const Pregraph& g, int k);
bool is_connected(const Pregraph& g);  // over full edges

struct SpanningTree {
  std::vector<int> edges;                 // tree edge indices
  std::vector<char> edge_in_tree;         // by edge index
  std::vector<char> dart_in_tree;         // by dart index
  std::vector<std::vector<int>> path_len; // tree distance between vertices
};

// BFS from vertex 0, edges in index order; throws on disconnected input.
SpanningTree spanning_tree(const Pregraph& g);

// One dart per non-tree edge (the even dart), ascending by dart index.
std::vector<int> useful_darts(const Pregraph& g, const SpanningTree& tree);

struct EdgeAutomorphism {
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  std::vector<int> dart_perm;
};

struct EdgeAutomorphismList {
  std::vector<EdgeAutomorphism> autos;
  bool complete = true;
};

// All pregraph automorphisms whose edge permutation maps non-tree edges to
// non-tree edges; includes the identity; capped at `limit`, `budget` seconds.
EdgeAutomorphismList edge_automorphisms(const Pregraph& g,
                                        const SpanningTree& tree,
                                        int limit = 200,
                                        double budget_s = 2.0);

}  // namespace gf
