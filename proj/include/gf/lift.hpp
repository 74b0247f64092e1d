#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gf/graph.hpp"
#include "gf/group.hpp"
#include "gf/pregraph.hpp"

namespace gf {

constexpr int kUnassigned = -1;

// Partial dart -> group element map; volt[inv(d)] kept consistent.
struct VoltageAssignment {
  std::vector<int> volt;

  explicit VoltageAssignment(size_t darts = 0) : volt(darts, kUnassigned) {}
  bool assigned(int d) const { return volt[d] != kUnassigned; }
  void set(const Pregraph& g, const FiniteGroup& gr, int d, int a) {
    volt[d] = a;
    volt[g.darts[d].inv] = gr.inv(a);
  }
  void clear(const Pregraph& g, int d) {
    volt[d] = kUnassigned;
    volt[g.darts[d].inv] = kUnassigned;
  }
};

struct Structural {
  SpanningTree tree;
  std::vector<int> useful;                 // useful dart list L_u
  std::vector<std::vector<int>> admissible;  // N(d) per useful-list position
  VoltageAssignment alpha;                 // tree darts pre-assigned 0
};

// REJECT (nullopt) if some vertex has more semi-edges than involutions or
// some useful dart has an empty admissible set.
std::optional<Structural> structural_checks(const Pregraph& g,
                                            const FiniteGroup& gr, int g_min);

// True iff a closed non-reversing walk of length < g_min through the freshly
// assigned dart d has net voltage 0 (incremental check; walks start with
// d^{-1} and use assigned darts only).
bool cannot_achieve_girth(const Pregraph& g, const FiniteGroup& gr, int d,
                          int g_min, const VoltageAssignment& alpha);

// True iff some (edge automorphism, group automorphism) pair produces a
// lexicographically smaller voltage list; unassigned compares as +inf.
bool not_canonical(const Pregraph& g, const FiniteGroup& gr,
                   const VoltageAssignment& alpha,
                   const std::vector<int>& useful,
                   const std::vector<EdgeAutomorphism>& edge_autos,
                   const std::vector<GroupAutomorphism>& group_autos);

// nullopt when the lift has a loop or parallel edge.
std::optional<SimpleGraph> lift(const Pregraph& g, const FiniteGroup& gr,
                                const VoltageAssignment& alpha);

// Girth of the lift computed on the base (shortest closed non-reversing
// zero-voltage walk), up to `cap`; returns cap+1 when no short cycle exists.
int lift_girth_via_base(const Pregraph& g, const FiniteGroup& gr,
                        const VoltageAssignment& alpha, int cap);

}  // namespace gf
