#pragma once
#include <optional>
#include <string>
#include <vector>

#include "gf/lift.hpp"

namespace gf {

struct FixtureExpect {
  int order = 0, k = 0, girth = 0;
  std::optional<bool> bipartite, connected;
  bool unresolved = false;  // transcription known not to verify; no voltages
};

struct Fixture {
  std::string id;
  Pregraph base;
  FiniteGroup group;
  VoltageAssignment alpha;  // all-unassigned when unresolved
  FixtureExpect expect;
};

std::string fixtures_root();             // <source dir>/fixtures
std::vector<std::string> fixture_ids();  // sorted directory names

// Reads <root>/<id>/{base.pg, group.tbl, volt.txt, expect.json}; volt.txt
// lines are "<edge index> <voltage>"; unlisted edges stay unassigned.
Fixture load_fixture(const std::string& id);

}  // namespace gf
