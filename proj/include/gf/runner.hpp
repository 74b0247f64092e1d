#pragma once
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gf/search.hpp"

namespace gf {

struct Problem {
  enum class Kind { kCage, kVgr, kEgr, kNoG1, kSpectrum };
  Kind kind = Kind::kCage;
  int k = 3, g = 5;
  long long param = -1;  // lambda (vgr/egr) or order (spectrum)

  std::string key() const;
};

// "cage(3,5)", "vgr(3,5,6)", "egr(3,5,4)", "no-g1(3,5)", "spectrum(3,5,10)"
Problem parse_problem(const std::string& text);

// Does the graph answer the problem? (k-regular with the right girth plus
// the kind-specific condition.)
bool problem_accepts(const Problem& p, const SimpleGraph& g);

// "C45", "D4", "C3xC3xD5", "C13:C9(3)" (semidirect with conjugation
// multiplier t), or a path to a multiplication-table file.
FiniteGroup group_by_name(const std::string& name);

struct JobSpec {
  Problem problem;
  std::string mode = "bta";       // bta | tabu | hill | excise
  std::string base_file;          // pregraph file, one per blank-separated block
  int base_k = 0, base_n_max = 0;  // alternative: generate bases
  std::vector<std::string> groups;
  std::string group_dir;          // every file in it is a group table
  int hill_n = 0;                 // base order for hill mode
  std::string graph_file;         // excise mode input (graph6)
  std::string pattern;            // excise mode pattern name
  SearchConfig config;
};

std::vector<JobSpec> parse_jobs(const std::string& json_text);

struct CatalogEntry {
  std::string problem;
  int order = 0;
  std::string digest;       // canonical-form digest
  std::string provenance;   // JSON object string
};

// Append-only JSON-lines file; digest set rebuilt on open.
class Catalog {
 public:
  explicit Catalog(std::string path);  // throws on a corrupt line (offset)

  bool insert(const CatalogEntry& e);  // false = duplicate

  struct Best {
    int order = -1;  // -1 = none
    int count = 0;   // distinct graphs at that order
  };
  Best best(const std::string& problem_key) const;
  size_t size() const;

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::set<std::pair<std::string, std::string>> seen_;  // (problem, digest)
  std::map<std::string, std::map<int, int>> orders_;    // problem -> order -> n
};

std::string digest_of(const std::string& canonical);

struct RunSummary {
  int jobs = 0;
  long long emitted = 0, inserted = 0, duplicates = 0;
  std::vector<std::string> errors;  // one line per failed job
  std::map<std::string, Catalog::Best> best;  // per problem key touched
};

RunSummary run(const std::vector<JobSpec>& jobs, int workers, Catalog& cat);

}  // namespace gf
