#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gf/runner.hpp"
#include "gf/verify.hpp"

using namespace gf;

static SimpleGraph petersen() {
  SimpleGraph g(10);
  for (int i = 0; i < 5; i++) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

static std::string tmp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p.string();
}

TEST_CASE("problem parsing and keys") {
  Problem p = parse_problem("cage(3,5)");
  CHECK(p.kind == Problem::Kind::kCage);
  CHECK(p.k == 3);
  CHECK(p.g == 5);
  CHECK(p.key() == "cage(3,5)");
  CHECK(parse_problem("vgr(3,5,6)").param == 6);
  CHECK(parse_problem("spectrum(4, 9, 270)").key() == "spectrum(4,9,270)");
  CHECK_THROWS(parse_problem("cage(3)"));
  CHECK_THROWS(parse_problem("blorp(3,5)"));
  CHECK_THROWS(parse_problem("cage(1,5)"));
}

TEST_CASE("problem acceptance on the Petersen graph") {
  SimpleGraph p = petersen();
  CHECK(problem_accepts(parse_problem("cage(3,5)"), p));
  CHECK_FALSE(problem_accepts(parse_problem("cage(3,6)"), p));
  CHECK_FALSE(problem_accepts(parse_problem("cage(4,5)"), p));
  CHECK(problem_accepts(parse_problem("vgr(3,5,6)"), p));
  CHECK(problem_accepts(parse_problem("egr(3,5,4)"), p));
  CHECK_FALSE(problem_accepts(parse_problem("no-g1(3,5)"), p));  // has 6-cycles
  CHECK(problem_accepts(parse_problem("spectrum(3,5,10)"), p));
  CHECK_FALSE(problem_accepts(parse_problem("spectrum(3,5,12)"), p));
}

TEST_CASE("groups by name") {
  CHECK(group_by_name("C45").n == 45);
  CHECK(group_by_name("D4").n == 8);
  CHECK(group_by_name("C3xD5").n == 30);
  CHECK(group_by_name("C13:C9(3)").n == 117);
  CHECK_THROWS(group_by_name("Q8"));

  std::string path = tmp_path("gf_group.tbl");
  std::ofstream(path) << serialize_group(cyclic(4));
  CHECK(group_by_name(path).n == 4);
}

TEST_CASE("catalog insert, dedup, best, corrupt lines") {
  std::string path = tmp_path("gf_catalog.jsonl");
  {
    Catalog cat(path);
    CatalogEntry e{"cage(3,5)", 10, digest_of(canonical_form(petersen())),
                   "{\"mode\":\"test\"}"};
    CHECK(cat.insert(e));
    CHECK_FALSE(cat.insert(e));  // duplicate digest
    e.digest = "other";
    e.order = 12;
    CHECK(cat.insert(e));
    auto b = cat.best("cage(3,5)");
    CHECK(b.order == 10);
    CHECK(b.count == 1);
    CHECK(cat.best("cage(7,5)").order == -1);
  }
  {
    Catalog reopened(path);  // digest set rebuilt from disk
    CHECK(reopened.size() == 2);
    CatalogEntry e{"cage(3,5)", 10, digest_of(canonical_form(petersen())), ""};
    CHECK_FALSE(reopened.insert(e));
  }
  std::ofstream(path, std::ios::app) << "{not json\n";
  CHECK_THROWS_WITH_AS(Catalog{path}, doctest::Contains("line 3"),
                       std::runtime_error);
}

TEST_CASE("jobs json parsing") {
  std::string text = R"json([
    {"problem": "cage(3,5)", "mode": "bta", "base_k": 3, "base_n_max": 2,
     "groups": ["C2", "C3", "C4", "C5", "C6"],
     "config": {"t_bta": 10.0, "rng_seed": 7}}
  ])json";
  auto jobs = parse_jobs(text);
  REQUIRE(jobs.size() == 1);
  CHECK(jobs[0].problem.key() == "cage(3,5)");
  CHECK(jobs[0].base_n_max == 2);
  CHECK(jobs[0].groups.size() == 5);
  CHECK(jobs[0].config.t_bta == 10.0);
  CHECK(jobs[0].config.rng_seed == 7);
  CHECK(jobs[0].config.g_min == 5);  // inherited from the problem
  CHECK_THROWS(parse_jobs("{}"));
}

TEST_CASE("run: exhaustive cubic cage(3,5) search finds only Petersen") {
  std::string path = tmp_path("gf_run_catalog.jsonl");
  JobSpec job;
  job.problem = parse_problem("cage(3,5)");
  job.mode = "bta";
  job.base_k = 3;
  job.base_n_max = 2;
  job.groups = {"C2", "C3", "C4", "C5", "C6"};
  job.config.g_min = 5;

  Catalog cat(path);
  RunSummary sum = run({job, job}, 2, cat);
  CHECK(sum.jobs == 2);
  CHECK(sum.errors.empty());
  CHECK(sum.inserted >= 1);
  auto b = sum.best.at("cage(3,5)");
  CHECK(b.order == 10);
  CHECK(b.count == 1);
  // deterministic: a second pass adds nothing new
  RunSummary again = run({job}, 1, cat);
  CHECK(again.inserted == 0);
  CHECK(again.emitted == sum.emitted / 2);
  CHECK(cat.best("cage(3,5)").count == 1);
  // the one digest equals Petersen's
  std::ifstream in(path);
  std::string line;
  bool found = false;
  std::string want = digest_of(canonical_form(petersen()));
  while (std::getline(in, line))
    if (line.find(want) != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("run: errors are isolated and the empty list is a no-op") {
  std::string path = tmp_path("gf_err_catalog.jsonl");
  Catalog cat(path);
  CHECK(run({}, 4, cat).jobs == 0);

  JobSpec bad;
  bad.problem = parse_problem("cage(3,5)");
  bad.group_dir = "/nonexistent/groups";
  bad.base_k = 3;
  bad.base_n_max = 1;
  JobSpec good;
  good.problem = parse_problem("spectrum(3,5,10)");
  good.mode = "bta";
  good.base_k = 3;
  good.base_n_max = 2;
  good.groups = {"C5"};
  good.config.g_min = 5;

  RunSummary sum = run({bad, good}, 2, cat);
  CHECK(sum.errors.size() == 1);
  CHECK(sum.best.at("spectrum(3,5,10)").order == 10);
}

TEST_CASE("run: excision job failures surface as error records") {
  std::string path = tmp_path("gf_exc_catalog.jsonl");
  JobSpec job;
  job.problem = parse_problem("spectrum(3,5,12)");
  job.mode = "excise";
  job.graph_file = tmp_path("gf_exc_input.g6");
  job.pattern = "girth8-original";
  std::ofstream(job.graph_file) << to_graph6(petersen()) << "\n";
  Catalog cat(path);
  RunSummary sum = run({job}, 1, cat);
  CHECK(sum.errors.size() == 1);  // Petersen has no distance-4 pair
}
