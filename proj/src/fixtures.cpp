#include "gf/fixtures.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gf {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in.good()) throw std::runtime_error("missing fixture file " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string fixtures_root() { return std::string(GF_SOURCE_DIR) + "/fixtures"; }

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& ent : fs::directory_iterator(fixtures_root()))
    if (ent.is_directory() && fs::exists(ent.path() / "expect.json"))
      ids.push_back(ent.path().filename().string());
  std::sort(ids.begin(), ids.end());
  return ids;
}

Fixture load_fixture(const std::string& id) {
  fs::path dir = fs::path(fixtures_root()) / id;
  if (!fs::is_directory(dir))
    throw std::runtime_error("unknown fixture id: " + id);
  Fixture f;
  f.id = id;
  f.base = parse_pregraph(slurp(dir / "base.pg"));
  f.group = load_group(slurp(dir / "group.tbl"));

  nlohmann::json j = nlohmann::json::parse(slurp(dir / "expect.json"));
  f.expect.order = j.at("order").get<int>();
  f.expect.k = j.at("k").get<int>();
  f.expect.girth = j.at("girth").get<int>();
  if (j.contains("bipartite")) f.expect.bipartite = j["bipartite"].get<bool>();
  if (j.contains("connected")) f.expect.connected = j["connected"].get<bool>();
  f.expect.unresolved = j.value("unresolved", false);

  f.alpha = VoltageAssignment(f.base.darts.size());
  if (fs::exists(dir / "volt.txt")) {
    std::istringstream in(slurp(dir / "volt.txt"));
    int e, a;
    while (in >> e >> a) {
      if (e < 0 || e >= (int)f.base.edges.size())
        throw std::runtime_error(id + ": voltage for unknown edge " +
                                 std::to_string(e));
      if (a < 0 || a >= f.group.n)
        throw std::runtime_error(id + ": voltage out of range: " +
                                 std::to_string(a));
      f.alpha.set(f.base, f.group, 2 * e, a);
    }
  } else if (!f.expect.unresolved) {
    throw std::runtime_error(id + ": missing volt.txt on a resolved fixture");
  }
  return f;
}

}  // namespace gf
