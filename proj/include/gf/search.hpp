#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "gf/lift.hpp"

namespace gf {

struct SearchConfig {
  int g_min = 5;
  int g_nbr = 0;  // 0 = derive from mode: g_min-2 (girth) / g_min (regularity)
  double t_bta = 20.0;
  double t_ts = 20.0;
  double t_ts_init = 2.0;
  double t_edge_autos = 2.0;
  int max_edge_autos = 200;
  int max_group_autos = 2000;
  int tabu_len_factor = 3;
  double penalty_C = 1000.0;
  int walk_samples_m = 500;
  int stagnation_limit = 50;
  int perturb_moves = 3;
  uint64_t rng_seed = 1;
  // pruning switches (all on for production; off for neutrality tests)
  bool prune_girth = true;
  bool prune_canon = true;
  bool use_edge_autos = true;
  bool use_group_autos = true;
};

enum class CostMode { kGirth, kRegularity };

// key=value lines over the SearchConfig field names; '#' comments allowed
SearchConfig parse_search_config(const std::string& text);
std::string serialize_search_config(const SearchConfig& c);
// GIRTH_FORGE_SEED environment override, else fallback
uint64_t seed_from_env(uint64_t fallback);
int resolved_g_nbr(const SearchConfig& c, CostMode mode);

// Returns true when the lift was accepted as interesting.
using LiftSink =
    std::function<bool(const SimpleGraph&, const VoltageAssignment&)>;

struct BtaResult {
  long long emitted = 0;       // sink acceptances
  long long leaves = 0;        // total assignments lifted
  bool complete = true;        // false when t_bta expired
  bool rejected = false;       // structural REJECT
};

BtaResult bta(const Pregraph& g, const FiniteGroup& gr,
              const SearchConfig& cfg, const LiftSink& sink);

double cost_girth(const Pregraph& g, const FiniteGroup& gr,
                  const VoltageAssignment& alpha, int g_min, int m, double C,
                  std::mt19937_64& rng);

double cost_reg(const Pregraph& g, const FiniteGroup& gr,
                const VoltageAssignment& alpha, int girth_cap);

struct TsResult {
  bool rejected = false;      // structural REJECT
  bool init_ok = false;       // initial solution found within t_ts_init
  long long iterations = 0;
  long long emitted = 0;
  double best_cost = 0;
};

TsResult tabu_search(const Pregraph& g, const FiniteGroup& gr,
                     const SearchConfig& cfg, CostMode mode,
                     const LiftSink& sink);

struct HillResult {
  Pregraph base;
  VoltageAssignment alpha{0};
  std::optional<SimpleGraph> best;  // lift after the final step
  int steps = 0;
};

HillResult hill_climb(int n, const FiniteGroup& gr, int g, double budget_s,
                      const LiftSink& sink);

}  // namespace gf
