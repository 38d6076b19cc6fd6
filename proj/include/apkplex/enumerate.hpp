#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "apkplex/signed_graph.hpp"
#include "apkplex/types.hpp"

namespace apk {

/// Six-set search state. `parity` selects which side branches first.
struct SearchNode {
  VertexSet c_l, c_r;
  VertexSet p_l, p_r;
  VertexSet q_l, q_r;
  bool parity = true;

  VertexSet& c(Side s) { return s == Side::left ? c_l : c_r; }
  VertexSet& p(Side s) { return s == Side::left ? p_l : p_r; }
  VertexSet& q(Side s) { return s == Side::left ? q_l : q_r; }
  const VertexSet& c(Side s) const { return s == Side::left ? c_l : c_r; }
  const VertexSet& p(Side s) const { return s == Side::left ? p_l : p_r; }
  const VertexSet& q(Side s) const { return s == Side::left ? q_l : q_r; }
};

/// True iff C ∪ {v}, with v placed on `side`, is still an antagonistic k-plex:
/// v is sign-consistent with every member, adjacent to every saturated member,
/// and adjacent to at least |C|+1-k members. Members of C never qualify.
bool can_extend(VertexId v, Side side, const SearchNode& node, const SignedGraph& g, int k);

/// { v ∈ x : can_extend(v, side, node) }.
VertexSet update_candidates(const VertexSet& x, Side side, const SearchNode& node, const SignedGraph& g,
                            int k);

/// Whether C_L ∪ C_R of `node` is an antagonistic k-plex with the given sides.
bool is_plex_state(const SearchNode& node, const SignedGraph& g, int k);

/// A pivot together with the side it can join.
struct Pivot {
  VertexId vertex = 0;
  Side side = Side::left;
};

/// Highest-scoring vertex of P_side ∪ Q_side, score |N+(u) ∩ P_side| + |N-(u) ∩ P_other|,
/// ties to the smallest id. nullopt when the pool is empty.
std::optional<Pivot> choose_pivot(const SearchNode& node, Side side, const SignedGraph& g);

/// Branch roots for `side` under `pivot`: P_side minus every sign-consistent
/// neighbour of the pivot (positive when on the pivot's side, negative across)
/// that shares no non-neighbour with it in C_L ∪ C_R.
VertexSet pivot_branch_set(const SearchNode& node, Side side, const Pivot& pivot, const SignedGraph& g);

struct SearchOptions {
  bool pivoting = true;
  bool early_termination = true;
  bool color_bound = true;
  bool check_nodes = false;  ///< assert node soundness at every recursion entry
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Called at every branching node with its depth and the side expanded first.
  std::function<void(std::size_t depth, Side first)> on_branch;

  static SearchOptions baseline() {
    SearchOptions o;
    o.pivoting = o.early_termination = o.color_bound = false;
    return o;
  }
  static SearchOptions without_color_bound() {
    SearchOptions o;
    o.color_bound = false;
    return o;
  }
};

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t results = 0;
  bool timed_out = false;
};

using PlexSink = std::function<void(const AntagonisticPlex&)>;

/// Recursive enumeration from `node` (ids of g). Emits canonical plexes.
/// With SearchOptions::baseline() this is the unoptimised procedure.
SearchStats sapeutil(SearchNode node, const SignedGraph& g, const Params& params, const SearchOptions& opts,
                     const PlexSink& sink);

struct EnumConfig {
  SearchOptions search;
  unsigned workers = 1;
};

struct EnumSummary {
  std::size_t results = 0;
  std::size_t nodes = 0;
  bool timed_out = false;
  std::size_t vr_removed = 0;
  std::size_t dr_candidate_total = 0;
  double vr_ms = 0;
  double dr_ms = 0;  ///< summed over workers
  double enumerate_ms = 0;
};

/// Baseline: seeds in enumeration order, candidates from signed two-hop sets,
/// no pruning. Does not reduce the graph; the run pipeline applies VR first.
EnumSummary bape(const SignedGraph& g, const Params& params, const PlexSink& sink,
                 EnumConfig cfg = {SearchOptions::baseline(), 1});

/// Optimised: VR, then per-seed dichromatic reduction and the pruned search.
/// Results are reported in the ids of `g`.
EnumSummary sape(const SignedGraph& g, const Params& params, const PlexSink& sink, EnumConfig cfg = {});

/// Collecting forms; results sorted.
std::vector<AntagonisticPlex> bape(const SignedGraph& g, const Params& params);
std::vector<AntagonisticPlex> sape(const SignedGraph& g, const Params& params, bool color_bound = true);

}  // namespace apk
