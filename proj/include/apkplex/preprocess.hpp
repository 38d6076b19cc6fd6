#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "apkplex/signed_graph.hpp"
#include "apkplex/types.hpp"

namespace apk {

struct ReductionReport {
  std::size_t original_n = 0;
  std::size_t removed_vr = 0;
  VertexSet survivors;  ///< ids in the input graph; reduced id i is survivors[i]
  /// |Ln| + |Rn| per reduced seed id, filled only by drivers that run DR.
  std::vector<std::size_t> per_seed_candidates;
  std::size_t edge_visits = 0;  ///< adjacency entries touched while peeling
};

struct ReducedGraph {
  SignedGraph graph;
  ReductionReport report;
};

/// Degree peeling: repeatedly deletes every vertex with d+ < t-k, d- < t-k+1
/// or d < 2t-k until none is left. Throws ParamError on invalid params.
ReducedGraph vertex_reduction(const SignedGraph& g, const Params& params);

/// Survivor set of the same peeling, with the initial scan (and so the queue
/// order) following `scan_order`. The result does not depend on the order.
VertexSet vertex_reduction_survivors(const SignedGraph& g, const Params& params,
                                     std::span<const VertexId> scan_order,
                                     std::size_t* edge_visits = nullptr);

struct OneHopCandidates {
  VertexSet l1;
  VertexSet r1;
};

/// Peels the dichromatic ego network of `seed`: a member goes when its
/// positive degree drops below t-2k or its total degree below 2t-2k, degrees
/// measured in the shrinking network.
OneHopCandidates dichromatic_onehop(const SignedGraph& g, VertexId seed, const Params& params);

struct HopCandidates {
  VertexSet l1, r1;  ///< surviving one-hop friends / foes
  VertexSet l2, r2;  ///< raw two-hop friend / foe candidates
  VertexSet ln, rn;  ///< final friend / foe candidates (two-hop survivors ∪ one-hop)
};

/// Two-hop filter on top of a one-hop result. A two-hop vertex w joins ln when
/// a = |N+(w) ∩ l1| >= t-2k+2 and a + |N-(w) ∩ r1| >= 2t-2k+2 (mirrored for rn).
HopCandidates dichromatic_twohop(const SignedGraph& g, VertexId seed, const VertexSet& l1,
                                 const VertexSet& r1, const Params& params);

/// One-hop followed by two-hop.
HopCandidates dichromatic_reduction(const SignedGraph& g, VertexId seed, const Params& params);

}  // namespace apk
