#pragma once

// Shared helpers for the test binaries.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "apkplex/enumerate.hpp"
#include "apkplex/gen.hpp"
#include "apkplex/oracle.hpp"
#include "apkplex/preprocess.hpp"
#include "apkplex/run.hpp"

namespace apk::testing {

struct Instance {
  std::string name;
  SignedGraph g;
  Params params;
};

/// Random small graphs over the grid n in [6,12], density {0.2,0.4,0.6},
/// negative fraction {0.3,0.5}, k in {1,2,3}, t in {2k-1, 2k}.
inline std::vector<Instance> small_suite(std::size_t count = 504, std::uint64_t base_seed = 1000) {
  const double densities[] = {0.2, 0.4, 0.6};
  const double negatives[] = {0.3, 0.5};
  std::vector<Instance> out;
  std::size_t i = 0;
  while (out.size() < count) {
    for (double d : densities) {
      for (double q : negatives) {
        for (int k = 1; k <= 3; ++k) {
          for (int t : {2 * k - 1, 2 * k}) {
            if (out.size() == count) return out;
            const std::size_t n = 6 + (i % 7);
            const std::uint64_t seed = base_seed + i;
            std::ostringstream name;
            name << "n=" << n << " d=" << d << " neg=" << q << " k=" << k << " t=" << t << " seed=" << seed;
            out.push_back({name.str(), random_signed_graph(n, d, q, seed), Params::make(k, t)});
            ++i;
          }
        }
      }
    }
  }
  return out;
}

inline RunResult run_algo(const SignedGraph& g, const Params& params, Algo algo, unsigned workers = 1) {
  RunOptions opts;
  opts.params = params;
  opts.algo = algo;
  opts.workers = workers;
  return run(g, opts);
}

inline std::string render(const std::vector<AntagonisticPlex>& ps, const SignedGraph& g) {
  std::ostringstream out;
  write_plexes(out, ps, g);
  return out.str();
}

inline bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

/// Members of oracle results deleted by VR.
inline std::size_t vr_violations(const SignedGraph& g, const Params& params,
                                 const std::vector<AntagonisticPlex>& truth) {
  const auto reduced = vertex_reduction(g, params);
  std::size_t bad = 0;
  for (const auto& p : truth) {
    for (const VertexSet* side : {&p.left, &p.right}) {
      for (VertexId v : *side) bad += !contains(reduced.report.survivors, v);
    }
  }
  return bad;
}

/// (seed, member) pairs of oracle results missing from the DR candidates of the
/// result's earliest vertex in enumeration order, with the seed's side as left.
/// DR runs on the VR-reduced graph, as in the optimised pipeline.
inline std::size_t dr_violations(const SignedGraph& g, const Params& params,
                                 const std::vector<AntagonisticPlex>& truth) {
  const auto reduced = vertex_reduction(g, params);
  const auto& survivors = reduced.report.survivors;
  const auto rank = ranks_of(enumeration_order(reduced.graph));
  auto local = [&](VertexId v) {
    return static_cast<VertexId>(std::lower_bound(survivors.begin(), survivors.end(), v) - survivors.begin());
  };
  std::size_t bad = 0;
  for (const auto& p : truth) {
    VertexSet l, r;
    bool vr_gap = false;
    for (VertexId v : p.left) vr_gap |= !contains(survivors, v), l.push_back(local(v));
    for (VertexId v : p.right) vr_gap |= !contains(survivors, v), r.push_back(local(v));
    if (vr_gap) continue;  // counted by vr_violations
    VertexId seed = l.front();
    for (const VertexSet* side : {&l, &r}) {
      for (VertexId v : *side) {
        if (rank[v] < rank[seed]) seed = v;
      }
    }
    if (!contains(l, seed)) std::swap(l, r);
    const auto hop = dichromatic_reduction(reduced.graph, seed, params);
    for (VertexId v : l) bad += v != seed && !contains(hop.ln, v);
    for (VertexId v : r) bad += !contains(hop.rn, v);
  }
  return bad;
}

inline std::size_t duplicate_count(std::vector<AntagonisticPlex> ps) {
  std::sort(ps.begin(), ps.end());
  return ps.size() - static_cast<std::size_t>(std::unique(ps.begin(), ps.end()) - ps.begin());
}

}  // namespace apk::testing
