#include "apkplex/preprocess.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace apk {

namespace {

// Degree-peeling core shared by VR and the one-hop rule: `pos` and `neg`
// are the per-vertex degrees, `violates` decides removal.
template <typename Graph, typename Violates>
std::vector<char> peel(const Graph& g, std::span<const VertexId> scan_order, Violates violates,
                       std::vector<long>& pos, std::vector<long>& neg, std::size_t* edge_visits) {
  const std::size_t n = g.num_vertices();
  std::vector<char> removed(n, 0), queued(n, 0);
  std::deque<VertexId> queue;
  for (VertexId v : scan_order) {
    if (violates(pos[v], neg[v])) {
      queued[v] = 1;
      queue.push_back(v);
    }
  }
  std::size_t visits = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    removed[v] = 1;
    for (Sign s : {Sign::positive, Sign::negative}) {
      auto& deg = s == Sign::positive ? pos : neg;
      for (VertexId u : g.neighbors(v, s)) {
        ++visits;
        if (removed[u]) continue;
        --deg[u];
        if (!queued[u] && violates(pos[u], neg[u])) {
          queued[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  if (edge_visits) *edge_visits = visits;
  return removed;
}

}  // namespace

VertexSet vertex_reduction_survivors(const SignedGraph& g, const Params& params,
                                     std::span<const VertexId> scan_order,
                                     std::size_t* edge_visits) {
  params.validate();
  const long k = params.k, t = params.t;
  const std::size_t n = g.num_vertices();
  std::vector<long> pos(n), neg(n);
  for (VertexId v = 0; v < n; ++v) {
    pos[v] = static_cast<long>(g.positive_degree(v));
    neg[v] = static_cast<long>(g.negative_degree(v));
  }
  auto violates = [&](long dp, long dn) { return dp < t - k || dn < t - k + 1 || dp + dn < 2 * t - k; };
  auto removed = peel(g, scan_order, violates, pos, neg, edge_visits);

  VertexSet survivors;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) survivors.push_back(v);
  }
  return survivors;
}

ReducedGraph vertex_reduction(const SignedGraph& g, const Params& params) {
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), VertexId{0});
  ReducedGraph out;
  out.report.original_n = g.num_vertices();
  out.report.survivors = vertex_reduction_survivors(g, params, order, &out.report.edge_visits);
  out.report.removed_vr = g.num_vertices() - out.report.survivors.size();
  out.graph = g.induced(out.report.survivors);
  return out;
}

OneHopCandidates dichromatic_onehop(const SignedGraph& g, VertexId seed, const Params& params) {
  const long k = params.k, t = params.t;
  const DichromaticEgo ego = dichromatic_ego(g, seed);
  const SignedGraph& net = ego.network;
  const std::size_t m = net.num_vertices();

  std::vector<long> pos(m), neg(m);
  for (VertexId v = 0; v < m; ++v) {
    pos[v] = static_cast<long>(net.positive_degree(v));
    neg[v] = static_cast<long>(net.negative_degree(v));
  }
  std::vector<VertexId> order(m);
  std::iota(order.begin(), order.end(), VertexId{0});
  auto violates = [&](long dp, long dn) { return dp < t - 2 * k || dp + dn < 2 * t - 2 * k; };
  auto removed = peel(net, order, violates, pos, neg, nullptr);

  OneHopCandidates out;
  for (VertexId i = 0; i < m; ++i) {
    if (removed[i]) continue;
    const VertexId v = ego.members[i];
    (std::binary_search(ego.left.begin(), ego.left.end(), v) ? out.l1 : out.r1).push_back(v);
  }
  return out;
}

namespace {

VertexSet sorted_unique(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t count_of(const VertexSet& sorted, VertexId v) {
  auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), v);
  return static_cast<std::size_t>(hi - lo);
}

}  // namespace

HopCandidates dichromatic_twohop(const SignedGraph& g, VertexId seed, const VertexSet& l1,
                                 const VertexSet& r1, const Params& params) {
  const long k = params.k, t = params.t;
  HopCandidates out;
  out.l1 = l1;
  out.r1 = r1;

  // Multisets of hits: same-side hits feed `a`, cross hits feed `b`.
  VertexSet left_a, left_b, right_a, right_b;
  for (VertexId u : l1) {
    for (VertexId w : g.positive_neighbors(u)) left_a.push_back(w);
    for (VertexId w : g.negative_neighbors(u)) right_b.push_back(w);
  }
  for (VertexId u : r1) {
    for (VertexId w : g.positive_neighbors(u)) right_a.push_back(w);
    for (VertexId w : g.negative_neighbors(u)) left_b.push_back(w);
  }
  for (auto* v : {&left_a, &left_b, &right_a, &right_b}) std::sort(v->begin(), v->end());

  VertexSet l2 = left_a;
  l2.insert(l2.end(), left_b.begin(), left_b.end());
  out.l2 = sorted_unique(std::move(l2));
  VertexSet r2 = right_a;
  r2.insert(r2.end(), right_b.begin(), right_b.end());
  out.r2 = sorted_unique(std::move(r2));

  auto far = [&](VertexId w) { return w != seed && !g.adjacent(seed, w); };
  auto qualifies = [&](std::size_t a, std::size_t b) {
    const long la = static_cast<long>(a), lb = static_cast<long>(b);
    return la >= t - 2 * k + 2 && la + lb >= 2 * t - 2 * k + 2;
  };

  for (VertexId w : out.l2) {
    if (far(w) && qualifies(count_of(left_a, w), count_of(left_b, w))) out.ln.push_back(w);
  }
  for (VertexId w : out.r2) {
    if (far(w) && qualifies(count_of(right_a, w), count_of(right_b, w))) out.rn.push_back(w);
  }
  out.ln.insert(out.ln.end(), l1.begin(), l1.end());
  out.rn.insert(out.rn.end(), r1.begin(), r1.end());
  out.ln = sorted_unique(std::move(out.ln));
  out.rn = sorted_unique(std::move(out.rn));
  return out;
}

HopCandidates dichromatic_reduction(const SignedGraph& g, VertexId seed, const Params& params) {
  auto one = dichromatic_onehop(g, seed, params);
  return dichromatic_twohop(g, seed, one.l1, one.r1, params);
}

}  // namespace apk
