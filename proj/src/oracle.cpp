#include "apkplex/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>

namespace apk {

bool is_kplex(std::span<const VertexId> s, const SignedGraph& g, int k, EdgeFilter filter) {
  const long need = static_cast<long>(s.size()) - k;
  for (VertexId v : s) {
    long d = 0;
    for (VertexId u : s) {
      const Sign sg = g.sign(u, v);
      d += filter == EdgeFilter::all ? sg != Sign::none : sg == Sign::positive;
    }
    if (d < need) return false;
  }
  return true;
}

std::optional<std::pair<VertexSet, VertexSet>> antagonistic_bipartition(std::span<const VertexId> s,
                                                                        const SignedGraph& g) {
  VertexSet members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  std::map<VertexId, int> color;
  VertexSet left, right;
  for (VertexId root : members) {
    if (color.contains(root)) continue;
    color[root] = 0;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (VertexId w : members) {
        const Sign sg = g.sign(u, w);
        if (sg == Sign::none) continue;
        const int want = sg == Sign::positive ? color[u] : 1 - color[u];
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = want;
          queue.push_back(w);
        } else if (it->second != want) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v : members) (color[v] == 0 ? left : right).push_back(v);
  return std::make_pair(std::move(left), std::move(right));
}

namespace {

using Mask = std::uint32_t;

struct MaskGraph {
  std::size_t n = 0;
  std::vector<Mask> pos, neg;

  explicit MaskGraph(const SignedGraph& g) : n(g.num_vertices()), pos(n, 0), neg(n, 0) {
    if (n > kOracleMaxVertices) {
      throw OracleLimitError("brute-force oracle refuses graphs with more than " +
                             std::to_string(kOracleMaxVertices) + " vertices (got " + std::to_string(n) + ")");
    }
    for (const auto& e : g.edges()) {
      auto& m = e.sign == Sign::positive ? pos : neg;
      m[e.u] |= Mask{1} << e.v;
      m[e.v] |= Mask{1} << e.u;
    }
  }
};

VertexSet to_set(Mask m) {
  VertexSet out;
  for (VertexId v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

// Left side of the bipartition of `s`, or nullopt when unbalanced.
std::optional<Mask> balance(const MaskGraph& mg, Mask s) {
  Mask left = 0, seen = 0;
  while (seen != s) {
    const int root = std::countr_zero(s & ~seen);
    Mask frontier = Mask{1} << root;
    left |= frontier;
    seen |= frontier;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const bool u_left = (left >> u) & 1;
      const Mask same = mg.pos[u] & s, diff = mg.neg[u] & s;
      const Mask want_left = u_left ? same : diff;
      const Mask want_right = u_left ? diff : same;
      if ((want_left & seen & ~left) || (want_right & seen & left)) return std::nullopt;
      const Mask fresh = (same | diff) & ~seen;
      left |= want_left & fresh;
      seen |= fresh;
      frontier |= fresh;
    }
  }
  return left;
}

bool kplex_mask(const MaskGraph& mg, Mask s, int k, bool positive_only) {
  const int need = std::popcount(s) - k;
  for (Mask m = s; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    const Mask nb = positive_only ? mg.pos[v] : (mg.pos[v] | mg.neg[v]);
    if (std::popcount(nb & s) < need) return false;
  }
  return true;
}

// Antagonistic k-plex test; returns the left side when it passes.
std::optional<Mask> antagonistic(const MaskGraph& mg, Mask s, int k) {
  if (!kplex_mask(mg, s, k, false)) return std::nullopt;
  auto left = balance(mg, s);
  if (!left) return std::nullopt;
  if (!kplex_mask(mg, *left, k, true) || !kplex_mask(mg, s & ~*left, k, true)) return std::nullopt;
  return left;
}

}  // namespace

std::vector<AntagonisticPlex> enumerate_bruteforce(const SignedGraph& g, const Params& params) {
  params.validate();
  const MaskGraph mg(g);
  const Mask full = mg.n == 32 ? ~Mask{0} : (Mask{1} << mg.n) - 1;
  std::vector<AntagonisticPlex> out;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    auto left = antagonistic(mg, s, params.k);
    if (!left) continue;
    const Mask right = s & ~*left;
    if (std::popcount(*left) < params.t || std::popcount(right) < params.t) continue;
    bool maximal = true;
    for (Mask rest = full & ~s; rest && maximal; rest &= rest - 1) {
      const Mask bigger = s | (rest & -rest);
      if (antagonistic(mg, bigger, params.k)) maximal = false;
    }
    if (maximal) out.push_back(canonicalize(to_set(*left), to_set(right)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AntagonisticPlex> enumerate_bruteforce_supersets(const SignedGraph& g, const Params& params) {
  params.validate();
  const std::size_t n = g.num_vertices();
  if (n > kOracleMaxVertices) throw OracleLimitError("brute-force oracle refuses large graphs");

  // Dense adjacency matrix recount, independent of the mask helpers above.
  std::vector<std::vector<int>> sign(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges()) {
    const int s = e.sign == Sign::positive ? 1 : -1;
    sign[e.u][e.v] = sign[e.v][e.u] = s;
  }

  struct Valid {
    std::uint64_t members;
    std::uint64_t left;
  };
  std::vector<Valid> valid;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<int> ids;
    for (int v = 0; v < static_cast<int>(n); ++v) {
      if (s >> v & 1) ids.push_back(v);
    }
    const int size = static_cast<int>(ids.size());
    bool kplex = true;
    for (int a : ids) {
      int d = 0;
      for (int b : ids) d += sign[a][b] != 0;
      if (d < size - params.k) kplex = false;
    }
    if (!kplex) continue;
    // ids[0] is pinned to the left; try every assignment of the rest.
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << (size - 1)); ++assign) {
      auto on_left = [&](int i) { return i == 0 || !((assign >> (i - 1)) & 1); };
      bool ok = true;
      for (int i = 0; i < size && ok; ++i) {
        for (int j = i + 1; j < size && ok; ++j) {
          const int sg = sign[ids[i]][ids[j]];
          if (sg == 0) continue;
          ok = (sg == 1) == (on_left(i) == on_left(j));
        }
      }
      if (!ok) continue;
      std::uint64_t left = 0;
      for (int i = 0; i < size; ++i) {
        if (on_left(i)) left |= std::uint64_t{1} << ids[i];
      }
      valid.push_back({s, left});
      break;
    }
  }

  std::vector<AntagonisticPlex> out;
  for (const auto& a : valid) {
    const auto right = a.members & ~a.left;
    if (std::popcount(a.left) < params.t || std::popcount(right) < params.t) continue;
    const bool dominated = std::any_of(valid.begin(), valid.end(), [&](const Valid& b) {
      return b.members != a.members && (b.members & a.members) == a.members;
    });
    if (dominated) continue;
    VertexSet l, r;
    for (VertexId v = 0; v < n; ++v) {
      if (a.left >> v & 1) l.push_back(v);
      if (right >> v & 1) r.push_back(v);
    }
    out.push_back(canonicalize(std::move(l), std::move(r)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::overlapping_sides: return "overlapping sides";
    case Violation::negative_edge_inside_side: return "negative edge inside a side";
    case Violation::positive_edge_across_sides: return "positive edge across sides";
    case Violation::side_not_kplex: return "side is not a positive k-plex";
    case Violation::not_kplex: return "not a k-plex";
    case Violation::not_maximal: return "not maximal";
    case Violation::side_too_small: return "side smaller than t";
    case Violation::not_canonical: return "not canonical";
    case Violation::diameter_exceeds_two: return "diameter exceeds two";
  }
  return "unknown";
}

PlexCheck validate_plex(const AntagonisticPlex& p, const SignedGraph& g, const Params& params) {
  auto fail = [](Violation v, std::string detail) { return PlexCheck{v, std::move(detail)}; };
  const int k = params.k;

  VertexSet all;
  std::set_union(p.left.begin(), p.left.end(), p.right.begin(), p.right.end(), std::back_inserter(all));
  if (all.size() != p.size()) return fail(Violation::overlapping_sides, "a vertex is on both sides");
  for (VertexId v : all) {
    if (v >= g.num_vertices()) return fail(Violation::overlapping_sides, "vertex out of range");
  }

  for (const VertexSet* side : {&p.left, &p.right}) {
    for (VertexId a : *side) {
      for (VertexId b : *side) {
        if (a < b && g.sign(a, b) == Sign::negative) {
          return fail(Violation::negative_edge_inside_side,
                      std::to_string(g.label(a)) + "-" + std::to_string(g.label(b)));
        }
      }
    }
  }
  for (VertexId a : p.left) {
    for (VertexId b : p.right) {
      if (g.sign(a, b) == Sign::positive) {
        return fail(Violation::positive_edge_across_sides,
                    std::to_string(g.label(a)) + "-" + std::to_string(g.label(b)));
      }
    }
  }
  if (!is_kplex(p.left, g, k, EdgeFilter::positive_only) || !is_kplex(p.right, g, k, EdgeFilter::positive_only)) {
    return fail(Violation::side_not_kplex, {});
  }
  if (!is_kplex(all, g, k, EdgeFilter::all)) return fail(Violation::not_kplex, {});

  // A vertex extending the plex needs |S| - k + 1 neighbours in it, so only
  // neighbours of members qualify once |S| >= k.
  VertexSet outside;
  if (static_cast<int>(all.size()) < k) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) outside.push_back(v);
  } else {
    for (VertexId u : all) {
      for (VertexId v : g.neighbors(u)) outside.push_back(v);
    }
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  }
  for (VertexId v : outside) {
    if (std::binary_search(all.begin(), all.end(), v)) continue;
    VertexSet bigger = all;
    bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
    if (!is_kplex(bigger, g, k, EdgeFilter::all)) continue;
    auto parts = antagonistic_bipartition(bigger, g);
    if (!parts) continue;
    if (is_kplex(parts->first, g, k, EdgeFilter::positive_only) &&
        is_kplex(parts->second, g, k, EdgeFilter::positive_only)) {
      return fail(Violation::not_maximal, "extended by " + std::to_string(g.label(v)));
    }
  }

  if (static_cast<int>(p.left.size()) < params.t || static_cast<int>(p.right.size()) < params.t) {
    return fail(Violation::side_too_small, {});
  }
  if (!std::is_sorted(p.left.begin(), p.left.end()) || !std::is_sorted(p.right.begin(), p.right.end()) ||
      p.left.empty() || (!p.right.empty() && p.right.front() < p.left.front())) {
    return fail(Violation::not_canonical, {});
  }

  for (VertexId a : all) {
    for (VertexId b : all) {
      if (a >= b || g.adjacent(a, b)) continue;
      const bool common = std::any_of(all.begin(), all.end(),
                                      [&](VertexId c) { return g.adjacent(a, c) && g.adjacent(b, c); });
      if (!common) {
        return fail(Violation::diameter_exceeds_two,
                    std::to_string(g.label(a)) + " and " + std::to_string(g.label(b)));
      }
    }
  }
  return {};
}

}  // namespace apk
