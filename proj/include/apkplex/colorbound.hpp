#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apkplex/signed_graph.hpp"
#include "apkplex/types.hpp"

namespace apk {

/// Disjoint independent classes over a vertex set.
struct ColorPartition {
  std::vector<VertexSet> classes;
  VertexSet vertices;                ///< colored vertices, ascending
  std::vector<std::uint32_t> color;  ///< color[i] is the class of vertices[i]

  std::optional<std::uint32_t> class_of(VertexId v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) return std::nullopt;
    return color[static_cast<std::size_t>(it - vertices.begin())];
  }
};

/// Greedy coloring in ascending id order: each vertex takes the smallest class
/// holding none of its neighbours under `adjacent`.
template <typename Adjacent>
ColorPartition greedy_color(std::span<const VertexId> vertices, Adjacent&& adjacent) {
  ColorPartition part;
  part.vertices.assign(vertices.begin(), vertices.end());
  std::sort(part.vertices.begin(), part.vertices.end());
  part.vertices.erase(std::unique(part.vertices.begin(), part.vertices.end()), part.vertices.end());
  part.color.reserve(part.vertices.size());
  for (VertexId v : part.vertices) {
    std::uint32_t c = 0;
    for (; c < part.classes.size(); ++c) {
      const auto& cls = part.classes[c];
      if (std::none_of(cls.begin(), cls.end(), [&](VertexId u) { return adjacent(u, v); })) break;
    }
    if (c == part.classes.size()) part.classes.emplace_back();
    part.classes[c].push_back(v);
    part.color.push_back(c);
  }
  return part;
}

/// Colornum upper bounds on the left side, the right side and the whole plex.
struct ColorBounds {
  long cd_l = 0;
  long cd_r = 0;
  long cd_a = 0;
};

/// The three partitions a search node is bounded with: P_L and P_R under
/// positive edges, P_L ∪ P_R under all edges.
struct ColorState {
  ColorPartition left;
  ColorPartition right;
  ColorPartition combined;
  ColorBounds bounds;
};

/// Σ_j min(|class_j|, k).
long colornum(const ColorPartition& part, int k);

ColorState color_state(const VertexSet& c_l, const VertexSet& c_r, const VertexSet& p_l,
                       const VertexSet& p_r, const SignedGraph& g, int k);

ColorBounds colornum_bounds(const VertexSet& c_l, const VertexSet& c_r, const VertexSet& p_l,
                            const VertexSet& p_r, const SignedGraph& g, int k);

/// Per-vertex bounds for moving candidate `v` into `side`.
struct ColorDegree {
  long side = 0;  ///< cd^L_v or cd^R_v
  long all = 0;   ///< cd^A_v
};

ColorDegree color_degree(VertexId v, Side side, const ColorState& state, const VertexSet& c_l,
                         const VertexSet& c_r, const SignedGraph& g, int k);

}  // namespace apk
