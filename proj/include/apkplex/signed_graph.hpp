#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "apkplex/types.hpp"

namespace apk {

struct SignedEdge {
  VertexId u = 0;
  VertexId v = 0;
  Sign sign = Sign::positive;
};

/// Immutable undirected signed graph with sign-partitioned CSR adjacency.
///
/// Adjacency lists are sorted and duplicate-free, symmetric, loop-free, and no
/// pair carries both signs. Every vertex keeps the integer label it had in the
/// input so results can be reported in the caller's numbering. Small graphs
/// additionally keep a dense n x n sign table for O(1) `sign` queries; larger
/// graphs answer by binary search over the shorter adjacency list.
class SignedGraph {
 public:
  /// Graphs up to this many vertices get a dense sign table.
  static constexpr std::size_t kDenseLimit = 4096;

  SignedGraph() = default;

  /// Builds a graph over ids [0, n). Labels default to the ids themselves.
  /// Throws std::invalid_argument on out-of-range ids, self-loops, or a pair
  /// listed twice (with the same or the opposite sign).
  static SignedGraph from_edges(std::size_t n, std::span<const SignedEdge> edges,
                                std::vector<std::int64_t> labels = {});

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_positive_edges() const noexcept { return pos_.targets.size() / 2; }
  std::size_t num_negative_edges() const noexcept { return neg_.targets.size() / 2; }
  std::size_t num_edges() const noexcept { return num_positive_edges() + num_negative_edges(); }

  std::span<const VertexId> positive_neighbors(VertexId v) const noexcept { return pos_.row(v); }
  std::span<const VertexId> negative_neighbors(VertexId v) const noexcept { return neg_.row(v); }
  std::span<const VertexId> neighbors(VertexId v) const noexcept { return all_.row(v); }
  std::span<const VertexId> neighbors(VertexId v, Sign s) const noexcept {
    return s == Sign::positive ? positive_neighbors(v) : negative_neighbors(v);
  }

  std::size_t positive_degree(VertexId v) const noexcept { return pos_.row(v).size(); }
  std::size_t negative_degree(VertexId v) const noexcept { return neg_.row(v).size(); }
  std::size_t degree(VertexId v) const noexcept { return all_.row(v).size(); }
  std::size_t max_degree() const noexcept;

  /// Sign of the edge {u, v}, or Sign::none when absent (including u == v).
  Sign sign(VertexId u, VertexId v) const noexcept;
  bool adjacent(VertexId u, VertexId v) const noexcept { return sign(u, v) != Sign::none; }

  std::int64_t label(VertexId v) const noexcept { return labels_[v]; }
  std::span<const std::int64_t> labels() const noexcept { return labels_; }
  std::optional<VertexId> find_label(std::int64_t label) const;

  /// Every edge once, with u < v, ordered by (u, v).
  std::vector<SignedEdge> edges() const;

  /// Subgraph induced by `vertices` (sorted ascending); new id i is vertices[i].
  /// Labels are carried over.
  SignedGraph induced(std::span<const VertexId> vertices) const;

 private:
  struct Csr {
    std::vector<std::size_t> offsets{0};
    std::vector<VertexId> targets;
    std::span<const VertexId> row(VertexId v) const noexcept {
      return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
  };

  static Csr build_csr(std::size_t n, std::vector<std::vector<VertexId>>& lists);

  Csr pos_;
  Csr neg_;
  Csr all_;
  std::vector<std::int64_t> labels_;
  std::vector<Sign> dense_;  // row-major n x n when n <= kDenseLimit, else empty
};

struct LoadReport {
  std::size_t lines = 0;       ///< edge lines read (comments and blanks excluded)
  std::size_t duplicates = 0;  ///< exact repeats collapsed
  std::size_t conflicts = 0;   ///< pairs seen with both signs and dropped
  std::size_t self_loops = 0;  ///< loop lines dropped
};

struct LoadedGraph {
  SignedGraph graph;
  LoadReport report;
};

/// Reads "u v s" lines with s in {1, -1, +, -}; '#' starts a comment line.
/// Integer labels are remapped to dense ids in ascending label order.
/// Throws ParseError carrying the 1-based line number on malformed input.
LoadedGraph load_signed_edge_list(std::istream& in);

/// Writes the graph back as a labelled edge list ("u v +" / "u v -").
void write_signed_edge_list(std::ostream& out, const SignedGraph& g);

/// Signed two-hop sets of a vertex: N++ ∪ N-- and N-+ ∪ N+-, both without v.
/// One-hop neighbours are not filtered out.
struct TwoHopSets {
  VertexSet n2plus;
  VertexSet n2minus;
};

TwoHopSets two_hop_signed(const SignedGraph& g, VertexId v);

/// Neighbourhood of `center` split into friends (left) and foes (right), with
/// every conflicting edge removed: negative inside a side, positive across.
struct DichromaticEgo {
  VertexId center = 0;
  VertexSet left;
  VertexSet right;
  VertexSet members;    ///< left ∪ right, sorted; local id i is members[i]
  SignedGraph network;  ///< retained edges over local ids
};

DichromaticEgo dichromatic_ego(const SignedGraph& g, VertexId v);

/// Vertices by ascending min(d+, d-), ties by ascending id.
std::vector<VertexId> enumeration_order(const SignedGraph& g);

/// Inverse permutation of an order: rank[order[i]] == i.
std::vector<std::uint32_t> ranks_of(std::span<const VertexId> order);

}  // namespace apk
