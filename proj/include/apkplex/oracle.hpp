#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apkplex/signed_graph.hpp"
#include "apkplex/types.hpp"

namespace apk {

/// Ground truth for small graphs. Everything here is deliberately naive and
/// shares no code with the search engines.

class OracleLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Largest graph the subset scans accept.
inline constexpr std::size_t kOracleMaxVertices = 20;

enum class EdgeFilter { all, positive_only };

/// Every member has at least |s| - k neighbours inside s under `filter`.
bool is_kplex(std::span<const VertexId> s, const SignedGraph& g, int k, EdgeFilter filter);

/// 2-colouring of s where positive edges join equal colours and negative edges
/// join different ones; each component's smallest vertex goes left.
std::optional<std::pair<VertexSet, VertexSet>> antagonistic_bipartition(std::span<const VertexId> s,
                                                                        const SignedGraph& g);

/// All qualified maximal antagonistic k-plexes by scanning every subset.
/// Throws OracleLimitError when n > kOracleMaxVertices.
std::vector<AntagonisticPlex> enumerate_bruteforce(const SignedGraph& g, const Params& params);

/// Second, independently coded oracle: lists every antagonistic k-plex by
/// trying all side assignments, then keeps those with no valid strict superset.
std::vector<AntagonisticPlex> enumerate_bruteforce_supersets(const SignedGraph& g, const Params& params);

enum class Violation {
  none,
  overlapping_sides,
  negative_edge_inside_side,
  positive_edge_across_sides,
  side_not_kplex,
  not_kplex,
  not_maximal,
  side_too_small,
  not_canonical,
  diameter_exceeds_two,
};

const char* to_string(Violation v);

struct PlexCheck {
  Violation violation = Violation::none;
  std::string detail;
  explicit operator bool() const noexcept { return violation == Violation::none; }
};

/// Checks structure, maximality against all of g, side sizes, orientation and
/// diameter, in that order, and reports the first failure.
PlexCheck validate_plex(const AntagonisticPlex& p, const SignedGraph& g, const Params& params);

}  // namespace apk
