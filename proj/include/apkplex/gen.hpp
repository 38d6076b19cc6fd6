#pragma once

#include <cstddef>
#include <cstdint>

#include "apkplex/signed_graph.hpp"

namespace apk {

/// Synthetic signed graph with planted antagonistic communities.
///
/// `planted` disjoint blocks of 2 * side vertices are drawn at random; inside a
/// block each same-camp pair gets a positive edge with probability p_pos_in and
/// each cross-camp pair a negative edge with probability p_neg_cross. Every
/// remaining pair gets a noise edge with probability p_noise and a fair random
/// sign. Labels are 0..n-1.
struct GenSpec {
  std::size_t n = 0;
  std::size_t planted = 0;
  std::size_t side = 0;
  double p_pos_in = 1.0;
  double p_neg_cross = 1.0;
  double p_noise = 0.0;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on probabilities outside [0, 1] or when the
  /// planted blocks do not fit into n vertices.
  void validate() const;
};

/// Deterministic for a fixed spec on every platform.
SignedGraph generate(const GenSpec& spec);

/// Erdos-Renyi style graph: each pair is an edge with probability `density`,
/// negative with probability `negative_fraction`.
SignedGraph random_signed_graph(std::size_t n, double density, double negative_fraction, std::uint64_t seed);

}  // namespace apk
