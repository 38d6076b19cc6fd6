#include "apkplex/gen.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace apk {

namespace {

// std::uniform_*_distribution output is implementation-defined, so draws are
// taken straight from the engine.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  bool coin(double p) { return unit() < p; }
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling, no modulo bias.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 rng_;
};

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void GenSpec::validate() const {
  check_probability(p_pos_in, "p_pos_in");
  check_probability(p_neg_cross, "p_neg_cross");
  check_probability(p_noise, "p_noise");
  if (planted > 0 && side == 0) throw std::invalid_argument("planted communities need side >= 1");
  if (planted * 2 * side > n) {
    throw std::invalid_argument("planted communities need " + std::to_string(planted * 2 * side) +
                                " vertices, graph has " + std::to_string(n));
  }
}

SignedGraph generate(const GenSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  Draw draw(spec.seed);

  std::vector<VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<VertexId>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw.below(i)]);

  // Block b owns perm[2*side*b ...]: first half left camp, second half right.
  constexpr int kNoBlock = -1;
  std::vector<int> block(n, kNoBlock), camp(n, 0);
  for (std::size_t b = 0; b < spec.planted; ++b) {
    for (std::size_t j = 0; j < 2 * spec.side; ++j) {
      const VertexId v = perm[2 * spec.side * b + j];
      block[v] = static_cast<int>(b);
      camp[v] = j < spec.side ? 0 : 1;
    }
  }

  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (block[u] != kNoBlock && block[u] == block[v]) {
        const bool same = camp[u] == camp[v];
        if (draw.coin(same ? spec.p_pos_in : spec.p_neg_cross)) {
          edges.push_back({u, v, same ? Sign::positive : Sign::negative});
          continue;
        }
      }
      if (draw.coin(spec.p_noise)) {
        edges.push_back({u, v, draw.coin(0.5) ? Sign::positive : Sign::negative});
      }
    }
  }
  return SignedGraph::from_edges(n, edges);
}

SignedGraph random_signed_graph(std::size_t n, double density, double negative_fraction, std::uint64_t seed) {
  check_probability(density, "density");
  check_probability(negative_fraction, "negative_fraction");
  Draw draw(seed);
  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!draw.coin(density)) continue;
      edges.push_back({u, v, draw.coin(negative_fraction) ? Sign::negative : Sign::positive});
    }
  }
  return SignedGraph::from_edges(n, edges);
}

}  // namespace apk
