#include "apkplex/colorbound.hpp"

#include <iterator>

namespace apk {

long colornum(const ColorPartition& part, int k) {
  long sum = 0;
  for (const auto& cls : part.classes) sum += std::min<long>(static_cast<long>(cls.size()), k);
  return sum;
}

ColorState color_state(const VertexSet& c_l, const VertexSet& c_r, const VertexSet& p_l,
                       const VertexSet& p_r, const SignedGraph& g, int k) {
  auto positive = [&](VertexId a, VertexId b) { return g.sign(a, b) == Sign::positive; };
  auto any = [&](VertexId a, VertexId b) { return g.adjacent(a, b); };

  VertexSet all;
  all.reserve(p_l.size() + p_r.size());
  std::set_union(p_l.begin(), p_l.end(), p_r.begin(), p_r.end(), std::back_inserter(all));

  ColorState st;
  st.left = greedy_color(p_l, positive);
  st.right = greedy_color(p_r, positive);
  st.combined = greedy_color(all, any);
  st.bounds.cd_l = colornum(st.left, k) + static_cast<long>(c_l.size());
  st.bounds.cd_r = colornum(st.right, k) + static_cast<long>(c_r.size());
  st.bounds.cd_a = colornum(st.combined, k) + static_cast<long>(c_l.size() + c_r.size());
  return st;
}

ColorBounds colornum_bounds(const VertexSet& c_l, const VertexSet& c_r, const VertexSet& p_l,
                            const VertexSet& p_r, const SignedGraph& g, int k) {
  return color_state(c_l, c_r, p_l, p_r, g, k).bounds;
}

namespace {

// Σ over classes not holding v of min(|class ∩ N(v)|, k), N filtered by `hit`.
template <typename Hit>
long class_hits(const ColorPartition& part, VertexId v, int k, Hit hit) {
  const auto own = part.class_of(v);
  long sum = 0;
  for (std::uint32_t c = 0; c < part.classes.size(); ++c) {
    if (own && *own == c) continue;
    long n = 0;
    for (VertexId u : part.classes[c]) {
      if (hit(u) && ++n == k) break;
    }
    sum += n;
  }
  return sum;
}

}  // namespace

ColorDegree color_degree(VertexId v, Side side, const ColorState& state, const VertexSet& c_l,
                         const VertexSet& c_r, const SignedGraph& g, int k) {
  const VertexSet& c_side = side == Side::left ? c_l : c_r;
  const ColorPartition& part = side == Side::left ? state.left : state.right;
  auto positive = [&](VertexId u) { return g.sign(v, u) == Sign::positive; };
  auto any = [&](VertexId u) { return g.adjacent(v, u); };

  long side_missing = 0;
  for (VertexId u : c_side) side_missing += !positive(u);
  long all_missing = 0;
  for (VertexId u : c_l) all_missing += !any(u);
  for (VertexId u : c_r) all_missing += !any(u);

  ColorDegree out;
  out.side = class_hits(part, v, k, positive) + (k - side_missing) + static_cast<long>(c_side.size());
  out.all = class_hits(state.combined, v, k, any) + (k - all_missing) +
            static_cast<long>(c_l.size() + c_r.size());
  return out;
}

}  // namespace apk
