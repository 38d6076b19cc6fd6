#include "apkplex/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

namespace apk {

SignedGraph::Csr SignedGraph::build_csr(std::size_t n, std::vector<std::vector<VertexId>>& lists) {
  Csr csr;
  csr.offsets.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(lists[v].begin(), lists[v].end());
    csr.offsets[v + 1] = csr.offsets[v] + lists[v].size();
  }
  csr.targets.reserve(csr.offsets[n]);
  for (auto& l : lists) csr.targets.insert(csr.targets.end(), l.begin(), l.end());
  return csr;
}

SignedGraph SignedGraph::from_edges(std::size_t n, std::span<const SignedEdge> edges,
                                    std::vector<std::int64_t> labels) {
  if (labels.empty()) {
    labels.resize(n);
    std::iota(labels.begin(), labels.end(), std::int64_t{0});
  }
  if (labels.size() != n) throw std::invalid_argument("label count does not match vertex count");

  std::vector<std::vector<VertexId>> pos(n), neg(n), all(n);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (e.sign == Sign::none) throw std::invalid_argument("edge without sign");
    auto& lists = e.sign == Sign::positive ? pos : neg;
    lists[e.u].push_back(e.v);
    lists[e.v].push_back(e.u);
    all[e.u].push_back(e.v);
    all[e.v].push_back(e.u);
  }

  SignedGraph g;
  g.labels_ = std::move(labels);
  g.pos_ = build_csr(n, pos);
  g.neg_ = build_csr(n, neg);
  g.all_ = build_csr(n, all);
  for (std::size_t v = 0; v < n; ++v) {
    auto row = g.all_.row(static_cast<VertexId>(v));
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw std::invalid_argument("multi-edge at vertex " + std::to_string(v));
    }
  }
  if (n <= kDenseLimit) {
    g.dense_.assign(n * n, Sign::none);
    for (const auto& e : edges) {
      g.dense_[std::size_t{e.u} * n + e.v] = e.sign;
      g.dense_[std::size_t{e.v} * n + e.u] = e.sign;
    }
  }
  return g;
}

std::size_t SignedGraph::max_degree() const noexcept {
  std::size_t best = 0;
  for (VertexId v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

Sign SignedGraph::sign(VertexId u, VertexId v) const noexcept {
  const std::size_t n = num_vertices();
  if (!dense_.empty()) return dense_[std::size_t{u} * n + v];
  if (degree(u) > degree(v)) std::swap(u, v);
  auto p = positive_neighbors(u);
  if (std::binary_search(p.begin(), p.end(), v)) return Sign::positive;
  auto q = negative_neighbors(u);
  if (std::binary_search(q.begin(), q.end(), v)) return Sign::negative;
  return Sign::none;
}

std::optional<VertexId> SignedGraph::find_label(std::int64_t label) const {
  // Ids are assigned in ascending label order by the loader, but induced
  // subgraphs and hand-built graphs need not be sorted.
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v, sign(u, v)});
    }
  }
  return out;
}

SignedGraph SignedGraph::induced(std::span<const VertexId> vertices) const {
  const std::size_t m = vertices.size();
  std::vector<SignedEdge> local;
  std::vector<std::int64_t> labels(m);
  for (std::size_t i = 0; i < m; ++i) {
    const VertexId u = vertices[i];
    labels[i] = labels_[u];
    for (Sign s : {Sign::positive, Sign::negative}) {
      // Merge-walk the sorted row against the sorted member list.
      auto row = neighbors(u, s);
      auto it = vertices.begin() + static_cast<std::ptrdiff_t>(i) + 1;
      for (VertexId w : row) {
        if (w <= u) continue;
        it = std::lower_bound(it, vertices.end(), w);
        if (it == vertices.end()) break;
        if (*it == w) {
          local.push_back({static_cast<VertexId>(i), static_cast<VertexId>(it - vertices.begin()), s});
        }
      }
    }
  }
  return from_edges(m, local, std::move(labels));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<std::int64_t> parse_label(std::string_view tok) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

std::optional<Sign> parse_sign(std::string_view tok) {
  if (tok == "+" || tok == "1" || tok == "+1") return Sign::positive;
  if (tok == "-" || tok == "-1") return Sign::negative;
  return std::nullopt;
}

}  // namespace

LoadedGraph load_signed_edge_list(std::istream& in) {
  struct RawEdge {
    std::int64_t a, b;
    Sign sign;
  };
  std::vector<RawEdge> raw;
  std::vector<std::int64_t> labels;
  LoadReport report;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::string_view toks[3];
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
      const auto start = body.find_first_not_of(" \t", pos);
      if (start == std::string_view::npos) break;
      auto end = body.find_first_of(" \t", start);
      if (end == std::string_view::npos) end = body.size();
      if (count == 3) throw ParseError(lineno, "expected 3 tokens, found more");
      toks[count++] = body.substr(start, end - start);
      pos = end;
    }
    if (count != 3) throw ParseError(lineno, "expected 3 tokens, found " + std::to_string(count));

    auto a = parse_label(toks[0]);
    auto b = parse_label(toks[1]);
    if (!a || !b) throw ParseError(lineno, "unparsable vertex id");
    auto s = parse_sign(toks[2]);
    if (!s) throw ParseError(lineno, "unparsable sign '" + std::string(toks[2]) + "'");

    ++report.lines;
    labels.push_back(*a);
    labels.push_back(*b);
    if (*a == *b) {
      ++report.self_loops;
      continue;
    }
    raw.push_back({std::min(*a, *b), std::max(*a, *b), *s});
  }

  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto id_of = [&](std::int64_t label) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };

  std::sort(raw.begin(), raw.end(), [](const RawEdge& x, const RawEdge& y) {
    return std::tie(x.a, x.b, x.sign) < std::tie(y.a, y.b, y.sign);
  });

  std::vector<SignedEdge> edges;
  for (std::size_t i = 0; i < raw.size();) {
    std::size_t j = i;
    bool pos = false, neg = false;
    while (j < raw.size() && raw[j].a == raw[i].a && raw[j].b == raw[i].b) {
      (raw[j].sign == Sign::positive ? pos : neg) = true;
      ++j;
    }
    const std::size_t copies = j - i;
    if (pos && neg) {
      ++report.conflicts;
      report.duplicates += copies - 2;
    } else {
      report.duplicates += copies - 1;
      edges.push_back({id_of(raw[i].a), id_of(raw[i].b), raw[i].sign});
    }
    i = j;
  }

  const std::size_t n = labels.size();
  return {SignedGraph::from_edges(n, edges, std::move(labels)), report};
}

void write_signed_edge_list(std::ostream& out, const SignedGraph& g) {
  for (const auto& e : g.edges()) {
    out << g.label(e.u) << ' ' << g.label(e.v) << ' ' << (e.sign == Sign::positive ? '+' : '-') << '\n';
  }
}

TwoHopSets two_hop_signed(const SignedGraph& g, VertexId v) {
  TwoHopSets out;
  for (VertexId w : g.positive_neighbors(v)) {
    for (VertexId x : g.positive_neighbors(w)) out.n2plus.push_back(x);
    for (VertexId x : g.negative_neighbors(w)) out.n2minus.push_back(x);
  }
  for (VertexId w : g.negative_neighbors(v)) {
    for (VertexId x : g.negative_neighbors(w)) out.n2plus.push_back(x);
    for (VertexId x : g.positive_neighbors(w)) out.n2minus.push_back(x);
  }
  for (auto* set : {&out.n2plus, &out.n2minus}) {
    std::sort(set->begin(), set->end());
    set->erase(std::unique(set->begin(), set->end()), set->end());
    set->erase(std::remove(set->begin(), set->end(), v), set->end());
  }
  return out;
}

DichromaticEgo dichromatic_ego(const SignedGraph& g, VertexId v) {
  DichromaticEgo ego;
  ego.center = v;
  auto pos = g.positive_neighbors(v);
  auto neg = g.negative_neighbors(v);
  ego.left.assign(pos.begin(), pos.end());
  ego.right.assign(neg.begin(), neg.end());
  auto nb = g.neighbors(v);
  ego.members.assign(nb.begin(), nb.end());

  auto local_of = [&](VertexId u) {
    return static_cast<VertexId>(std::lower_bound(ego.members.begin(), ego.members.end(), u) -
                                 ego.members.begin());
  };
  auto is_left = [&](VertexId u) { return std::binary_search(ego.left.begin(), ego.left.end(), u); };

  std::vector<SignedEdge> kept;
  std::vector<std::int64_t> labels;
  labels.reserve(ego.members.size());
  for (VertexId a : ego.members) {
    labels.push_back(g.label(a));
    const bool a_left = is_left(a);
    for (VertexId b : g.neighbors(a)) {
      if (b <= a || !std::binary_search(ego.members.begin(), ego.members.end(), b)) continue;
      const Sign s = g.sign(a, b);
      const bool same_side = a_left == is_left(b);
      // Keep positive edges inside a side and negative edges across sides.
      if ((s == Sign::positive) == same_side) kept.push_back({local_of(a), local_of(b), s});
    }
  }
  ego.network = SignedGraph::from_edges(ego.members.size(), kept, std::move(labels));
  return ego;
}

std::vector<VertexId> enumeration_order(const SignedGraph& g) {
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), VertexId{0});
  auto key = [&](VertexId v) { return std::min(g.positive_degree(v), g.negative_degree(v)); };
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return key(a) < key(b); });
  return order;
}

std::vector<std::uint32_t> ranks_of(std::span<const VertexId> order) {
  std::vector<std::uint32_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<std::uint32_t>(i);
  return rank;
}

}  // namespace apk
