#include "apkplex/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "apkplex/colorbound.hpp"
#include "apkplex/preprocess.hpp"

namespace apk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

void insert_sorted(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

void erase_sorted(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it != s.end() && *it == v) s.erase(it);
}

// saturated[i] marks C_L[i] (resp. C_R[i]) with d_C(u) = |C| - k.
struct Saturation {
  std::vector<char> left;
  std::vector<char> right;
};

Saturation saturation_of(const SearchNode& node, const SignedGraph& g, int k) {
  const long size = static_cast<long>(node.c_l.size() + node.c_r.size());
  auto degree_in_c = [&](VertexId u) {
    long d = 0;
    for (VertexId w : node.c_l) d += g.adjacent(u, w);
    for (VertexId w : node.c_r) d += g.adjacent(u, w);
    return d;
  };
  Saturation sat;
  sat.left.reserve(node.c_l.size());
  sat.right.reserve(node.c_r.size());
  for (VertexId u : node.c_l) sat.left.push_back(degree_in_c(u) <= size - k);
  for (VertexId u : node.c_r) sat.right.push_back(degree_in_c(u) <= size - k);
  return sat;
}

bool extends(VertexId v, Side side, const SearchNode& node, const Saturation& sat, const SignedGraph& g,
             int k) {
  if (contains(node.c_l, v) || contains(node.c_r, v)) return false;
  const Sign same = Sign::positive;
  const Sign cross = Sign::negative;
  long adjacent = 0;
  auto scan = [&](const VertexSet& members, const std::vector<char>& saturated, Sign wanted) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Sign s = g.sign(v, members[i]);
      if (s == Sign::none) {
        if (saturated[i]) return false;
      } else if (s != wanted) {
        return false;
      } else {
        ++adjacent;
      }
    }
    return true;
  };
  const bool on_left = side == Side::left;
  if (!scan(node.c_l, sat.left, on_left ? same : cross)) return false;
  if (!scan(node.c_r, sat.right, on_left ? cross : same)) return false;
  const long size = static_cast<long>(node.c_l.size() + node.c_r.size());
  return adjacent >= size + 1 - k;
}

VertexSet filter(const VertexSet& x, Side side, const SearchNode& node, const Saturation& sat,
                 const SignedGraph& g, int k) {
  VertexSet out;
  out.reserve(x.size());
  for (VertexId v : x) {
    if (extends(v, side, node, sat, g, k)) out.push_back(v);
  }
  return out;
}

struct SearchTimeout {};

class Search {
 public:
  Search(const SignedGraph& g, const Params& params, const SearchOptions& opts, const PlexSink& sink)
      : g_(g), k_(params.k), t_(params.t), opts_(opts), sink_(sink) {}

  void expand(SearchNode node, std::size_t depth) {
    ++stats.nodes;
    if (opts_.deadline && (stats.nodes & 63) == 0 && Clock::now() > *opts_.deadline) throw SearchTimeout{};
    if (opts_.check_nodes && !is_plex_state(node, g_, k_)) {
      throw std::logic_error("search node is not an antagonistic k-plex");
    }

    const Saturation sat = saturation_of(node, g_, k_);
    node.p_l = filter(node.p_l, Side::left, node, sat, g_, k_);
    node.q_l = filter(node.q_l, Side::left, node, sat, g_, k_);
    node.p_r = filter(node.p_r, Side::right, node, sat, g_, k_);
    node.q_r = filter(node.q_r, Side::right, node, sat, g_, k_);

    const long cl = static_cast<long>(node.c_l.size());
    const long cr = static_cast<long>(node.c_r.size());
    if (node.p_l.empty() && node.p_r.empty() && node.q_l.empty() && node.q_r.empty()) {
      if (cl >= t_ && cr >= t_) {
        ++stats.results;
        sink_(canonicalize(node.c_l, node.c_r));
      }
      return;
    }
    if (opts_.early_termination &&
        (cl + static_cast<long>(node.p_l.size()) < t_ || cr + static_cast<long>(node.p_r.size()) < t_)) {
      return;
    }

    std::optional<ColorState> colors;
    if (opts_.color_bound) {
      colors = color_state(node.c_l, node.c_r, node.p_l, node.p_r, g_, k_);
      const auto& b = colors->bounds;
      if (b.cd_l < t_ || b.cd_r < t_ || b.cd_a < 2 * t_) return;
    }

    node.parity = !node.parity;
    const Side first = node.parity ? Side::left : Side::right;
    if (opts_.on_branch) opts_.on_branch(depth, first);

    std::optional<Pivot> pivot;
    if (opts_.pivoting) {
      pivot = choose_pivot(node, first, g_);
      if (!pivot) pivot = choose_pivot(node, opposite(first), g_);
    }

    for (Side side : {first, opposite(first)}) {
      const VertexSet branch = pivot ? pivot_branch_set(node, side, *pivot, g_) : node.p(side);
      for (VertexId v : branch) {
        erase_sorted(node.p(side), v);
        if (colors) {
          const ColorDegree cd = color_degree(v, side, *colors, node.c_l, node.c_r, g_, k_);
          if (cd.side < t_ || cd.all < 2 * t_) continue;
        }
        SearchNode child = node;
        insert_sorted(child.c(side), v);
        erase_sorted(child.p(opposite(side)), v);
        erase_sorted(child.q(opposite(side)), v);
        expand(std::move(child), depth + 1);
        insert_sorted(node.q(side), v);
      }
    }
  }

  SearchStats stats;

 private:
  const SignedGraph& g_;
  const long k_;
  const long t_;
  const SearchOptions& opts_;
  const PlexSink& sink_;
};

struct SeedCandidates {
  VertexSet left;
  VertexSet right;
};

using CandidateFn = std::function<SeedCandidates(VertexId seed)>;

// Per-seed search over the subgraph induced by the seed and its candidates.
// Emits plexes in the ids of g; seeds run on `cfg.workers` threads.
EnumSummary run_seeds(const SignedGraph& g, const Params& params, const EnumConfig& cfg,
                      const CandidateFn& candidates, const PlexSink& sink) {
  const auto order = enumeration_order(g);
  const auto rank = ranks_of(order);
  const unsigned workers = std::max(1u, cfg.workers);

  EnumSummary summary;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex merge;
  std::vector<AntagonisticPlex> buffered;
  const auto start = Clock::now();

  auto work = [&] {
    std::vector<AntagonisticPlex> local_results;
    const PlexSink collect = [&](const AntagonisticPlex& p) { local_results.push_back(p); };
    const PlexSink& out = workers == 1 ? sink : collect;
    SearchStats totals;
    double dr_ms = 0;
    bool timed_out = false;

    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= order.size()) break;
      const VertexId seed = order[i];

      const auto dr_start = Clock::now();
      SeedCandidates cand = candidates(seed);
      dr_ms += ms_since(dr_start);

      VertexSet members;
      members.reserve(cand.left.size() + cand.right.size() + 1);
      std::set_union(cand.left.begin(), cand.left.end(), cand.right.begin(), cand.right.end(),
                     std::back_inserter(members));
      insert_sorted(members, seed);
      const SignedGraph local = g.induced(members);
      auto local_of = [&](VertexId v) {
        return static_cast<VertexId>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
      };

      SearchNode root;
      root.c_l = {local_of(seed)};
      for (VertexId w : cand.left) {
        if (w == seed) continue;
        (rank[w] > rank[seed] ? root.p_l : root.q_l).push_back(local_of(w));
      }
      for (VertexId w : cand.right) {
        if (w == seed) continue;
        (rank[w] > rank[seed] ? root.p_r : root.q_r).push_back(local_of(w));
      }

      const PlexSink to_global = [&](const AntagonisticPlex& p) {
        VertexSet l, r;
        for (VertexId v : p.left) l.push_back(members[v]);
        for (VertexId v : p.right) r.push_back(members[v]);
        out(canonicalize(std::move(l), std::move(r)));
      };
      Search search(local, params, cfg.search, to_global);
      try {
        search.expand(std::move(root), 0);
      } catch (const SearchTimeout&) {
        timed_out = true;
        stop = true;
      }
      totals.nodes += search.stats.nodes;
      totals.results += search.stats.results;
    }

    std::lock_guard lock(merge);
    summary.nodes += totals.nodes;
    summary.results += totals.results;
    summary.dr_ms += dr_ms;
    summary.timed_out = summary.timed_out || timed_out;
    buffered.insert(buffered.end(), local_results.begin(), local_results.end());
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (!buffered.empty()) {
    std::sort(buffered.begin(), buffered.end());
    for (const auto& p : buffered) sink(p);
  }
  summary.enumerate_ms = ms_since(start);
  return summary;
}

}  // namespace

bool can_extend(VertexId v, Side side, const SearchNode& node, const SignedGraph& g, int k) {
  return extends(v, side, node, saturation_of(node, g, k), g, k);
}

VertexSet update_candidates(const VertexSet& x, Side side, const SearchNode& node, const SignedGraph& g,
                            int k) {
  if (x.empty()) return {};
  return filter(x, side, node, saturation_of(node, g, k), g, k);
}

bool is_plex_state(const SearchNode& node, const SignedGraph& g, int k) {
  VertexSet all;
  std::set_union(node.c_l.begin(), node.c_l.end(), node.c_r.begin(), node.c_r.end(), std::back_inserter(all));
  if (all.size() != node.c_l.size() + node.c_r.size()) return false;
  for (VertexId u : all) {
    const bool u_left = contains(node.c_l, u);
    long adjacent = 0;
    for (VertexId w : all) {
      const Sign s = g.sign(u, w);
      if (s == Sign::none) continue;
      ++adjacent;
      const bool same = u_left == contains(node.c_l, w);
      if ((s == Sign::positive) != same) return false;
    }
    if (adjacent < static_cast<long>(all.size()) - k) return false;
  }
  return true;
}

std::optional<Pivot> choose_pivot(const SearchNode& node, Side side, const SignedGraph& g) {
  const VertexSet& same = node.p(side);
  const VertexSet& other = node.p(opposite(side));
  std::optional<Pivot> best;
  long best_score = -1;
  auto consider = [&](VertexId u) {
    long score = 0;
    for (VertexId w : same) score += g.sign(u, w) == Sign::positive;
    for (VertexId w : other) score += g.sign(u, w) == Sign::negative;
    if (score > best_score || (score == best_score && u < best->vertex)) {
      best_score = score;
      best = Pivot{u, side};
    }
  };
  for (VertexId u : node.p(side)) consider(u);
  for (VertexId u : node.q(side)) consider(u);
  return best;
}

VertexSet pivot_branch_set(const SearchNode& node, Side side, const Pivot& pivot, const SignedGraph& g) {
  const Sign wanted = side == pivot.side ? Sign::positive : Sign::negative;
  const VertexId u = pivot.vertex;
  auto shares_non_neighbor = [&](VertexId c) {
    for (const VertexSet* members : {&node.c_l, &node.c_r}) {
      for (VertexId w : *members) {
        if (!g.adjacent(u, w) && !g.adjacent(c, w)) return true;
      }
    }
    return false;
  };
  VertexSet branch;
  for (VertexId c : node.p(side)) {
    const bool skip = c != u && g.sign(u, c) == wanted && !shares_non_neighbor(c);
    if (!skip) branch.push_back(c);
  }
  return branch;
}

SearchStats sapeutil(SearchNode node, const SignedGraph& g, const Params& params, const SearchOptions& opts,
                     const PlexSink& sink) {
  Search search(g, params, opts, sink);
  try {
    search.expand(std::move(node), 0);
  } catch (const SearchTimeout&) {
    search.stats.timed_out = true;
  }
  return search.stats;
}

EnumSummary bape(const SignedGraph& g, const Params& params, const PlexSink& sink, EnumConfig cfg) {
  params.validate();
  auto candidates = [&](VertexId seed) {
    auto hop = two_hop_signed(g, seed);
    SeedCandidates c;
    auto pos = g.positive_neighbors(seed);
    auto neg = g.negative_neighbors(seed);
    std::set_union(pos.begin(), pos.end(), hop.n2plus.begin(), hop.n2plus.end(), std::back_inserter(c.left));
    std::set_union(neg.begin(), neg.end(), hop.n2minus.begin(), hop.n2minus.end(), std::back_inserter(c.right));
    return c;
  };
  EnumSummary s = run_seeds(g, params, cfg, candidates, sink);
  s.dr_ms = 0;
  return s;
}

EnumSummary sape(const SignedGraph& g, const Params& params, const PlexSink& sink, EnumConfig cfg) {
  params.validate();
  const auto vr_start = Clock::now();
  const ReducedGraph reduced = vertex_reduction(g, params);
  const double vr_ms = ms_since(vr_start);

  const auto& survivors = reduced.report.survivors;
  std::vector<std::size_t> per_seed(reduced.graph.num_vertices(), 0);
  auto candidates = [&](VertexId seed) {
    HopCandidates hop = dichromatic_reduction(reduced.graph, seed, params);
    per_seed[seed] = hop.ln.size() + hop.rn.size();
    return SeedCandidates{std::move(hop.ln), std::move(hop.rn)};
  };
  // Survivor ids are increasing, so the mapping keeps plexes canonical.
  const PlexSink to_input = [&](const AntagonisticPlex& p) {
    AntagonisticPlex q;
    for (VertexId v : p.left) q.left.push_back(survivors[v]);
    for (VertexId v : p.right) q.right.push_back(survivors[v]);
    sink(q);
  };

  EnumSummary s = run_seeds(reduced.graph, params, cfg, candidates, to_input);
  s.vr_ms = vr_ms;
  s.vr_removed = reduced.report.removed_vr;
  for (std::size_t c : per_seed) s.dr_candidate_total += c;
  return s;
}

std::vector<AntagonisticPlex> bape(const SignedGraph& g, const Params& params) {
  std::vector<AntagonisticPlex> out;
  bape(g, params, [&](const AntagonisticPlex& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AntagonisticPlex> sape(const SignedGraph& g, const Params& params, bool color_bound) {
  std::vector<AntagonisticPlex> out;
  EnumConfig cfg;
  cfg.search.color_bound = color_bound;
  sape(g, params, [&](const AntagonisticPlex& p) { out.push_back(p); }, cfg);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apk
