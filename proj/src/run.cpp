#include "apkplex/run.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "apkplex/enumerate.hpp"
#include "apkplex/oracle.hpp"
#include "apkplex/preprocess.hpp"

namespace apk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

struct LabelPlex {
  std::vector<std::int64_t> left, right;
  auto operator<=>(const LabelPlex&) const = default;
};

LabelPlex to_labels(const AntagonisticPlex& p, const SignedGraph& g) {
  LabelPlex out;
  for (VertexId v : p.left) out.left.push_back(g.label(v));
  for (VertexId v : p.right) out.right.push_back(g.label(v));
  std::sort(out.left.begin(), out.left.end());
  std::sort(out.right.begin(), out.right.end());
  if (out.left.empty() || (!out.right.empty() && out.right.front() < out.left.front())) {
    std::swap(out.left, out.right);
  }
  return out;
}

std::string format(const LabelPlex& p) {
  std::string s = "L=[";
  auto list = [&](const std::vector<std::int64_t>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(xs[i]);
    }
  };
  list(p.left);
  s += "] R=[";
  list(p.right);
  s += ']';
  return s;
}

}  // namespace

const char* to_string(Algo a) {
  switch (a) {
    case Algo::bape: return "bape";
    case Algo::sanc: return "sanc";
    case Algo::sape: return "sape";
  }
  return "?";
}

std::optional<Algo> parse_algo(std::string_view s) {
  if (s == "bape") return Algo::bape;
  if (s == "sanc") return Algo::sanc;
  if (s == "sape") return Algo::sape;
  return std::nullopt;
}

nlohmann::json RunStats::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["m_pos"] = m_pos;
  j["m_neg"] = m_neg;
  j["vr_removed"] = vr_removed;
  j["dr_candidate_total"] = dr_candidate_total;
  j["results"] = results;
  j["phase_times"] = phase_times;
  if (peak_memory) j["peak_memory"] = *peak_memory;
  j["timed_out"] = timed_out;
  return j;
}

std::optional<std::size_t> peak_memory_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0 || usage.ru_maxrss <= 0) return std::nullopt;
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;  // Linux reports KiB
}

RunResult run(const SignedGraph& g, const RunOptions& opts) {
  opts.params.validate();
  const auto start = Clock::now();

  RunResult res;
  res.stats.n = g.num_vertices();
  res.stats.m_pos = g.num_positive_edges();
  res.stats.m_neg = g.num_negative_edges();

  EnumConfig cfg;
  cfg.workers = opts.workers;
  if (opts.timeout_seconds) {
    cfg.search.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(*opts.timeout_seconds));
  }

  const PlexSink sink = [&](const AntagonisticPlex& p) {
    if (opts.validate) {
      if (auto check = validate_plex(p, g, opts.params); !check) {
        throw std::logic_error(std::string("emitted plex fails validation: ") + apk::to_string(check.violation) +
                               " " + check.detail + " in " + format_plex(p, g));
      }
    }
    ++res.stats.results;
    if (opts.collect) res.plexes.push_back(p);
  };

  EnumSummary summary;
  if (opts.algo == Algo::bape) {
    const auto vr_start = Clock::now();
    const ReducedGraph reduced = vertex_reduction(g, opts.params);
    const double vr_ms = ms_since(vr_start);
    const auto& survivors = reduced.report.survivors;
    const auto deadline = cfg.search.deadline;
    cfg.search = SearchOptions::baseline();
    cfg.search.deadline = deadline;
    summary = bape(
        reduced.graph, opts.params,
        [&](const AntagonisticPlex& p) {
          AntagonisticPlex q;
          for (VertexId v : p.left) q.left.push_back(survivors[v]);
          for (VertexId v : p.right) q.right.push_back(survivors[v]);
          sink(q);
        },
        cfg);
    summary.vr_ms = vr_ms;
    summary.vr_removed = reduced.report.removed_vr;
  } else {
    cfg.search.color_bound = opts.algo == Algo::sape;
    summary = sape(g, opts.params, sink, cfg);
  }

  std::sort(res.plexes.begin(), res.plexes.end(), [&](const auto& a, const auto& b) {
    return to_labels(a, g) < to_labels(b, g);
  });
  res.stats.vr_removed = summary.vr_removed;
  res.stats.dr_candidate_total = summary.dr_candidate_total;
  res.stats.timed_out = summary.timed_out;
  res.stats.phase_times["vr"] = summary.vr_ms;
  res.stats.phase_times["dr"] = summary.dr_ms;
  res.stats.phase_times["enumerate"] = summary.enumerate_ms;
  res.stats.phase_times["total"] = ms_since(start);
  res.stats.peak_memory = peak_memory_bytes();
  return res;
}

std::string format_plex(const AntagonisticPlex& p, const SignedGraph& g) { return format(to_labels(p, g)); }

void write_plexes(std::ostream& out, const std::vector<AntagonisticPlex>& plexes, const SignedGraph& g) {
  std::vector<LabelPlex> rows;
  rows.reserve(plexes.size());
  for (const auto& p : plexes) rows.push_back(to_labels(p, g));
  std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) out << format(r) << '\n';
}

}  // namespace apk
