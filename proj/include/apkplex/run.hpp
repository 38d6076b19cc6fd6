#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "apkplex/signed_graph.hpp"
#include "apkplex/types.hpp"

namespace apk {

/// bape: VR then the unpruned search. sanc: full pipeline without colour
/// bounds. sape: everything.
enum class Algo { bape, sanc, sape };

const char* to_string(Algo a);
std::optional<Algo> parse_algo(std::string_view s);

struct RunOptions {
  Params params;
  Algo algo = Algo::sape;
  unsigned workers = 1;
  std::optional<double> timeout_seconds;
  bool collect = true;   ///< keep results; otherwise only count them
  bool validate = false; ///< check every emitted plex against the whole graph
};

struct RunStats {
  std::size_t n = 0;
  std::size_t m_pos = 0;
  std::size_t m_neg = 0;
  std::size_t vr_removed = 0;
  std::size_t dr_candidate_total = 0;
  std::size_t results = 0;
  std::map<std::string, double> phase_times;  ///< milliseconds: load, vr, dr, enumerate, total
  std::optional<std::size_t> peak_memory;     ///< bytes
  bool timed_out = false;

  nlohmann::json to_json() const;
};

struct RunResult {
  std::vector<AntagonisticPlex> plexes;  ///< ids of the input graph, sorted
  RunStats stats;
};

/// Throws ParamError on invalid params and std::logic_error when validation
/// is on and an emitted plex fails it.
RunResult run(const SignedGraph& g, const RunOptions& opts);

/// "L=[a,b] R=[c,d]" in labels; the side holding the smallest label comes first.
std::string format_plex(const AntagonisticPlex& p, const SignedGraph& g);

/// One line per plex, lines ordered by their label sequences.
void write_plexes(std::ostream& out, const std::vector<AntagonisticPlex>& plexes, const SignedGraph& g);

/// Peak resident set size of this process, if the platform reports it.
std::optional<std::size_t> peak_memory_bytes();

}  // namespace apk
