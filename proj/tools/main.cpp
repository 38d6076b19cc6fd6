#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "apkplex/fixtures.hpp"
#include "apkplex/gen.hpp"
#include "apkplex/oracle.hpp"
#include "apkplex/run.hpp"

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

apk::LoadedGraph load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return apk::load_signed_edge_list(in);
  } catch (const apk::ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Writes to `path`, or standard output when it is empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  fn(out);
}

apk::Params params_of(int k, int t) {
  try {
    return apk::Params::make(k, t);
  } catch (const apk::ParamError& e) {
    throw InputError(e.what());
  }
}

struct EnumerateArgs {
  std::string input, output, algo = "sape", mode = "list";
  int k = 1, t = 1;
  unsigned workers = 1;
  double timeout = 0;
  bool validate = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  const auto algo = apk::parse_algo(a.algo);
  if (!algo) throw InputError("unknown algo " + a.algo);
  apk::RunOptions opts;
  opts.params = params_of(a.k, a.t);
  opts.algo = *algo;
  opts.workers = a.workers;
  opts.collect = a.mode == "list";
  opts.validate = a.validate;
  if (a.timeout > 0) opts.timeout_seconds = a.timeout;

  const auto load_start = Clock::now();
  const auto loaded = load(a.input);
  const double load_ms = std::chrono::duration<double, std::milli>(Clock::now() - load_start).count();

  auto res = apk::run(loaded.graph, opts);
  res.stats.phase_times["load"] = load_ms;
  res.stats.phase_times["total"] += load_ms;

  with_output(a.output, [&](std::ostream& out) {
    if (opts.collect) {
      apk::write_plexes(out, res.plexes, loaded.graph);
    } else {
      out << res.stats.results << '\n';
    }
  });
  std::cerr << res.stats.to_json().dump() << '\n';
  return res.stats.timed_out ? kExitTimeout : 0;
}

int cmd_oracle(const std::string& input, int k, int t) {
  const auto params = params_of(k, t);
  const auto loaded = load(input);
  const auto plexes = apk::enumerate_bruteforce(loaded.graph, params);
  apk::write_plexes(std::cout, plexes, loaded.graph);
  return 0;
}

int cmd_gen(const apk::GenSpec& spec, const std::string& output) {
  apk::SignedGraph g;
  try {
    g = apk::generate(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  with_output(output, [&](std::ostream& out) { apk::write_signed_edge_list(out, g); });
  return 0;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<int> ks{1}, ts{1};
  std::vector<std::string> algos{"bape", "sanc", "sape"};
  int reps = 3;
  int warmup = 1;
  double timeout = 0;
  unsigned workers = 1;
};

int cmd_bench(const BenchArgs& a) {
  std::vector<apk::Algo> algos;
  for (const auto& s : a.algos) {
    auto algo = apk::parse_algo(s);
    if (!algo) throw InputError("unknown algo " + s);
    algos.push_back(*algo);
  }
  std::cout << "dataset,k,t,algo,run,elapsed_ms,results,vr_removed,dr_candidate_total\n";
  for (const auto& input : a.inputs) {
    const auto loaded = load(input);
    const std::string dataset = std::filesystem::path(input).stem().string();
    for (int k : a.ks) {
      for (int t : a.ts) {
        if (t < 2 * k - 1) continue;  // not a valid cell
        for (auto algo : algos) {
          apk::RunOptions opts;
          opts.params = params_of(k, t);
          opts.algo = algo;
          opts.collect = false;
          opts.workers = a.workers;
          if (a.timeout > 0) opts.timeout_seconds = a.timeout;
          for (int w = 0; w < a.warmup; ++w) apk::run(loaded.graph, opts);
          for (int r = 0; r < a.reps; ++r) {
            const auto res = apk::run(loaded.graph, opts);
            const auto& s = res.stats;
            char elapsed[32];
            std::snprintf(elapsed, sizeof elapsed, "%.3f", s.phase_times.at("total"));
            std::cout << dataset << ',' << k << ',' << t << ',' << apk::to_string(algo) << ',' << r << ','
                      << (s.timed_out ? std::string("INF") : std::string(elapsed)) << ',' << s.results << ','
                      << s.vr_removed << ',' << s.dr_candidate_total << '\n';
            std::cout.flush();
          }
        }
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal antagonistic k-plex enumeration in signed graphs"};
  app.require_subcommand(1);

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "Enumerate qualified maximal antagonistic k-plexes");
  en->add_option("--input", ea.input, "Signed edge list")->required();
  en->add_option("--k", ea.k, "Plex slack k >= 1")->required();
  en->add_option("--t", ea.t, "Minimum side size, t >= 2k-1")->required();
  en->add_option("--algo", ea.algo, "bape, sanc or sape")->check(CLI::IsMember({"bape", "sanc", "sape"}));
  en->add_option("--output", ea.output, "Result file (default: stdout)");
  en->add_option("--mode", ea.mode, "list or count")->check(CLI::IsMember({"list", "count"}));
  en->add_option("--workers", ea.workers, "Worker threads")->check(CLI::PositiveNumber);
  en->add_option("--timeout", ea.timeout, "Give up after this many seconds (0: never)");
  en->add_flag("--validate", ea.validate, "Check every result against the whole graph");

  std::string oracle_input;
  int ok = 1, ot = 1;
  auto* orc = app.add_subcommand("oracle", "Brute-force enumeration for graphs with at most 20 vertices");
  orc->add_option("--input", oracle_input)->required();
  orc->add_option("--k", ok)->required();
  orc->add_option("--t", ot)->required();

  apk::GenSpec spec;
  std::string gen_output;
  auto* gen = app.add_subcommand("gen", "Generate a signed graph with planted communities");
  gen->add_option("--n", spec.n)->required();
  gen->add_option("--planted", spec.planted, "Number of planted community pairs");
  gen->add_option("--side", spec.side, "Vertices per camp of a planted pair");
  gen->add_option("--p-pos-in", spec.p_pos_in);
  gen->add_option("--p-neg-cross", spec.p_neg_cross);
  gen->add_option("--p-noise", spec.p_noise);
  gen->add_option("--seed", spec.seed);
  gen->add_option("--output", gen_output, "Edge list file (default: stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Time algorithms over a grid of (k, t); CSV on stdout");
  bench->add_option("--input", ba.inputs, "Signed edge lists")->required()->delimiter(',');
  bench->add_option("--k", ba.ks, "Comma-separated k values")->delimiter(',');
  bench->add_option("--t", ba.ts, "Comma-separated t values")->delimiter(',');
  bench->add_option("--algos", ba.algos, "Comma-separated algorithms")->delimiter(',');
  bench->add_option("--reps", ba.reps, "Timed repetitions per cell")->check(CLI::NonNegativeNumber);
  bench->add_option("--warmup", ba.warmup, "Untimed runs per cell")->check(CLI::NonNegativeNumber);
  bench->add_option("--timeout", ba.timeout, "Seconds per run before reporting INF (0: never)");
  bench->add_option("--workers", ba.workers)->check(CLI::PositiveNumber);

  std::string fixture_name;
  auto* fx = app.add_subcommand("fixture", "Print a built-in fixture graph");
  fx->add_option("name", fixture_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) return cmd_enumerate(ea);
    if (*orc) return cmd_oracle(oracle_input, ok, ot);
    if (*gen) return cmd_gen(spec, gen_output);
    if (*bench) return cmd_bench(ba);
    if (*fx) {
      std::cout << apk::fixture(fixture_name).text;
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const apk::OracleLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
