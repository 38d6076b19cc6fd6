#include "apkplex/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "apkplex/oracle.hpp"

namespace apk {

namespace {

struct Embedded {
  std::string_view name;
  std::string_view text;
};

constexpr Embedded kEmbedded[] = {
#include "fixture_data.inc"
};

struct Answer {
  std::string_view name;
  Params params;
  std::vector<AntagonisticPlex> expected;
};

std::vector<Answer> answers() {
  return {
      {"camps", {2, 3}, {{{0, 1, 2}, {3, 4, 5}}}},
      {"plex_2_4", {2, 4}, {{{0, 1, 2, 3}, {4, 5, 6, 7}}}},
      {"coloring", {2, 3}, {}},
      {"ego_onehop", {2, 4}, {{{0, 1, 2, 3, 4}, {6, 7, 8, 9}}}},
      {"ego_twohop", {2, 4}, {{{0, 1, 2, 3, 4, 10}, {6, 7, 8, 9}}}},
  };
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;
  for (auto& a : answers()) {
    auto it = std::find_if(std::begin(kEmbedded), std::end(kEmbedded),
                           [&](const Embedded& e) { return e.name == a.name; });
    if (it == std::end(kEmbedded)) throw FixtureDrift("no edge list for fixture " + std::string(a.name));
    std::istringstream in{std::string(it->text)};
    auto loaded = load_signed_edge_list(in);
    out.push_back({std::string(a.name), it->text, std::move(loaded.graph), a.params, std::move(a.expected)});
  }
  return out;
}

std::string describe(const std::vector<AntagonisticPlex>& ps) {
  std::string s = "{";
  for (const auto& p : ps) {
    s += " L=" + std::to_string(p.left.size()) + " R=" + std::to_string(p.right.size());
  }
  return s + " }";
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw std::out_of_range("unknown fixture: " + std::string(name));
}

void verify_fixtures() {
  for (const auto& f : fixtures()) {
    for (VertexId v = 0; v < f.graph.num_vertices(); ++v) {
      if (f.graph.label(v) != static_cast<std::int64_t>(v)) {
        throw FixtureDrift(f.name + ": labels are not 0..n-1");
      }
    }
    auto got = enumerate_bruteforce(f.graph, f.params);
    if (got != f.expected) {
      throw FixtureDrift(f.name + ": oracle gives " + describe(got) + ", fixture expects " + describe(f.expected));
    }
  }
}

}  // namespace apk
