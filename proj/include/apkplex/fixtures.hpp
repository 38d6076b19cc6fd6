#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "apkplex/signed_graph.hpp"
#include "apkplex/types.hpp"

namespace apk {

/// Small hand-built graphs with known answers. Edge lists live in
/// data/fixtures and are compiled in; labels are 0..n-1 so ids equal labels.
struct Fixture {
  std::string name;
  std::string_view text;  ///< edge list as shipped
  SignedGraph graph;
  Params params;
  std::vector<AntagonisticPlex> expected;
};

class FixtureDrift : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

const std::vector<Fixture>& fixtures();

/// Throws std::out_of_range for an unknown name.
const Fixture& fixture(std::string_view name);

/// Runs the brute-force oracle on every fixture and throws FixtureDrift on the
/// first mismatch with `expected`.
void verify_fixtures();

}  // namespace apk
