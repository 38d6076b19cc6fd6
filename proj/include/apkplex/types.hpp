#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace apk {

/// Dense vertex index, 0 <= id < n.
using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

enum class Sign : std::int8_t { none = 0, positive = 1, negative = -1 };

enum class Side : std::uint8_t { left, right };

constexpr Side opposite(Side s) noexcept { return s == Side::left ? Side::right : Side::left; }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Plex slack k and minimum side size t.
struct Params {
  int k = 1;
  int t = 1;

  /// Throws ParamError unless k >= 1 and t >= 2k-1.
  void validate() const;

  static Params make(int k, int t) {
    Params p{k, t};
    p.validate();
    return p;
  }
};

/// Canonical result: two disjoint sorted sides, the side holding the smallest id is `left`.
struct AntagonisticPlex {
  VertexSet left;
  VertexSet right;

  std::size_t size() const noexcept { return left.size() + right.size(); }
  friend auto operator<=>(const AntagonisticPlex&, const AntagonisticPlex&) = default;
};

/// Sorts both sides and orients the plex so that the smallest vertex is on the left.
AntagonisticPlex canonicalize(VertexSet a, VertexSet b);

}  // namespace apk
