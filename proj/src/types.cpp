#include "apkplex/types.hpp"

#include <algorithm>

namespace apk {

void Params::validate() const {
  if (k < 1) throw ParamError("k must be at least 1 (got " + std::to_string(k) + ")");
  if (t < 2 * k - 1) {
    throw ParamError("t must satisfy t >= 2k-1 (got k=" + std::to_string(k) +
                     ", t=" + std::to_string(t) + ")");
  }
}

AntagonisticPlex canonicalize(VertexSet a, VertexSet b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.empty() || (!b.empty() && b.front() < a.front())) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

}  // namespace apk
