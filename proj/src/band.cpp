#include "opsysdual/band.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace osd {

ToleranceRelation band_relation(int n, int b) {
  if (b < 1 || b > n) {
    throw InvalidBandwidth("bandwidth " + std::to_string(b) +
                           " outside [1," + std::to_string(n) + "]");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n && j - i < b; ++j) edges.emplace_back(i, j);
  }
  return ToleranceRelation(n, edges);
}

bool band_vector_extremal(const std::vector<Complex>& v, int b, double tol) {
  const int n = static_cast<int>(v.size());
  if (b < 1 || b > n) {
    throw InvalidBandwidth("bandwidth " + std::to_string(b) +
                           " outside [1," + std::to_string(n) + "]");
  }

  // Same threshold the support subgraph of pi(v v*) would use: diagonal
  // entries are |v_i|^2.
  double dmax = 0.0;
  for (const Complex& z : v) dmax = std::max(dmax, std::norm(z));
  const double threshold = tol * std::max(1.0, dmax);

  // Consecutive nonzero entries at indices prev < i are adjacent in the
  // band pattern iff i - prev < b, so a run of b-1 (or more) zeros between
  // them is exactly what disconnects the support.
  int prev = -1;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (std::norm(v[i]) <= threshold) continue;
    if (any && i - prev >= b) return false;
    prev = i;
    any = true;
  }
  return any;
}

}  // namespace osd
