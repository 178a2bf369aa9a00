#ifndef OPSYSDUAL_BAND_HPP_
#define OPSYSDUAL_BAND_HPP_

#include <vector>

#include "opsysdual/graph.hpp"
#include "opsysdual/linalg.hpp"

namespace osd {

// The bandwidth-b relation on {0..n-1}: (i, j) related iff |i - j| < b.
// Always chordal (the natural order is a perfect elimination ordering).
// Throws InvalidBandwidth unless 1 <= b <= n.
ToleranceRelation band_relation(int n, int b);

// Specialized extremality test for pi(v v*) over band_relation(n, b): true
// iff v is nonzero and every two consecutive (tolerance-) nonzero entries
// are within band distance, i.e. no run of b-1 or more zeros separates
// them. Matches certify_extremal on the band pattern by construction: the
// zero threshold is the support threshold of pi(v v*).
// Throws InvalidBandwidth unless 1 <= b <= dim(v).
bool band_vector_extremal(const std::vector<Complex>& v, int b,
                          double tol = kDefaultRankTol);

}  // namespace osd

#endif  // OPSYSDUAL_BAND_HPP_
