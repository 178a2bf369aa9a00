#ifndef OPSYSDUAL_COMPLETION_HPP_
#define OPSYSDUAL_COMPLETION_HPP_

#include "opsysdual/opsys.hpp"

namespace osd {

// Constructive PSD completion for chordal patterns. Unspecified entries are
// filled one at a time along the reverse perfect elimination ordering, each
// via the Schur-style formula row(v, S) * pinv(block(S, S)) * col(S, w) over
// the already-specified neighbors S. Specified entries are returned exactly
// as given. The result is verified PSD at 10*tol before returning.
// Throws NotChordal, NotPartiallyPositive, or VerificationFailed.
HermitianMatrix chordal_complete(const PartialHermitianMatrix& x,
                                 double tol = kDefaultPsdTol);

struct DykstraResult {
  bool feasible;
  HermitianMatrix completion;  // last affine-feasible iterate: specified
                               // entries match exactly
  double residual;             // HS distance between the two projections at
                               // termination
  int iterations;
};

inline constexpr int kDefaultDykstraMaxIter = 10000;
inline constexpr double kDefaultDykstraTol = 1e-8;

// Dykstra alternating projections between the PSD cone and the affine set of
// completions. Works on any pattern, chordal or not; the verdict is
// approximate in the sense that feasible means the residual dropped below
// tol within the iteration budget. Never throws for feasibility reasons.
DykstraResult dykstra_complete(const PartialHermitianMatrix& x,
                               int max_iter = kDefaultDykstraMaxIter,
                               double tol = kDefaultDykstraTol);

}  // namespace osd

#endif  // OPSYSDUAL_COMPLETION_HPP_
