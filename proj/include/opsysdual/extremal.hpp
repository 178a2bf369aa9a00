#ifndef OPSYSDUAL_EXTREMAL_HPP_
#define OPSYSDUAL_EXTREMAL_HPP_

#include <utility>
#include <vector>

#include "opsysdual/opsys.hpp"

namespace osd {

// The subgraph induced by the vertices with (tolerance-) nonzero diagonal.
struct SupportSubgraph {
  std::vector<int> vertices;              // sorted ascending
  std::vector<std::pair<int, int>> edges; // pattern edges among the vertices
  bool connected;                         // nonempty and connected
};

SupportSubgraph support_subgraph(const PartialHermitianMatrix& x,
                                 double tol = kDefaultRankTol);

struct ExtremalityReport {
  bool is_extremal;
  std::vector<int> clique_ranks;  // aligned with maximal_cliques order
  std::vector<int> support;
  bool support_connected;
  int face_dimension;  // 0 for the zero element
  bool marginal;       // a rank decision fell within 10x of its threshold
};

// Decides whether x generates an extremal ray of the dual cone: every
// maximal-clique block of rank at most one and connected support. The face
// dimension is computed independently and the two verdicts are cross-checked
// (VerificationFailed on disagreement, unless the report is marginal).
// Throws NotChordal, NotInCone.
ExtremalityReport certify_extremal(const PartialHermitianMatrix& x,
                                   double tol = kDefaultRankTol);

// Real dimension of the face of the dual cone through x: the solution space
// of {d in the pattern space : d_C = P_C d_C P_C for every maximal clique C}
// where P_C projects onto the range of the block x_C. Equals 1 exactly when
// x generates an extremal ray. Throws NotChordal, NotInCone, ZeroElement.
int face_dimension(const PartialHermitianMatrix& x,
                   double tol = kDefaultRankTol);

// pi(v v*), the pattern projection of the rank-one matrix of v. Always a
// dual-cone member. Throws DimMismatch.
PartialHermitianMatrix extremal_from_vector(const std::vector<Complex>& v,
                                            const ToleranceRelation& r);

// Reconstructs a vector v with pi(v v*) = x from an extremal x: each clique
// block has rank one, so v is fixed per clique up to phase, and the phases
// are stitched along a BFS tree of the connected support. The result is
// verified against x; throws VerificationFailed when x is not extremal
// enough for the reconstruction to close, ZeroElement for x = 0.
std::vector<Complex> recover_generating_vector(const PartialHermitianMatrix& x,
                                               double tol = kDefaultRankTol);

}  // namespace osd

#endif  // OPSYSDUAL_EXTREMAL_HPP_
