#ifndef OPSYSDUAL_OPSYS_HPP_
#define OPSYSDUAL_OPSYS_HPP_

#include <vector>

#include "opsysdual/graph.hpp"
#include "opsysdual/linalg.hpp"

namespace osd {

// A Hermitian assignment on the entries of a pattern: values are defined for
// (i, j) in the relation and are zero elsewhere. The same carrier serves the
// operator system of the pattern and its dual; which cone applies is decided
// by the operation called on it, never by the data.
class PartialHermitianMatrix {
 public:
  // `values` must vanish off the pattern; use project_to_pattern to build
  // from an arbitrary dense matrix.
  PartialHermitianMatrix(ToleranceRelation pattern, HermitianMatrix values);

  static PartialHermitianMatrix zero(const ToleranceRelation& pattern);

  const ToleranceRelation& pattern() const { return pattern_; }
  // Dense picture with zeros on unspecified entries.
  const HermitianMatrix& values() const { return values_; }
  int dim() const { return values_.dim(); }
  const Complex& entry(int i, int j) const { return values_(i, j); }

  PartialHermitianMatrix operator+(const PartialHermitianMatrix& other) const;
  PartialHermitianMatrix scaled(double factor) const;

 private:
  ToleranceRelation pattern_;
  HermitianMatrix values_;
};

// The image of the clique-block map: one Hermitian block per maximal clique,
// in the order produced by maximal_cliques.
struct CliqueBlocks {
  std::vector<std::vector<int>> cliques;
  std::vector<HermitianMatrix> blocks;
};

// Orthogonal projection of a dense Hermitian matrix onto the pattern space:
// entries with (i, j) in the relation are kept, the rest are dropped.
PartialHermitianMatrix project_to_pattern(const HermitianMatrix& a,
                                          const ToleranceRelation& r);

// Hermitian basis of the orthogonal complement of the pattern space inside
// the full matrix algebra: for every non-edge i < j the pair E_ij + E_ji and
// i(E_ij - E_ji).
std::vector<HermitianMatrix> perp_basis(const ToleranceRelation& r);

// The principal submatrices of x over the maximal cliques of its pattern.
// Throws NotChordal when the pattern is not chordal.
CliqueBlocks clique_block_map(const PartialHermitianMatrix& x);

// True iff every maximal-clique block is PSD at the given tolerance.
bool is_partially_positive(const PartialHermitianMatrix& x,
                           double tol = kDefaultPsdTol);

// Membership in the positive cone of the dual operator system. For chordal
// patterns this is exactly partial positivity, equivalently the existence of
// a PSD completion. Non-chordal patterns are rejected; use the completion
// module's Dykstra solver for an approximate feasibility check there.
bool dual_cone_member(const PartialHermitianMatrix& x,
                      double tol = kDefaultPsdTol);

// Membership for an m x m block array over a common chordal pattern, decided
// on the assembled pattern matrix over the ampliated relation with (x, i)
// encoded as x*m + i. The array must be Hermitian as a block array. Throws
// ShapeMismatch on ragged arrays, pattern disagreements, or a non-Hermitian
// block array.
bool ampliated_member(
    const std::vector<std::vector<PartialHermitianMatrix>>& blocks, int m,
    double tol = kDefaultPsdTol);

// Assembles the nm x nm pattern matrix used by ampliated_member; exposed for
// cross-checking against independent feasibility oracles.
PartialHermitianMatrix assemble_ampliated(
    const std::vector<std::vector<PartialHermitianMatrix>>& blocks, int m);

// Hermitian basis of the pattern space inside the full matrix algebra:
// E_ii for every vertex, then E_ij + E_ji and i(E_ij - E_ji) per edge.
std::vector<HermitianMatrix> pattern_space_basis(const ToleranceRelation& r);

}  // namespace osd

#endif  // OPSYSDUAL_OPSYS_HPP_
