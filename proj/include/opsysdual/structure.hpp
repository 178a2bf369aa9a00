#ifndef OPSYSDUAL_STRUCTURE_HPP_
#define OPSYSDUAL_STRUCTURE_HPP_

#include <vector>

#include "opsysdual/graph.hpp"
#include "opsysdual/linalg.hpp"

namespace osd {

// Block structure of a finite-dimensional C*-algebra: one full matrix block
// per label set, sizes aligned with labels.
struct EnvelopeDescriptor {
  std::vector<int> block_sizes;
  std::vector<std::vector<int>> labels;  // defining vertex sets

  // Dimension of the described algebra, sum of squared block sizes.
  int algebra_dim() const;
};

// Envelope of the operator system of the pattern: one block per connected
// component, of the component's size.
EnvelopeDescriptor envelope_of_primal(const ToleranceRelation& r);

// Envelope of the dual operator system: one block per maximal clique, of the
// clique's size. Throws NotChordal.
EnvelopeDescriptor envelope_of_dual(const ToleranceRelation& r);

// Propagation number of the primal system. For a connected pattern this is
// the graph diameter; in general the maximum over components of the
// component diameter, where a single vertex counts as 1 (its system is
// already its envelope).
int propagation_primal(const ToleranceRelation& r);

// Propagation number of the dual system: 1 when the relation is an
// equivalence, 2 otherwise. Throws NotChordal.
int propagation_dual(const ToleranceRelation& r);

struct SpanResult {
  bool reached;
  int propagation;        // smallest k with span dimension == ambient_dim;
                          // meaningful only when reached
  std::vector<int> dims;  // span dimension after each product round
};

// Direct span computation: the smallest k such that products of at most k
// generators span a space of dimension ambient_dim. Round k multiplies the
// current span basis by every generator and measures the new dimension via
// incremental Gram-Schmidt at relative tolerance 1e-8. Stalling for two
// consecutive rounds, or exceeding n^2 rounds, gives reached = false.
// The generators must all share one dimension and their products must stay
// inside an algebra of dimension ambient_dim; InvalidInput otherwise.
SpanResult span_propagation(const std::vector<HermitianMatrix>& generators,
                            int ambient_dim);

// Images of the pattern-space basis under the clique-block map, embedded
// block-diagonally in the dual envelope algebra (one diagonal block per
// maximal clique, in clique order). Suitable generators for the dual span
// test with ambient_dim = envelope_of_dual(r).algebra_dim().
// Throws NotChordal.
std::vector<HermitianMatrix> dual_span_generators(const ToleranceRelation& r);

}  // namespace osd

#endif  // OPSYSDUAL_STRUCTURE_HPP_
