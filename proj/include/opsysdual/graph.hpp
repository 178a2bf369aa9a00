#ifndef OPSYSDUAL_GRAPH_HPP_
#define OPSYSDUAL_GRAPH_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "opsysdual/errors.hpp"

namespace osd {

// A reflexive, symmetric relation on {0..n-1}, viewed as an undirected graph.
// Reflexive pairs are implicit and never stored; edges are unordered pairs
// {i,j} with i < j. Immutable after construction.
class ToleranceRelation {
 public:
  // Edges may be given in any order and orientation; (i,i) pairs are
  // accepted and ignored. Throws IndexOutOfRange for indices outside [0,n).
  ToleranceRelation(int n, const std::vector<std::pair<int, int>>& edges);

  static ToleranceRelation complete(int n);
  static ToleranceRelation edgeless(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted list of edges (i, j) with i < j.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // True iff (i, j) is in the relation; includes the diagonal i == j.
  bool related(int i, int j) const;

  // True iff {i, j} is an edge (i != j and related).
  bool adjacent(int i, int j) const;

  // Neighbors of v, sorted ascending, v excluded.
  const std::vector<int>& neighbors(int v) const;

  bool operator==(const ToleranceRelation& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;      // sorted neighbor lists
  std::vector<std::vector<char>> adj_mat_; // dense lookup
};

// A permutation of {0..n-1} interpreted as the visit order v_1 < ... < v_n.
struct EliminationOrder {
  std::vector<int> order;
};

// Maximum-cardinality search. The returned order is a perfect elimination
// ordering exactly when the graph is chordal. Deterministic: among vertices
// of maximal weight the lowest index is selected.
EliminationOrder mcs_order(const ToleranceRelation& r);

// True iff each C[i] = {v_i} together with the later neighbors of v_i is a
// clique. Throws InvalidInput if sigma is not a permutation of the vertices.
bool verify_peo(const ToleranceRelation& r, const EliminationOrder& sigma);

bool is_chordal(const ToleranceRelation& r);

// The maximal cliques of a chordal graph, each sorted ascending, the list
// sorted lexicographically (hence by minimal element). Throws NotChordal
// for non-chordal input.
std::vector<std::vector<int>> maximal_cliques(const ToleranceRelation& r);

// Partition of the vertex set into connected components, each sorted, the
// list sorted by minimal element.
std::vector<std::vector<int>> connected_components(const ToleranceRelation& r);

// Maximum over vertex pairs of the shortest-path length; std::nullopt when
// the graph is disconnected.
std::optional<int> diameter(const ToleranceRelation& r);

// True iff the relation is transitive, i.e. every connected component is a
// clique.
bool is_equivalence(const ToleranceRelation& r);

// The relation R^m on n*m vertices, with (x, i) encoded as index x*m + i:
// ((x,i),(y,j)) related iff (x,y) is. Maximal cliques of the result are the
// inflations C x {0..m-1} of the maximal cliques of r.
ToleranceRelation ampliate(const ToleranceRelation& r, int m);

}  // namespace osd

#endif  // OPSYSDUAL_GRAPH_HPP_
