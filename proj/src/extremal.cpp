#include "opsysdual/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace osd {

namespace {

// Absolute threshold below which a diagonal entry counts as zero.
double support_threshold(const PartialHermitianMatrix& x, double tol) {
  double dmax = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    dmax = std::max(dmax, std::abs(x.entry(i, i).real()));
  }
  return tol * std::max(1.0, dmax);
}

// Projector onto the span of the eigenvectors whose eigenvalues clear the
// relative rank threshold; aligned with numerical_rank by construction.
HermitianMatrix range_projector(const HermitianMatrix& a, double tol) {
  EigDecomposition eig = eig_hermitian(a);
  double scale = 1.0;
  for (double lambda : eig.eigenvalues) {
    scale = std::max(scale, std::abs(lambda));
  }
  HermitianMatrix p = HermitianMatrix::zero(a.dim());
  for (int k = 0; k < a.dim(); ++k) {
    if (std::abs(eig.eigenvalues[k]) <= tol * scale) continue;
    std::vector<Complex> v(a.dim());
    for (int i = 0; i < a.dim(); ++i) v[i] = eig.eigenvectors(i, k);
    p = p + HermitianMatrix::outer(v);
  }
  return p;
}

// True when some eigenvalue of the block sits within a factor of 10 of the
// rank threshold on either side, i.e. the rank call is not clear-cut.
bool rank_is_marginal(const HermitianMatrix& a, double tol) {
  EigDecomposition eig = eig_hermitian(a);
  double scale = 1.0;
  for (double lambda : eig.eigenvalues) {
    scale = std::max(scale, std::abs(lambda));
  }
  for (double lambda : eig.eigenvalues) {
    const double mag = std::abs(lambda);
    if (mag > 0.1 * tol * scale && mag < 10.0 * tol * scale) return true;
  }
  return false;
}

int rank_of_columns(std::vector<std::vector<double>> cols, double tol) {
  double scale = 1.0;
  for (const auto& c : cols) {
    double norm = 0.0;
    for (double v : c) norm += v * v;
    scale = std::max(scale, std::sqrt(norm));
  }
  const double threshold = tol * scale;

  std::vector<std::vector<double>> basis;
  for (auto& c : cols) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        double coef = 0.0;
        for (size_t i = 0; i < c.size(); ++i) coef += b[i] * c[i];
        for (size_t i = 0; i < c.size(); ++i) c[i] -= coef * b[i];
      }
    }
    double norm = 0.0;
    for (double v : c) norm += v * v;
    norm = std::sqrt(norm);
    if (norm <= threshold) continue;
    for (double& v : c) v /= norm;
    basis.push_back(std::move(c));
  }
  return static_cast<int>(basis.size());
}

}  // namespace

SupportSubgraph support_subgraph(const PartialHermitianMatrix& x, double tol) {
  const ToleranceRelation& r = x.pattern();
  const double threshold = support_threshold(x, tol);

  SupportSubgraph out;
  std::vector<char> in_support(x.dim(), 0);
  for (int i = 0; i < x.dim(); ++i) {
    if (x.entry(i, i).real() > threshold) {
      in_support[i] = 1;
      out.vertices.push_back(i);
    }
  }
  for (const auto& [i, j] : r.edges()) {
    if (in_support[i] && in_support[j]) out.edges.emplace_back(i, j);
  }

  out.connected = !out.vertices.empty();
  if (out.connected) {
    std::vector<char> seen(x.dim(), 0);
    std::queue<int> queue;
    seen[out.vertices[0]] = 1;
    queue.push(out.vertices[0]);
    int reached = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w : r.neighbors(v)) {
        if (in_support[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push(w);
        }
      }
    }
    out.connected = reached == static_cast<int>(out.vertices.size());
  }
  return out;
}

ExtremalityReport certify_extremal(const PartialHermitianMatrix& x,
                                   double tol) {
  if (!is_chordal(x.pattern())) throw NotChordal("pattern is not chordal");
  if (!is_partially_positive(x, tol)) {
    throw NotInCone("element is not in the dual cone");
  }

  CliqueBlocks cb = clique_block_map(x);
  ExtremalityReport report;
  report.marginal = false;
  bool all_rank_le_one = true;
  bool zero = true;
  for (const HermitianMatrix& block : cb.blocks) {
    const int rank = numerical_rank(block, tol);
    report.clique_ranks.push_back(rank);
    if (rank > 1) all_rank_le_one = false;
    if (rank > 0) zero = false;
    if (rank_is_marginal(block, tol)) report.marginal = true;
  }

  SupportSubgraph support = support_subgraph(x, tol);
  report.support = support.vertices;
  report.support_connected = support.connected;
  report.is_extremal = !zero && all_rank_le_one && support.connected;
  report.face_dimension = zero ? 0 : face_dimension(x, tol);

  if (!report.marginal && !zero &&
      report.is_extremal != (report.face_dimension == 1)) {
    throw VerificationFailed(
        "extremality conditions and face dimension disagree");
  }
  return report;
}

int face_dimension(const PartialHermitianMatrix& x, double tol) {
  if (!is_chordal(x.pattern())) throw NotChordal("pattern is not chordal");
  if (!is_partially_positive(x, tol)) {
    throw NotInCone("element is not in the dual cone");
  }

  CliqueBlocks cb = clique_block_map(x);
  bool zero = true;
  for (const HermitianMatrix& block : cb.blocks) {
    if (numerical_rank(block, tol) > 0) zero = false;
  }
  if (zero) throw ZeroElement("the zero element generates no ray");

  // One constraint block per clique: (I - P_C) d_C = 0 where P_C projects
  // onto range(x_C). The face dimension is the kernel dimension of the
  // stacked system over the real pattern-space coordinates.
  std::vector<ComplexMatrix> blockers;
  for (const HermitianMatrix& block : cb.blocks) {
    HermitianMatrix q =
        HermitianMatrix::identity(block.dim()) - range_projector(block, tol);
    blockers.push_back(q.to_complex());
  }

  const std::vector<HermitianMatrix> basis = pattern_space_basis(x.pattern());
  std::vector<std::vector<double>> cols;
  for (const HermitianMatrix& b : basis) {
    std::vector<double> col;
    for (size_t ci = 0; ci < cb.cliques.size(); ++ci) {
      const auto& c = cb.cliques[ci];
      const int k = static_cast<int>(c.size());
      // (I - P_C) * b_C in local coordinates.
      for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) {
          Complex s(0.0);
          for (int t = 0; t < k; ++t) {
            s += blockers[ci](p, t) * b(c[t], c[q]);
          }
          col.push_back(s.real());
          col.push_back(s.imag());
        }
      }
    }
    cols.push_back(std::move(col));
  }

  const int rank = rank_of_columns(std::move(cols), tol);
  return static_cast<int>(basis.size()) - rank;
}

PartialHermitianMatrix extremal_from_vector(const std::vector<Complex>& v,
                                            const ToleranceRelation& r) {
  if (static_cast<int>(v.size()) != r.vertex_count()) {
    throw DimMismatch("vector length does not match the pattern");
  }
  return project_to_pattern(HermitianMatrix::outer(v), r);
}

std::vector<Complex> recover_generating_vector(const PartialHermitianMatrix& x,
                                               double tol) {
  const ToleranceRelation& r = x.pattern();
  const int n = x.dim();
  const double threshold = support_threshold(x, tol);

  std::vector<int> support;
  std::vector<char> in_support(n, 0);
  for (int i = 0; i < n; ++i) {
    if (x.entry(i, i).real() > threshold) {
      in_support[i] = 1;
      support.push_back(i);
    }
  }
  if (support.empty()) throw ZeroElement("the zero element generates no ray");

  // Fix the magnitude and phase at the BFS root, then propagate along
  // support edges: x_ab = v_a * conj(v_b) determines v_b from v_a.
  std::vector<Complex> v(n, Complex(0.0));
  std::vector<char> visited(n, 0);
  const int root = support.front();
  v[root] = std::sqrt(x.entry(root, root).real());
  visited[root] = 1;
  std::queue<int> queue;
  queue.push(root);
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop();
    for (int b : r.neighbors(a)) {
      if (!in_support[b] || visited[b]) continue;
      v[b] = std::conj(x.entry(a, b)) / std::conj(v[a]);
      visited[b] = 1;
      queue.push(b);
    }
  }

  // Least-squares scale polish, then verify the reconstruction closes.
  PartialHermitianMatrix y = extremal_from_vector(v, r);
  const double denom = y.values().hs_norm();
  if (!(denom > 0.0)) {
    throw VerificationFailed("reconstructed vector vanishes");
  }
  const double s =
      hs_inner(y.values(), x.values()).real() / (denom * denom);
  if (!(s > 0.0)) {
    throw VerificationFailed("reconstruction is not aligned with the input");
  }
  const double root_s = std::sqrt(s);
  for (Complex& z : v) z *= root_s;

  y = extremal_from_vector(v, r);
  const double err = (y.values() - x.values()).hs_norm();
  if (!(err <= 100.0 * tol * std::max(1.0, x.values().hs_norm()))) {
    throw VerificationFailed("input is not the pattern projection of a "
                             "rank-one matrix");
  }
  return v;
}

}  // namespace osd
