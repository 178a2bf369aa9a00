#include "opsysdual/structure.hpp"

#include <algorithm>
#include <queue>

#include "opsysdual/opsys.hpp"

namespace osd {

namespace {

constexpr double kSpanTol = 1e-8;

// Largest BFS distance from `start` within its component.
int eccentricity(const ToleranceRelation& r, int start) {
  std::vector<int> dist(r.vertex_count(), -1);
  std::queue<int> queue;
  dist[start] = 0;
  queue.push(start);
  int far = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    far = std::max(far, dist[v]);
    for (int w : r.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return far;
}

double dot_norm(const ComplexMatrix& m) { return m.frobenius_norm(); }

Complex dot(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s(0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

void axpy(ComplexMatrix& m, Complex c, const ComplexMatrix& b) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) -= c * b(i, j);
}

void scale(ComplexMatrix& m, double f) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= f;
}

}  // namespace

int EnvelopeDescriptor::algebra_dim() const {
  int d = 0;
  for (int s : block_sizes) d += s * s;
  return d;
}

EnvelopeDescriptor envelope_of_primal(const ToleranceRelation& r) {
  EnvelopeDescriptor out;
  out.labels = connected_components(r);
  for (const auto& k : out.labels) {
    out.block_sizes.push_back(static_cast<int>(k.size()));
  }
  return out;
}

EnvelopeDescriptor envelope_of_dual(const ToleranceRelation& r) {
  EnvelopeDescriptor out;
  out.labels = maximal_cliques(r);
  for (const auto& c : out.labels) {
    out.block_sizes.push_back(static_cast<int>(c.size()));
  }
  return out;
}

int propagation_primal(const ToleranceRelation& r) {
  int prop = 1;
  for (int v = 0; v < r.vertex_count(); ++v) {
    prop = std::max(prop, eccentricity(r, v));
  }
  return prop;
}

int propagation_dual(const ToleranceRelation& r) {
  if (!is_chordal(r)) throw NotChordal("pattern is not chordal");
  return is_equivalence(r) ? 1 : 2;
}

SpanResult span_propagation(const std::vector<HermitianMatrix>& generators,
                            int ambient_dim) {
  if (generators.empty()) throw InvalidInput("no generators given");
  if (ambient_dim < 1) throw InvalidInput("ambient dimension must be >= 1");
  const int n = generators[0].dim();
  for (const auto& g : generators) {
    if (g.dim() != n) throw DimMismatch("generators have mixed dimensions");
  }

  std::vector<ComplexMatrix> basis;  // HS-orthonormal span basis

  // Adds the direction of m to the basis unless it already lies in the span
  // at relative tolerance kSpanTol. Two orthogonalization passes keep the
  // basis orthonormal through long product chains.
  auto add = [&basis](ComplexMatrix m) {
    double norm = dot_norm(m);
    if (norm <= kSpanTol) return;
    scale(m, 1.0 / norm);
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexMatrix& b : basis) axpy(m, dot(b, m), b);
    }
    double residual = dot_norm(m);
    if (residual <= kSpanTol) return;
    scale(m, 1.0 / residual);
    basis.push_back(std::move(m));
  };

  SpanResult result{false, 0, {}};
  for (const auto& g : generators) add(g.to_complex());

  int stalls = 0;
  size_t multiplied = 0;  // prefix of the basis already fed to the products
  const int max_rounds = n * n;
  for (int k = 1; k <= max_rounds; ++k) {
    const int dim = static_cast<int>(basis.size());
    result.dims.push_back(dim);
    if (dim > ambient_dim) {
      throw InvalidInput("span exceeded the stated ambient dimension");
    }
    if (dim == ambient_dim) {
      result.reached = true;
      result.propagation = k;
      return result;
    }
    if (k > 1 && dim == result.dims[k - 2]) {
      if (++stalls >= 2) return result;
    } else {
      stalls = 0;
    }

    // Only directions new since the last round can produce anything outside
    // the current span.
    const size_t snapshot = basis.size();
    for (size_t b = multiplied; b < snapshot; ++b) {
      for (const auto& g : generators) {
        add(basis[b] * g.to_complex());
      }
    }
    multiplied = snapshot;
  }
  return result;
}

std::vector<HermitianMatrix> dual_span_generators(const ToleranceRelation& r) {
  const auto cliques = maximal_cliques(r);
  int total = 0;
  std::vector<int> offset;
  for (const auto& c : cliques) {
    offset.push_back(total);
    total += static_cast<int>(c.size());
  }

  std::vector<HermitianMatrix> out;
  for (const HermitianMatrix& b : pattern_space_basis(r)) {
    HermitianMatrix g(total);
    for (size_t ci = 0; ci < cliques.size(); ++ci) {
      const auto& c = cliques[ci];
      for (size_t p = 0; p < c.size(); ++p) {
        for (size_t q = p; q < c.size(); ++q) {
          g.set(offset[ci] + static_cast<int>(p),
                offset[ci] + static_cast<int>(q), b(c[p], c[q]));
        }
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace osd
