#include "opsysdual/completion.hpp"

#include <cmath>
#include <vector>

#include "opsysdual/graph.hpp"

namespace osd {

namespace {

// Projection onto the PSD cone: clip negative eigenvalues at zero.
HermitianMatrix project_psd(const HermitianMatrix& a) {
  EigDecomposition eig = eig_hermitian(a);
  const int n = a.dim();
  HermitianMatrix out = HermitianMatrix::zero(n);
  for (int k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] <= 0.0) continue;
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i) v[i] = eig.eigenvectors(i, k);
    out = out + HermitianMatrix::outer(v).scaled(eig.eigenvalues[k]);
  }
  return out;
}

// Projection onto the affine set of completions: reset every specified entry
// to its given value, keep the free entries.
HermitianMatrix project_affine(const HermitianMatrix& a,
                               const PartialHermitianMatrix& x) {
  HermitianMatrix out = a;
  const ToleranceRelation& r = x.pattern();
  const int n = r.vertex_count();
  for (int i = 0; i < n; ++i) {
    out.set(i, i, x.entry(i, i));
    for (int j = i + 1; j < n; ++j) {
      if (r.adjacent(i, j)) out.set(i, j, x.entry(i, j));
    }
  }
  return out;
}

}  // namespace

HermitianMatrix chordal_complete(const PartialHermitianMatrix& x, double tol) {
  const ToleranceRelation& r = x.pattern();
  const int n = r.vertex_count();
  EliminationOrder sigma = mcs_order(r);
  if (!verify_peo(r, sigma)) {
    throw NotChordal("pattern is not chordal");
  }
  if (!is_partially_positive(x, tol)) {
    throw NotPartiallyPositive(
        "a maximal-clique block is not positive semidefinite");
  }

  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[sigma.order[k]] = k;

  HermitianMatrix m = x.values();
  std::vector<std::vector<char>> specified(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) specified[i][j] = r.related(i, j) ? 1 : 0;
  }

  // Walk the elimination order backwards; every vertex fills its entries to
  // the later non-neighbors, nearest position first. Each single fill is the
  // max-determinant-style completion over the set S of later indices already
  // tied to both endpoints by specified entries.
  for (int p = n - 2; p >= 0; --p) {
    const int u = sigma.order[p];
    for (int q = p + 1; q < n; ++q) {
      const int w = sigma.order[q];
      if (specified[u][w]) continue;
      std::vector<int> s;
      for (int t = 0; t < n; ++t) {
        if (pos[t] > p && t != w && specified[u][t] && specified[t][w]) {
          s.push_back(t);
        }
      }
      Complex fill(0.0);
      if (!s.empty()) {
        HermitianMatrix binv =
            pseudo_inverse(principal_submatrix(m, s), kDefaultRankTol);
        const int k = static_cast<int>(s.size());
        for (int a = 0; a < k; ++a) {
          for (int b = 0; b < k; ++b) {
            fill += m(u, s[a]) * binv(a, b) * m(s[b], w);
          }
        }
      }
      m.set(u, w, fill);
      specified[u][w] = specified[w][u] = 1;
    }
  }

  if (!is_psd(m, 10.0 * tol)) {
    throw VerificationFailed(
        "completed matrix failed the final PSD verification");
  }
  return m;
}

DykstraResult dykstra_complete(const PartialHermitianMatrix& x, int max_iter,
                               double tol) {
  const int n = x.dim();
  if (max_iter < 1) max_iter = 1;
  HermitianMatrix cur = x.values();  // affine-feasible start
  HermitianMatrix p = HermitianMatrix::zero(n);
  HermitianMatrix q = HermitianMatrix::zero(n);
  double residual = 0.0;
  int iterations = 0;

  // Stall detection: once the residual has stopped improving and still sits
  // far above the tolerance, the remaining budget cannot change the verdict,
  // so stop early. Both thresholds are deliberately loose.
  constexpr int kStallWindow = 300;
  constexpr int kStallMinIter = 500;
  double best_residual = -1.0;
  double checkpoint_best = -1.0;

  for (int it = 1; it <= max_iter; ++it) {
    HermitianMatrix yp = cur + p;
    HermitianMatrix y = project_psd(yp);
    p = yp - y;
    HermitianMatrix zq = y + q;
    HermitianMatrix z = project_affine(zq, x);
    q = zq - z;

    residual = (y - z).hs_norm();
    iterations = it;
    cur = z;

    if (residual <= tol) break;
    if (best_residual < 0.0 || residual < best_residual) {
      best_residual = residual;
    }
    if (it % kStallWindow == 0 && it >= kStallMinIter) {
      if (checkpoint_best >= 0.0 && best_residual > 0.999 * checkpoint_best &&
          best_residual > 1000.0 * tol) {
        break;
      }
      checkpoint_best = best_residual;
    }
  }

  return DykstraResult{residual <= tol, cur, residual, iterations};
}

}  // namespace osd
