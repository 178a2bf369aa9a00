#include "opsysdual/opsys.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace osd {

PartialHermitianMatrix::PartialHermitianMatrix(ToleranceRelation pattern,
                                               HermitianMatrix values)
    : pattern_(std::move(pattern)), values_(std::move(values)) {
  const int n = pattern_.vertex_count();
  if (values_.dim() != n) {
    throw DimMismatch("pattern has " + std::to_string(n) +
                      " vertices but values are " +
                      std::to_string(values_.dim()) + "-dimensional");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!pattern_.adjacent(i, j) && values_(i, j) != Complex(0.0)) {
        throw InvalidInput("value present on unspecified entry (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

PartialHermitianMatrix PartialHermitianMatrix::zero(
    const ToleranceRelation& pattern) {
  return PartialHermitianMatrix(pattern,
                                HermitianMatrix::zero(pattern.vertex_count()));
}

PartialHermitianMatrix PartialHermitianMatrix::operator+(
    const PartialHermitianMatrix& other) const {
  if (!(pattern_ == other.pattern_)) {
    throw ShapeMismatch("pattern mismatch in sum");
  }
  return PartialHermitianMatrix(pattern_, values_ + other.values_);
}

PartialHermitianMatrix PartialHermitianMatrix::scaled(double factor) const {
  return PartialHermitianMatrix(pattern_, values_.scaled(factor));
}

PartialHermitianMatrix project_to_pattern(const HermitianMatrix& a,
                                          const ToleranceRelation& r) {
  if (a.dim() != r.vertex_count()) {
    throw DimMismatch("matrix dimension does not match the pattern");
  }
  HermitianMatrix kept = HermitianMatrix::zero(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    kept.set(i, i, a(i, i));
    for (int j = i + 1; j < a.dim(); ++j) {
      if (r.adjacent(i, j)) kept.set(i, j, a(i, j));
    }
  }
  return PartialHermitianMatrix(r, std::move(kept));
}

std::vector<HermitianMatrix> perp_basis(const ToleranceRelation& r) {
  const int n = r.vertex_count();
  std::vector<HermitianMatrix> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (r.adjacent(i, j)) continue;
      HermitianMatrix real_part = HermitianMatrix::zero(n);
      real_part.set(i, j, 1.0);
      basis.push_back(std::move(real_part));
      HermitianMatrix imag_part = HermitianMatrix::zero(n);
      imag_part.set(i, j, Complex(0.0, 1.0));
      basis.push_back(std::move(imag_part));
    }
  }
  return basis;
}

CliqueBlocks clique_block_map(const PartialHermitianMatrix& x) {
  CliqueBlocks phi;
  phi.cliques = maximal_cliques(x.pattern());
  phi.blocks.reserve(phi.cliques.size());
  for (const auto& clique : phi.cliques) {
    phi.blocks.push_back(principal_submatrix(x.values(), clique));
  }
  return phi;
}

bool is_partially_positive(const PartialHermitianMatrix& x, double tol) {
  const CliqueBlocks phi = clique_block_map(x);
  for (const auto& block : phi.blocks) {
    if (!is_psd(block, tol)) return false;
  }
  return true;
}

bool dual_cone_member(const PartialHermitianMatrix& x, double tol) {
  return is_partially_positive(x, tol);
}

PartialHermitianMatrix assemble_ampliated(
    const std::vector<std::vector<PartialHermitianMatrix>>& blocks, int m) {
  if (m < 1) throw InvalidInput("ampliation factor must be >= 1");
  if (static_cast<int>(blocks.size()) != m) {
    throw ShapeMismatch("expected " + std::to_string(m) + " block rows");
  }
  for (const auto& row : blocks) {
    if (static_cast<int>(row.size()) != m) {
      throw ShapeMismatch("block array is not square");
    }
  }
  const ToleranceRelation& r = blocks[0][0].pattern();
  const int n = r.vertex_count();
  for (const auto& row : blocks) {
    for (const auto& x : row) {
      if (!(x.pattern() == r)) {
        throw ShapeMismatch("blocks disagree on the pattern");
      }
    }
  }
  // Blocks carry Hermitian values, so Hermitian-ness of the assembled array
  // reduces to symmetry of the array itself.
  const double scale = [&] {
    double s = 1.0;
    for (const auto& row : blocks)
      for (const auto& x : row) s = std::max(s, x.values().hs_norm());
    return s;
  }();
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const HermitianMatrix diff = blocks[i][j].values() - blocks[j][i].values();
      if (diff.hs_norm() > 1e-12 * scale) {
        throw ShapeMismatch("block array is not Hermitian");
      }
    }
  }

  const ToleranceRelation big = ampliate(r, m);
  HermitianMatrix values = HermitianMatrix::zero(n * m);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const int a = x * m + i;
          const int b = y * m + j;
          if (a <= b) values.set(a, b, blocks[i][j].entry(x, y));
        }
      }
    }
  }
  return PartialHermitianMatrix(big, std::move(values));
}

bool ampliated_member(
    const std::vector<std::vector<PartialHermitianMatrix>>& blocks, int m,
    double tol) {
  return dual_cone_member(assemble_ampliated(blocks, m), tol);
}

std::vector<HermitianMatrix> pattern_space_basis(const ToleranceRelation& r) {
  const int n = r.vertex_count();
  std::vector<HermitianMatrix> basis;
  for (int i = 0; i < n; ++i) {
    HermitianMatrix e = HermitianMatrix::zero(n);
    e.set(i, i, 1.0);
    basis.push_back(std::move(e));
  }
  for (auto [i, j] : r.edges()) {
    HermitianMatrix real_part = HermitianMatrix::zero(n);
    real_part.set(i, j, 1.0);
    basis.push_back(std::move(real_part));
    HermitianMatrix imag_part = HermitianMatrix::zero(n);
    imag_part.set(i, j, Complex(0.0, 1.0));
    basis.push_back(std::move(imag_part));
  }
  return basis;
}

}  // namespace osd
