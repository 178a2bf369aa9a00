#include "opsysdual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace osd {

namespace {

constexpr double kHermitianCheckTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kJacobiOffTol = 1e-12;

// Cyclic Jacobi on a dense real symmetric matrix, row major. Rotates until
// the off-diagonal Frobenius norm drops below kJacobiOffTol * ||A||_F.
// On return `a` is (nearly) diagonal and `v` holds the accumulated rotation,
// columns are eigenvectors: A = V diag V^T.
void jacobi_symmetric(std::vector<double>& a, std::vector<double>& v, int n) {
  v.assign(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;
  if (n == 1) return;

  auto at = [&](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<size_t>(i) * n + j];
  };

  double norm = 0.0;
  for (size_t k = 0; k < a.size(); ++k) norm += a[k] * a[k];
  norm = std::sqrt(norm);
  if (norm == 0.0) return;

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += 2.0 * at(a, p, q) * at(a, p, q);
    if (std::sqrt(off) < kJacobiOffTol * norm) return;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double app = at(a, p, p);
        const double aqq = at(a, q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  throw NoConvergence("Jacobi eigenvalue iteration did not converge in " +
                      std::to_string(kJacobiMaxSweeps) + " sweeps");
}

double spectral_scale(const std::vector<double>& eigenvalues) {
  double m = 0.0;
  for (double lambda : eigenvalues) m = std::max(m, std::abs(lambda));
  return std::max(1.0, m);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw DimMismatch("matrix product shape mismatch");
  ComplexMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

HermitianMatrix::HermitianMatrix(int dim)
    : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
  if (dim <= 0) throw InvalidInput("matrix dimension must be positive");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& full)
    : HermitianMatrix(full.rows()) {
  if (full.rows() != full.cols()) {
    throw InvalidInput("Hermitian matrix must be square");
  }
  double scale = std::max(1.0, full.frobenius_norm());
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      const Complex upper = full(i, j);
      const Complex lower = full(j, i);
      if (std::abs(upper - std::conj(lower)) > kHermitianCheckTol * scale) {
        throw InvalidInput("matrix is not Hermitian at (" + std::to_string(i) +
                           "," + std::to_string(j) + ")");
      }
      Complex value = 0.5 * (upper + std::conj(lower));
      if (i == j) value = Complex(value.real(), 0.0);
      a_[static_cast<size_t>(i) * dim_ + j] = value;
      a_[static_cast<size_t>(j) * dim_ + i] = std::conj(value);
    }
  }
}

HermitianMatrix HermitianMatrix::zero(int n) { return HermitianMatrix(n); }

HermitianMatrix HermitianMatrix::identity(int n) {
  HermitianMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

HermitianMatrix HermitianMatrix::outer(const std::vector<Complex>& v) {
  HermitianMatrix m(static_cast<int>(v.size()));
  for (int i = 0; i < m.dim_; ++i)
    for (int j = i; j < m.dim_; ++j) m.set(i, j, v[i] * std::conj(v[j]));
  return m;
}

void HermitianMatrix::set(int i, int j, Complex value) {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_) {
    throw IndexOutOfRange("entry index out of range");
  }
  if (i == j) value = Complex(value.real(), 0.0);
  a_[static_cast<size_t>(i) * dim_ + j] = value;
  a_[static_cast<size_t>(j) * dim_ + i] = std::conj(value);
}

ComplexMatrix HermitianMatrix::to_complex() const {
  ComplexMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

double HermitianMatrix::hs_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
  if (dim_ != other.dim_) throw DimMismatch("matrix sum shape mismatch");
  HermitianMatrix m(dim_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + other.a_[k];
  return m;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
  if (dim_ != other.dim_) throw DimMismatch("matrix difference shape mismatch");
  HermitianMatrix m(dim_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - other.a_[k];
  return m;
}

HermitianMatrix HermitianMatrix::scaled(double factor) const {
  HermitianMatrix m(dim_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = factor * a_[k];
  return m;
}

EigDecomposition eig_hermitian(const HermitianMatrix& a) {
  const int n = a.dim();
  const int m = 2 * n;

  // Realification [[X, -Y], [Y, X]] of A = X + iY. Each eigenvalue of A
  // shows up twice; (u; w) is an eigenvector of the realification exactly
  // when u + iw is an eigenvector of A.
  std::vector<double> b(static_cast<size_t>(m) * m, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Complex z = a(i, j);
      b[static_cast<size_t>(i) * m + j] = z.real();
      b[static_cast<size_t>(i) * m + (n + j)] = -z.imag();
      b[static_cast<size_t>(n + i) * m + j] = z.imag();
      b[static_cast<size_t>(n + i) * m + (n + j)] = z.real();
    }
  }
  std::vector<double> v;
  jacobi_symmetric(b, v, m);

  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int p, int q) {
    return b[static_cast<size_t>(p) * m + p] > b[static_cast<size_t>(q) * m + q];
  });

  EigDecomposition out;
  out.eigenvalues.resize(n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = b[static_cast<size_t>(idx[2 * k]) * m + idx[2 * k]];
  }

  // The duplicated real eigenvectors collapse to n complex directions; a
  // complex Gram-Schmidt pass over the candidates in eigenvalue order keeps
  // one representative per direction.
  out.eigenvectors = ComplexMatrix(n, n);
  std::vector<std::vector<Complex>> accepted;
  accepted.reserve(n);
  for (int c = 0; c < m && static_cast<int>(accepted.size()) < n; ++c) {
    const int col = idx[c];
    std::vector<Complex> cand(n);
    for (int i = 0; i < n; ++i) {
      cand[i] = Complex(v[static_cast<size_t>(i) * m + col],
                        v[static_cast<size_t>(n + i) * m + col]);
    }
    for (const auto& u : accepted) {
      Complex proj = 0.0;
      for (int i = 0; i < n; ++i) proj += std::conj(u[i]) * cand[i];
      for (int i = 0; i < n; ++i) cand[i] -= proj * u[i];
    }
    double norm = 0.0;
    for (const Complex& z : cand) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (Complex& z : cand) z /= norm;
    accepted.push_back(std::move(cand));
  }
  if (static_cast<int>(accepted.size()) < n) {
    throw NoConvergence("eigenvector extraction lost rank");
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = accepted[k][i];
  return out;
}

bool is_psd(const HermitianMatrix& a, double tol) {
  const auto eig = eig_hermitian(a);
  const double lambda_min = eig.eigenvalues.back();
  return lambda_min >= -tol * spectral_scale(eig.eigenvalues);
}

int numerical_rank(const HermitianMatrix& a, double tol) {
  const auto eig = eig_hermitian(a);
  const double threshold = tol * spectral_scale(eig.eigenvalues);
  int rank = 0;
  for (double lambda : eig.eigenvalues) {
    if (std::abs(lambda) > threshold) ++rank;
  }
  return rank;
}

HermitianMatrix pseudo_inverse(const HermitianMatrix& a, double tol) {
  const int n = a.dim();
  const auto eig = eig_hermitian(a);
  const double threshold = tol * spectral_scale(eig.eigenvalues);
  ComplexMatrix acc(n, n);
  for (int k = 0; k < n; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (std::abs(lambda) <= threshold) continue;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        acc(i, j) += eig.eigenvectors(i, k) *
                     std::conj(eig.eigenvectors(j, k)) / lambda;
      }
    }
  }
  return HermitianMatrix(acc);
}

HermitianMatrix principal_submatrix(const HermitianMatrix& a,
                                    const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  if (k == 0) throw InvalidInput("principal submatrix needs a nonempty index set");
  for (int i : s) {
    if (i < 0 || i >= a.dim()) {
      throw IndexOutOfRange("submatrix index " + std::to_string(i) +
                            " out of range");
    }
  }
  HermitianMatrix m(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) m.set(i, j, a(s[i], s[j]));
  return m;
}

Complex hs_inner(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimMismatch("inner product dim mismatch");
  Complex s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimMismatch("inner product shape mismatch");
  }
  Complex s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s;
}

}  // namespace osd
