#ifndef OPSYSDUAL_LINALG_HPP_
#define OPSYSDUAL_LINALG_HPP_

#include <complex>
#include <vector>

#include "opsysdual/errors.hpp"

namespace osd {

using Complex = std::complex<double>;

// Default relative tolerances used across the library.
inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-8;

// Plain dense complex matrix, row major. No structure is enforced; this is
// the working type for eigenvectors, products and other intermediates.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  ComplexMatrix adjoint() const;
  double frobenius_norm() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  int rows_, cols_;
  std::vector<Complex> a_;
};

// Dense complex Hermitian matrix. Construction checks conjugate symmetry to
// 1e-12 relative and then symmetrizes exactly, so entries(j,i) is always the
// exact conjugate of entries(i,j) and the diagonal is exactly real.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int dim);
  // From a full dense matrix; throws InvalidInput if not Hermitian within
  // 1e-12 relative.
  explicit HermitianMatrix(const ComplexMatrix& full);

  static HermitianMatrix zero(int n);
  static HermitianMatrix identity(int n);
  // The rank one matrix v v*.
  static HermitianMatrix outer(const std::vector<Complex>& v);

  int dim() const { return dim_; }

  const Complex& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * dim_ + j];
  }
  // Sets both (i, j) and its conjugate at (j, i). For i == j the imaginary
  // part is discarded.
  void set(int i, int j, Complex value);

  ComplexMatrix to_complex() const;
  double hs_norm() const;

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  HermitianMatrix scaled(double factor) const;

  bool operator==(const HermitianMatrix& other) const {
    return dim_ == other.dim_ && a_ == other.a_;
  }

 private:
  int dim_;
  std::vector<Complex> a_;
};

struct EigDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // orthonormal columns, k-th column pairs
                                    // with eigenvalues[k]
};

// Eigendecomposition of a Hermitian matrix through the real symmetric
// realification [[Re A, -Im A], [Im A, Re A]] and a cyclic Jacobi sweep.
// Throws NoConvergence if the Jacobi iteration fails to settle within its
// sweep cap.
EigDecomposition eig_hermitian(const HermitianMatrix& a);

// lambda_min(A) >= -tol * max(1, max_k |lambda_k|).
bool is_psd(const HermitianMatrix& a, double tol = kDefaultPsdTol);

// Number of eigenvalues with |lambda| > tol * max(1, max_k |lambda_k|).
int numerical_rank(const HermitianMatrix& a, double tol = kDefaultRankTol);

// Moore-Penrose inverse; eigenvalues at or below the rank threshold are
// dropped.
HermitianMatrix pseudo_inverse(const HermitianMatrix& a,
                               double tol = kDefaultRankTol);

// (a_{ij})_{i,j in s} for a sorted index set s. Throws IndexOutOfRange.
HermitianMatrix principal_submatrix(const HermitianMatrix& a,
                                    const std::vector<int>& s);

// trace(A* B). Real whenever both arguments are Hermitian (up to rounding).
Complex hs_inner(const HermitianMatrix& a, const HermitianMatrix& b);
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace osd

#endif  // OPSYSDUAL_LINALG_HPP_
