#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "opsysdual/linalg.hpp"
#include "support/oracles.hpp"

using osd::Complex;
using osd::ComplexMatrix;
using osd::HermitianMatrix;

namespace {

// ||A - V diag(lambda) V*|| / ||A||, plus the worst deviation of V* V from
// the identity. Both must be tiny for the decomposition to count.
double reconstruction_error(const HermitianMatrix& a) {
  osd::EigDecomposition eig = osd::eig_hermitian(a);
  const int n = a.dim();
  ComplexMatrix rebuilt(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < n; ++k) {
        sum += eig.eigenvectors(i, k) * eig.eigenvalues[k] *
               std::conj(eig.eigenvectors(j, k));
      }
      rebuilt(i, j) = sum;
    }
  }
  ComplexMatrix diff(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) diff(i, j) = rebuilt(i, j) - a(i, j);
  }
  double denom = std::max(1.0, a.to_complex().frobenius_norm());
  return diff.frobenius_norm() / denom;
}

double orthonormality_error(const ComplexMatrix& v) {
  double worst = 0.0;
  for (int i = 0; i < v.cols(); ++i) {
    for (int j = 0; j < v.cols(); ++j) {
      Complex dot = 0.0;
      for (int k = 0; k < v.rows(); ++k) {
        dot += std::conj(v(k, i)) * v(k, j);
      }
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("hermitian construction checks symmetry and realness") {
  CHECK_THROWS_AS(HermitianMatrix(0), osd::InvalidInput);
  CHECK_THROWS_AS(HermitianMatrix(-2), osd::InvalidInput);

  ComplexMatrix bad(2, 2);
  bad(0, 0) = 1.0;
  bad(0, 1) = Complex(0.0, 1.0);
  bad(1, 0) = Complex(0.0, 1.0);  // should be -i
  bad(1, 1) = 1.0;
  CHECK_THROWS_AS(HermitianMatrix{bad}, osd::InvalidInput);

  ComplexMatrix good(2, 2);
  good(0, 0) = 2.0;
  good(0, 1) = Complex(1.0, 3.0);
  good(1, 0) = Complex(1.0, -3.0);
  good(1, 1) = -1.0;
  HermitianMatrix h(good);
  CHECK(h(1, 0) == std::conj(h(0, 1)));
  CHECK(h(0, 0).imag() == 0.0);

  HermitianMatrix s(2);
  s.set(0, 1, Complex(2.0, 5.0));
  CHECK(s(1, 0) == Complex(2.0, -5.0));
  s.set(1, 1, Complex(3.0, 0.5));  // imaginary part discarded on the diagonal
  CHECK(s(1, 1) == Complex(3.0, 0.0));
}

TEST_CASE("outer products, norms and arithmetic") {
  std::vector<Complex> v{Complex(1.0, 1.0), Complex(0.0, -2.0)};
  HermitianMatrix x = HermitianMatrix::outer(v);
  CHECK(x(0, 0) == Complex(2.0, 0.0));
  CHECK(x(1, 1) == Complex(4.0, 0.0));
  CHECK(x(0, 1) == v[0] * std::conj(v[1]));

  CHECK(HermitianMatrix::identity(3).hs_norm() == doctest::Approx(std::sqrt(3.0)));
  CHECK((x - x).hs_norm() == 0.0);
  CHECK((x + x).hs_norm() == doctest::Approx(x.scaled(2.0).hs_norm()));
  CHECK_THROWS_AS(x + HermitianMatrix::identity(3), osd::DimMismatch);
}

TEST_CASE("eigendecomposition matches hand-computed spectra") {
  // [[2, 1], [1, 2]] has eigenvalues 3 and 1.
  HermitianMatrix a(2);
  a.set(0, 0, 2.0);
  a.set(1, 1, 2.0);
  a.set(0, 1, 1.0);
  osd::EigDecomposition eig = osd::eig_hermitian(a);
  CHECK(eig.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));

  // [[0, -i], [i, 0]] (Pauli y) has eigenvalues +-1.
  HermitianMatrix pauli(2);
  pauli.set(0, 1, Complex(0.0, -1.0));
  eig = osd::eig_hermitian(pauli);
  CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(reconstruction_error(pauli) < 1e-12);
}

TEST_CASE("eigendecomposition reconstructs random matrices to high accuracy") {
  std::mt19937_64 rng(42);
  for (int n : {1, 2, 3, 5, 8, 13, 24}) {
    for (int trial = 0; trial < 5; ++trial) {
      HermitianMatrix a = testsupport::random_hermitian(rng, n);
      CHECK(reconstruction_error(a) < 1e-9);
      osd::EigDecomposition eig = osd::eig_hermitian(a);
      CHECK(orthonormality_error(eig.eigenvectors) < 1e-9);
      CHECK(std::is_sorted(eig.eigenvalues.rbegin(), eig.eigenvalues.rend()));
    }
  }
}

TEST_CASE("degenerate spectra are handled") {
  CHECK(reconstruction_error(HermitianMatrix::identity(6)) < 1e-12);
  CHECK(reconstruction_error(HermitianMatrix::zero(4)) == 0.0);

  // Rank-one with a five-fold zero eigenvalue.
  std::mt19937_64 rng(3);
  HermitianMatrix p = HermitianMatrix::outer(testsupport::random_vector(rng, 6));
  CHECK(reconstruction_error(p) < 1e-9);
  osd::EigDecomposition eig = osd::eig_hermitian(p);
  for (int k = 1; k < 6; ++k) {
    CHECK(std::abs(eig.eigenvalues[k]) < 1e-9 * eig.eigenvalues[0]);
  }
}

TEST_CASE("psd test applies a relative eigenvalue floor") {
  CHECK(osd::is_psd(HermitianMatrix::identity(3)));
  CHECK(osd::is_psd(HermitianMatrix::zero(3)));

  HermitianMatrix a = HermitianMatrix::identity(2).scaled(-1.0);
  CHECK(!osd::is_psd(a));

  // Tiny negative dip below the tolerance floor still counts as PSD...
  HermitianMatrix dip(2);
  dip.set(0, 0, 1.0);
  dip.set(1, 1, -1e-12);
  CHECK(osd::is_psd(dip, 1e-9));
  // ...but a clear violation does not, at any reasonable tolerance.
  dip.set(1, 1, -1e-3);
  CHECK(!osd::is_psd(dip, 1e-9));

  // The floor is relative: scaling the matrix up scales the floor with it.
  HermitianMatrix scaled = dip.scaled(1e9);
  CHECK(!osd::is_psd(scaled, 1e-9));
  CHECK(osd::is_psd(dip.scaled(1e-12), 1e-9));
}

TEST_CASE("numerical rank and pseudo-inverse") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const int r = trial % (n + 1);
    HermitianMatrix a = r == 0 ? HermitianMatrix::zero(n)
                               : testsupport::random_psd(rng, n, r);
    CHECK(osd::numerical_rank(a) == r);

    HermitianMatrix pinv = osd::pseudo_inverse(a);
    // A A+ A = A characterizes the Moore-Penrose inverse on Hermitians.
    ComplexMatrix prod = a.to_complex() * pinv.to_complex() * a.to_complex();
    ComplexMatrix diff(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) diff(i, j) = prod(i, j) - a(i, j);
    }
    CHECK(diff.frobenius_norm() < 1e-8 * std::max(1.0, a.hs_norm()));
  }

  HermitianMatrix id = HermitianMatrix::identity(3);
  CHECK((osd::pseudo_inverse(id.scaled(2.0)) - id.scaled(0.5)).hs_norm() <
        1e-12);
}

TEST_CASE("principal submatrices of psd matrices stay psd") {
  std::mt19937_64 rng(5);
  HermitianMatrix a = testsupport::random_psd(rng, 6);
  for (std::vector<int> s : {std::vector<int>{0}, {1, 4}, {0, 2, 5}, {3}}) {
    HermitianMatrix sub = osd::principal_submatrix(a, s);
    CHECK(sub.dim() == static_cast<int>(s.size()));
    CHECK(osd::is_psd(sub));
  }
  HermitianMatrix sub = osd::principal_submatrix(a, {1, 3});
  CHECK(sub(0, 1) == a(1, 3));

  CHECK_THROWS_AS(osd::principal_submatrix(a, {0, 6}), osd::IndexOutOfRange);
  CHECK_THROWS_AS(osd::principal_submatrix(a, {-1}), osd::IndexOutOfRange);
}

TEST_CASE("hilbert-schmidt inner product is conjugate linear in the first "
          "argument and real on hermitian pairs") {
  std::mt19937_64 rng(8);
  HermitianMatrix a = testsupport::random_hermitian(rng, 4);
  HermitianMatrix b = testsupport::random_hermitian(rng, 4);

  Complex ab = osd::hs_inner(a, b);
  Complex ba = osd::hs_inner(b, a);
  CHECK(std::abs(ab.imag()) < 1e-12 * std::abs(ab));
  CHECK(std::abs(ab - std::conj(ba)) < 1e-12 * std::abs(ab));

  CHECK(std::abs(osd::hs_inner(a, a).real() - a.hs_norm() * a.hs_norm()) <
        1e-10 * a.hs_norm() * a.hs_norm());

  // Against the dense overload.
  Complex dense = osd::hs_inner(a.to_complex(), b.to_complex());
  CHECK(std::abs(ab - dense) < 1e-12 * std::max(1.0, std::abs(ab)));
}
