#pragma once

#include <cmath>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include <netshare/types.hpp>

namespace netshare {

inline Matrix identity(Index d) {
  if (d < 1) throw InvalidDimension("identity: dimension must be positive");
  return Matrix::Identity(d, d);
}

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a,
            const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

template <typename DerivedA, typename DerivedB>
double frobenius_distance(const Eigen::MatrixBase<DerivedA>& a,
                          const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("frobenius_distance: shape mismatch");
  return (a.derived().template cast<Complex>() -
          b.derived().template cast<Complex>())
      .norm();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = kPhysTol) {
  if (a.rows() != a.cols()) return false;
  return (a.derived() - a.derived().adjoint()).norm() < tol;
}

// Smallest eigenvalue of the Hermitian part (A + A†)/2.
template <typename Derived>
double min_hermitian_eigenvalue(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("min_hermitian_eigenvalue: square matrix required");
  Matrix h = (a.derived() + a.derived().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

template <typename Derived>
bool is_positive_semidefinite(const Eigen::MatrixBase<Derived>& a,
                              double tol = kPhysTol) {
  if (a.rows() != a.cols()) return false;
  if (!is_hermitian(a, tol)) return false;
  return min_hermitian_eigenvalue(a) > -tol;
}

template <typename Derived>
bool is_density_matrix(const Eigen::MatrixBase<Derived>& a,
                       double tol = kPhysTol) {
  if (a.rows() != a.cols()) return false;
  if (!is_hermitian(a, tol)) return false;
  if (std::abs(a.derived().trace() - Complex(1.0, 0.0)) > tol) return false;
  return min_hermitian_eigenvalue(a) > -tol;
}

// Hermitian with A^2 = I. Spectral degeneracy (A = +I or A = -I) still
// qualifies here; callers that need both outcomes present must check that
// separately.
template <typename Derived>
bool is_dichotomic(const Eigen::MatrixBase<Derived>& a, double tol = kPhysTol) {
  if (a.rows() != a.cols()) return false;
  if (!is_hermitian(a, tol)) return false;
  Matrix sq = a.derived() * a.derived();
  return (sq - Matrix::Identity(a.rows(), a.cols())).norm() < tol;
}

template <typename DerivedA, typename DerivedB>
Matrix anticommutator(const Eigen::MatrixBase<DerivedA>& a,
                      const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("anticommutator: square matrices of equal size required");
  return a.derived() * b.derived() + b.derived() * a.derived();
}

// Re tr(op rho) for a Hermitian op. The imaginary part of the trace is pure
// rounding noise for valid inputs; anything above kPhysTol signals a broken
// operand and is rejected rather than silently dropped.
template <typename DerivedOp, typename DerivedRho>
double expectation(const Eigen::MatrixBase<DerivedOp>& op,
                   const Eigen::MatrixBase<DerivedRho>& rho) {
  if (op.rows() != op.cols() || rho.rows() != rho.cols() ||
      op.rows() != rho.rows())
    throw DimensionMismatch("expectation: operator/state shape mismatch");
  if (!is_hermitian(op))
    throw NonHermitianObservable("expectation: operator is not Hermitian");
  Complex t = (op.derived() * rho.derived()).trace();
  if (std::abs(t.imag()) > kPhysTol)
    throw ImaginaryResidualExceeded("expectation: imaginary residual above tolerance");
  return t.real();
}

// Trace over the complement of `keep`. `dims` lists the local dimension of
// every tensor factor in order; `keep` lists the (sorted, distinct) factor
// indices that survive.
Matrix partial_trace(const Matrix& rho, const std::vector<Index>& dims,
                     const std::vector<int>& keep);

// op acting on factor `site`, identity on every other factor.
Matrix embed_at(const Matrix& op, const std::vector<Index>& dims, int site);

}  // namespace netshare
