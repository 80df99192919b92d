#pragma once

// Dense kernels over Eigen matrices. Everything here is templated on the
// matrix expression so that real and complex inputs share one code path.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "concbound/types.hpp"

namespace concbound {

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename Scalar>
Scalar conj_if_complex(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return std::conj(x);
  } else {
    return x;
  }
}

}  // namespace detail

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest absolute entry; zero for empty matrices.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

/// Default clamp tolerance for PSD-by-construction products.
template <typename Derived>
typename Derived::RealScalar default_tolerance(const Eigen::MatrixBase<Derived>& m) {
  return typename Derived::RealScalar(1e-10) * (max_abs(m) + 1);
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NonSquare,
                std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
}

template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return max_abs(m - m.adjoint());
}

template <typename Derived>
typename Derived::RealScalar symmetry_defect(const Eigen::MatrixBase<Derived>& m) {
  return max_abs(m - m.transpose());
}

template <typename Derived>
void require_hermitian(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tol) {
  require_square(m);
  const auto defect = hermiticity_defect(m);
  if (!(defect <= tol)) {
    throw Error(ErrorCode::NotHermitian, "max|H - H^dagger| = " + std::to_string(defect));
  }
}

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tol) {
  require_square(m);
  const auto defect = symmetry_defect(m);
  if (!(defect <= tol)) {
    throw Error(ErrorCode::NotSymmetric, "max|Y - Y^T| = " + std::to_string(defect));
  }
}

/// Kronecker product of two dense matrices.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  DenseMatrix<typename DerivedA::Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Scalar>
struct HermitianEig {
  Eigen::Matrix<typename Eigen::NumTraits<Scalar>::Real, Eigen::Dynamic, 1> eigenvalues;  // ascending
  DenseMatrix<Scalar> eigenvectors;                                                        // columns
};

/// Eigendecomposition H = Q diag(lambda) Q^dagger of a Hermitian matrix.
/// Only the lower triangle is read after the Hermiticity check.
template <typename Derived>
HermitianEig<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& h,
                                                     typename Derived::RealScalar tol) {
  using Scalar = typename Derived::Scalar;
  require_hermitian(h, tol);
  const DenseMatrix<Scalar> hs = (h + h.adjoint()) / typename Derived::RealScalar(2);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(hs);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

template <typename Derived>
HermitianEig<typename Derived::Scalar> hermitian_eig(const Eigen::MatrixBase<Derived>& h) {
  return hermitian_eig(h, default_tolerance(h));
}

/// Hermitian eigenvalues only, ascending.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1> hermitian_eigenvalues(
    const Eigen::MatrixBase<Derived>& h) {
  using Scalar = typename Derived::Scalar;
  require_hermitian(h, default_tolerance(h));
  const DenseMatrix<Scalar> hs = (h + h.adjoint()) / typename Derived::RealScalar(2);
  Eigen::SelfAdjointEigenSolver<DenseMatrix<Scalar>> solver(hs, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Principal square root of a PSD matrix. Eigenvalues in [-tol, 0) are
/// clamped to zero; anything more negative is rejected.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> psd_sqrt(const Eigen::MatrixBase<Derived>& h,
                                               typename Derived::RealScalar tol) {
  using Real = typename Derived::RealScalar;
  auto eig = hermitian_eig(h, tol);
  auto& lambda = eig.eigenvalues;
  if (lambda.size() > 0 && lambda.minCoeff() < -tol) {
    throw Error(ErrorCode::NotPSD, "min eigenvalue " + std::to_string(double(lambda.minCoeff())));
  }
  const auto roots = lambda.unaryExpr([](Real x) { return std::sqrt(std::max(x, Real(0))); });
  return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

template <typename Derived>
DenseMatrix<typename Derived::Scalar> psd_sqrt(const Eigen::MatrixBase<Derived>& h) {
  return psd_sqrt(h, default_tolerance(h));
}

/// Takagi factorization Y = V diag(d) V^T of a complex symmetric matrix.
struct Takagi {
  CMatrix v;   // unitary
  RVector d;   // singular values of Y, descending
};

namespace detail {

// Columns of `basis` span a subspace; returns an orthonormal completion so
// that [basis, completion] is unitary.
inline CMatrix orthonormal_complement(const CMatrix& basis, Eigen::Index n) {
  if (basis.cols() == 0) return CMatrix::Identity(n, n);
  Eigen::HouseholderQR<CMatrix> qr(basis);
  const CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  return q.rightCols(n - basis.cols());
}

}  // namespace detail

/// Takagi factorization through the real symmetric embedding
///
///   M = [[Re Y,  Im Y],
///        [Im Y, -Re Y]],
///
/// whose eigenpairs (sigma, [x; y]) with sigma > 0 give Takagi vectors
/// v = x + i y with Y conj(v) = sigma v. Eigenvalues of M come in pairs
/// +/- sigma_i, so the top half of the spectrum is the singular values of Y.
/// The numerically-null block is completed with an orthonormal basis of the
/// orthogonal complement, which is conj(ker Y).
template <typename Derived>
Takagi takagi(const Eigen::MatrixBase<Derived>& y_in, double tol) {
  static_assert(detail::is_complex<typename Derived::Scalar>::value, "takagi expects a complex matrix");
  require_symmetric(y_in, tol);
  const Eigen::Index n = y_in.rows();
  const CMatrix y = (y_in + y_in.transpose()) / 2.0;

  Eigen::MatrixXd m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = y.real();
  m.topRightCorner(n, n) = y.imag();
  m.bottomLeftCorner(n, n) = y.imag();
  m.bottomRightCorner(n, n) = -y.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);

  // Ascending eigenvalues: the last n are the nonnegative half.
  RVector d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i) = std::max(solver.eigenvalues()(2 * n - 1 - i), 0.0);
  }

  const double null_cut = 1e-12 * (d.size() ? d(0) : 0.0) + 1e-14;
  Eigen::Index rank = 0;
  while (rank < n && d(rank) > null_cut) ++rank;

  CMatrix v(n, n);
  for (Eigen::Index i = 0; i < rank; ++i) {
    const auto col = solver.eigenvectors().col(2 * n - 1 - i);
    v.col(i) = col.head(n).cast<Complex>() + Complex(0, 1) * col.tail(n).cast<Complex>();
  }
  // Re-orthonormalize the range block against rounding (modified Gram-Schmidt
  // keeps each column in its own eigenspace to first order).
  for (Eigen::Index i = 0; i < rank; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      v.col(i) -= v.col(j).dot(v.col(i)) * v.col(j);
    }
    v.col(i).normalize();
  }
  if (rank < n) {
    v.rightCols(n - rank) = detail::orthonormal_complement(v.leftCols(rank), n);
    d.tail(n - rank).setZero();
  }
  return {v, d};
}

template <typename Derived>
Takagi takagi(const Eigen::MatrixBase<Derived>& y) {
  return takagi(y, 1e-10);
}

/// Entrywise complex conjugate in the computational basis.
template <typename Derived>
auto conj(const Eigen::MatrixBase<Derived>& m) {
  return m.conjugate();
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m) {
  require_square(m);
  return m.trace();
}

}  // namespace concbound
