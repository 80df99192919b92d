#pragma once

// Test-side reference computations, written independently of the library
// routines they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "concbound/states.hpp"

namespace oracle {

using concbound::CMatrix;
using concbound::Complex;

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Two-qubit concurrence from the spin-flipped state, in long double.
inline double wootters(const CMatrix& rho) {
  using LComplex = std::complex<long double>;
  using LMatrix = Eigen::Matrix<LComplex, 4, 4>;
  const LMatrix r = rho.cast<LComplex>();
  Eigen::SelfAdjointEigenSolver<LMatrix> es(r);
  const Eigen::Matrix<long double, 4, 1> roots = es.eigenvalues().cwiseMax(0.0L).cwiseSqrt();
  const LMatrix sqrt_r = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
  LMatrix flip = LMatrix::Zero();
  flip(0, 3) = flip(3, 0) = -1.0L;
  flip(1, 2) = flip(2, 1) = 1.0L;
  LMatrix m = sqrt_r * (flip * r.conjugate() * flip) * sqrt_r;
  m = (0.5L * (m + m.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<LMatrix> em(m, Eigen::EigenvaluesOnly);
  std::vector<long double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(em.eigenvalues()(i), 0.0L)));
  std::sort(l.begin(), l.end(), std::greater<>());
  return static_cast<double>(std::max(0.0L, l[0] - l[1] - l[2] - l[3]));
}

// Purity of the first factor of a bipartite pure state, via the coefficient
// matrix psi_ij: rho_A = M M^dagger.
inline double purity_a(const concbound::CVector& psi, int m, int n) {
  CMatrix mat(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) mat(i, j) = psi(i * n + j);
  const CMatrix rho_a = mat * mat.adjoint();
  return (rho_a * rho_a).trace().real();
}

// Single-qubit purities of a three-qubit pure state, summed.
inline double qubit_purity_sum(const concbound::CVector& psi) {
  double total = 0;
  for (int party = 0; party < 3; ++party) {
    CMatrix r = CMatrix::Zero(2, 2);
    for (int x = 0; x < 8; ++x)
      for (int y = 0; y < 8; ++y) {
        const int bx = (x >> (2 - party)) & 1, by = (y >> (2 - party)) & 1;
        // other bits must agree
        const int mask = 7 ^ (1 << (2 - party));
        if ((x & mask) != (y & mask)) continue;
        r(bx, by) += psi(x) * std::conj(psi(y));
      }
    total += (r * r).trace().real();
  }
  return total;
}

inline double ghz_curve(double p) {
  const double x = 0.75 * (5 * p - 1);
  return p >= 0.2 ? x * x / 6 : 0.0;
}

inline double w_curve(double p) {
  const double s3 = std::sqrt(3.0);
  const double x = p * (8 + s3) - s3;
  return x > 0 ? x * x / 96 : 0.0;
}

inline const double kWThreshold = std::sqrt(3.0) / (8 + std::sqrt(3.0));
inline const double kWPptBoundary = 3 * (8 * std::sqrt(2.0) - 3) / 119;

}  // namespace oracle
