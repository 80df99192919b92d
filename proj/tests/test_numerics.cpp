#include <doctest.h>

#include <random>

#include "concbound/numerics.hpp"
#include "concbound/states.hpp"
#include "oracles.hpp"

using namespace concbound;

namespace {

CMatrix random_complex(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  CMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

CMatrix random_hermitian(int n, std::uint64_t seed) {
  const CMatrix a = random_complex(n, n, seed);
  return (a + a.adjoint()) / 2.0;
}

CMatrix random_symmetric(int n, std::uint64_t seed) {
  const CMatrix a = random_complex(n, n, seed);
  return (a + a.transpose()) / 2.0;
}

void check_takagi(const CMatrix& y) {
  const Takagi t = takagi(y);
  const int n = static_cast<int>(y.rows());
  CHECK(oracle::max_abs(t.v * t.d.cast<Complex>().asDiagonal() * t.v.transpose() - y) < 1e-8);
  CHECK(oracle::max_abs(t.v.adjoint() * t.v - CMatrix::Identity(n, n)) < 1e-9);
  Eigen::JacobiSVD<CMatrix> svd(y);
  CHECK((t.d - svd.singularValues()).cwiseAbs().maxCoeff() < 1e-9);
  for (int i = 1; i < n; ++i) CHECK(t.d(i) <= t.d(i - 1));
}

}  // namespace

TEST_CASE("hermitian_eig examples") {
  SUBCASE("identity") {
    const auto e = hermitian_eig(CMatrix::Identity(2, 2));
    CHECK(e.eigenvalues(0) == doctest::Approx(1));
    CHECK(e.eigenvalues(1) == doctest::Approx(1));
  }
  SUBCASE("diagonal is sorted ascending") {
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 3;
    h(1, 1) = -1;
    const auto e = hermitian_eig(h);
    CHECK(e.eigenvalues(0) == doctest::Approx(-1));
    CHECK(e.eigenvalues(1) == doctest::Approx(3));
  }
  SUBCASE("random reconstruction") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const CMatrix h = random_hermitian(7, seed);
      const auto e = hermitian_eig(h);
      const CMatrix& q = e.eigenvectors;
      CHECK(oracle::max_abs(q * e.eigenvalues.cast<Complex>().asDiagonal() * q.adjoint() - h) < 1e-9);
      CHECK(oracle::max_abs(q.adjoint() * q - CMatrix::Identity(7, 7)) < 1e-9);
    }
  }
}

TEST_CASE("hermitian_eig errors") {
  CMatrix h = CMatrix::Zero(2, 2);
  h(0, 1) = 1;
  CHECK_THROWS_AS(hermitian_eig(h), Error);
  try {
    hermitian_eig(h);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  try {
    hermitian_eig(CMatrix::Zero(2, 3));
    FAIL("expected NonSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonSquare);
  }
}

TEST_CASE("psd_sqrt") {
  SUBCASE("identity") { CHECK(oracle::max_abs(psd_sqrt(CMatrix::Identity(3, 3)) - CMatrix::Identity(3, 3)) < 1e-14); }
  SUBCASE("diag(4, 9)") {
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 4;
    h(1, 1) = 9;
    const CMatrix s = psd_sqrt(h);
    CHECK(s(0, 0).real() == doctest::Approx(2));
    CHECK(s(1, 1).real() == doctest::Approx(3));
    CHECK(std::abs(s(0, 1)) < 1e-14);
  }
  SUBCASE("random density squares back") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const CMatrix a = random_complex(9, 9, seed);
      CMatrix rho = a * a.adjoint();
      rho /= rho.trace();
      const CMatrix s = psd_sqrt(rho);
      CHECK(oracle::max_abs(s * s - rho) < 1e-8);
      CHECK(oracle::max_abs(s - s.adjoint()) < 1e-12);
    }
  }
  SUBCASE("tiny negative eigenvalues are clamped") {
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -1e-12;
    const CMatrix s = psd_sqrt(h);
    CHECK(std::abs(s(1, 1)) == 0.0);
  }
  SUBCASE("NotPSD") {
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 1;
    h(1, 1) = -0.1;
    try {
      psd_sqrt(h);
      FAIL("expected NotPSD");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPSD);
    }
  }
}

TEST_CASE("takagi examples") {
  SUBCASE("zero") {
    const Takagi t = takagi(CMatrix::Zero(3, 3));
    CHECK(t.d.cwiseAbs().maxCoeff() == 0.0);
    CHECK(oracle::max_abs(t.v.adjoint() * t.v - CMatrix::Identity(3, 3)) < 1e-12);
  }
  SUBCASE("sigma_x") {
    CMatrix y = CMatrix::Zero(2, 2);
    y(0, 1) = y(1, 0) = 1;
    const Takagi t = takagi(y);
    CHECK(t.d(0) == doctest::Approx(1));
    CHECK(t.d(1) == doctest::Approx(1));
    check_takagi(y);
  }
  SUBCASE("diag(2, 3i)") {
    CMatrix y = CMatrix::Zero(2, 2);
    y(0, 0) = 2;
    y(1, 1) = Complex(0, 3);
    const Takagi t = takagi(y);
    CHECK(t.d(0) == doctest::Approx(3));
    CHECK(t.d(1) == doctest::Approx(2));
    CHECK(oracle::max_abs(t.v * t.d.cast<Complex>().asDiagonal() * t.v.transpose() - y) < 1e-10);
  }
  SUBCASE("NotSymmetric") {
    CMatrix y = CMatrix::Zero(2, 2);
    y(0, 1) = 1;
    try {
      takagi(y);
      FAIL("expected NotSymmetric");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymmetric);
    }
  }
}

TEST_CASE("takagi property: random, rank-deficient and degenerate inputs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) check_takagi(random_symmetric(1 + static_cast<int>(seed % 9), seed));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const CMatrix b = random_complex(6, 2, seed);
    check_takagi(b * b.transpose());  // rank 2
  }
  // U diag(1,1,1,2) U^T has a threefold singular value
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Eigen::HouseholderQR<CMatrix> qr(random_complex(4, 4, seed));
    const CMatrix u = qr.householderQ() * CMatrix::Identity(4, 4);
    Eigen::Vector4cd d(1, 1, 1, 2);
    check_takagi(u * d.asDiagonal() * u.transpose());
  }
}

TEST_CASE("kron and defects") {
  CMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const CMatrix k = kron(a, b);
  CHECK(k.rows() == 4);
  CHECK(k(0, 1) == Complex(1));
  CHECK(k(2, 3) == Complex(4));
  CHECK(k(3, 2) == Complex(4));
  CHECK(k(1, 2) == Complex(2));
  CHECK(k(1, 3) == Complex(0));
  CHECK(hermiticity_defect(b) == 0.0);
  CHECK(symmetry_defect(a) == doctest::Approx(1));
}
