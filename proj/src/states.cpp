#include "concbound/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "concbound/numerics.hpp"

namespace concbound {

namespace {

void validate_dims(const Dims& dims) {
  if (dims.empty()) throw Error(ErrorCode::WrongDims, "empty subsystem list");
  for (int d : dims) {
    if (d < 1) throw Error(ErrorCode::WrongDims, "subsystem dimension " + std::to_string(d));
  }
}

std::vector<int> digits(int index, const Dims& dims) {
  std::vector<int> out(dims.size());
  for (int s = static_cast<int>(dims.size()) - 1; s >= 0; --s) {
    out[s] = index % dims[s];
    index /= dims[s];
  }
  return out;
}

int compose(const std::vector<int>& digit, const Dims& dims) {
  int index = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) index = index * dims[s] + digit[s];
  return index;
}

std::vector<int> checked_subset(const std::vector<int>& subset, const Dims& dims, bool allow_empty) {
  std::set<int> seen;
  for (int s : subset) {
    if (s < 0 || s >= static_cast<int>(dims.size()) || !seen.insert(s).second) {
      throw Error(ErrorCode::BadSubsystemIndex, "subsystem " + std::to_string(s));
    }
  }
  if (!allow_empty && seen.empty()) throw Error(ErrorCode::BadSubsystemIndex, "empty subsystem set");
  return {seen.begin(), seen.end()};
}

CVector gaussian_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

CMatrix haar_unitary(int n, std::mt19937_64& rng) {
  CMatrix g(n, n);
  for (int j = 0; j < n; ++j) g.col(j) = gaussian_vector(n, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

}  // namespace

int total_dimension(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

PureState::PureState(CVector amplitudes, Dims dims) : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  validate_dims(dims_);
  if (total_dimension(dims_) != amplitudes_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "dims product does not match vector length");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw Error(ErrorCode::NotNormalized, "norm " + std::to_string(amplitudes_.norm()));
  }
}

DensityMatrix::DensityMatrix(CMatrix matrix, Dims dims) : matrix_(std::move(matrix)), dims_(std::move(dims)) {
  validate_dims(dims_);
  require_square(matrix_);
  if (total_dimension(dims_) != matrix_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "dims product does not match matrix size");
  }
  const double defect = hermiticity_defect(matrix_);
  if (defect > kHermitianTol) {
    throw Error(ErrorCode::NotHermitian, "max|rho - rho^dagger| = " + std::to_string(defect));
  }
  matrix_ = (matrix_ + matrix_.adjoint()).eval() / 2.0;
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorCode::NotNormalized, "trace " + std::to_string(tr.real()));
  }
  const double min_eig = hermitian_eigenvalues(matrix_).minCoeff();
  if (min_eig < -kPsdTol) {
    throw Error(ErrorCode::NotPSD, "min eigenvalue " + std::to_string(min_eig));
  }
}

DensityMatrix::DensityMatrix(const PureState& psi) : DensityMatrix(psi.projector(), psi.dims()) {}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

Decomposition::Decomposition(std::vector<Member> members, const DensityMatrix& source)
    : members_(std::move(members)) {
  double total = 0;
  for (const auto& m : members_) {
    if (m.weight < 0) throw Error(ErrorCode::InvalidState, "negative weight");
    if (m.state.dimension() != source.dimension()) {
      throw Error(ErrorCode::DimensionMismatch, "member dimension differs from source");
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw Error(ErrorCode::InvalidState, "weights sum to " + std::to_string(total));
  }
  const double err = max_abs(reconstruct() - source.matrix());
  if (err > 1e-9) {
    throw Error(ErrorCode::InvalidState, "decomposition reconstruction error " + std::to_string(err));
  }
}

CMatrix Decomposition::reconstruct() const {
  const int n = members_.empty() ? 0 : members_.front().state.dimension();
  CMatrix out = CMatrix::Zero(n, n);
  for (const auto& m : members_) out += m.weight * m.state.projector();
  return out;
}

CMatrix partial_trace(const CMatrix& rho, const Dims& dims, const std::vector<int>& keep) {
  const auto kept = checked_subset(keep, dims, false);
  std::vector<int> traced;
  for (int s = 0; s < static_cast<int>(dims.size()); ++s) {
    if (!std::binary_search(kept.begin(), kept.end(), s)) traced.push_back(s);
  }
  Dims kept_dims;
  for (int s : kept) kept_dims.push_back(dims[s]);
  const int n = total_dimension(dims);
  const int nk = total_dimension(kept_dims);
  CMatrix out = CMatrix::Zero(nk, nk);
  for (int row = 0; row < n; ++row) {
    const auto rd = digits(row, dims);
    for (int col = 0; col < n; ++col) {
      const auto cd = digits(col, dims);
      bool diagonal_in_traced = true;
      for (int s : traced) {
        if (rd[s] != cd[s]) {
          diagonal_in_traced = false;
          break;
        }
      }
      if (!diagonal_in_traced) continue;
      std::vector<int> rk, ck;
      for (int s : kept) {
        rk.push_back(rd[s]);
        ck.push_back(cd[s]);
      }
      out(compose(rk, kept_dims), compose(ck, kept_dims)) += rho(row, col);
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
  const auto kept = checked_subset(keep, rho.dims(), false);
  Dims kept_dims;
  for (int s : kept) kept_dims.push_back(rho.dims()[s]);
  return DensityMatrix(partial_trace(rho.matrix(), rho.dims(), kept), kept_dims);
}

DensityMatrix reduced_state(const PureState& psi, const std::vector<int>& keep) {
  return partial_trace(DensityMatrix(psi), keep);
}

CMatrix partial_transpose(const CMatrix& rho, const Dims& dims, const std::vector<int>& part) {
  const auto sel = checked_subset(part, dims, true);
  const int n = total_dimension(dims);
  if (rho.rows() != n || rho.cols() != n) throw Error(ErrorCode::DimensionMismatch, "matrix vs dims");
  CMatrix out(n, n);
  for (int row = 0; row < n; ++row) {
    const auto rd = digits(row, dims);
    for (int col = 0; col < n; ++col) {
      auto a = rd;
      auto b = digits(col, dims);
      for (int s : sel) std::swap(a[s], b[s]);
      out(compose(a, dims), compose(b, dims)) = rho(row, col);
    }
  }
  return out;
}

CMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& part) {
  return partial_transpose(rho.matrix(), rho.dims(), part);
}

PureState ghz_state() {
  CVector v = CVector::Zero(8);
  v(0) = v(7) = 1.0 / std::sqrt(2.0);
  return PureState(v, {2, 2, 2});
}

PureState w_state() {
  CVector v = CVector::Zero(8);
  v(1) = v(2) = v(4) = 1.0 / std::sqrt(3.0);
  return PureState(v, {2, 2, 2});
}

PureState bell_state() { return maximally_entangled(2); }

PureState maximally_entangled(int d) {
  if (d < 1) throw Error(ErrorCode::DimensionTooSmall, "d = " + std::to_string(d));
  CVector v = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return PureState(v, {d, d});
}

PureState product_state(const std::vector<int>& levels, const Dims& dims) {
  validate_dims(dims);
  if (levels.size() != dims.size()) throw Error(ErrorCode::DimensionMismatch, "one level per subsystem");
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (levels[s] < 0 || levels[s] >= dims[s]) throw Error(ErrorCode::OutOfRange, "basis level");
  }
  CVector v = CVector::Zero(total_dimension(dims));
  v(compose(levels, dims)) = 1.0;
  return PureState(v, dims);
}

DensityMatrix horodecki_state(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::OutOfRange, "a = " + std::to_string(a));
  const double b = (1 + a) / 2;
  const double c = std::sqrt(1 - a * a) / 2;
  CMatrix m = CMatrix::Zero(9, 9);
  for (int i : {0, 1, 2, 3, 4, 5, 7}) m(i, i) = a;
  m(6, 6) = m(8, 8) = b;
  for (auto [i, j] : {std::pair{0, 4}, {0, 8}, {4, 8}}) m(i, j) = m(j, i) = a;
  m(6, 8) = m(8, 6) = c;
  return DensityMatrix(m / (8 * a + 1), {3, 3});
}

DensityMatrix white_noise_mix(const DensityMatrix& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::OutOfRange, "p = " + std::to_string(p));
  const int d = rho.dimension();
  return DensityMatrix(p * rho.matrix() + (1 - p) * CMatrix::Identity(d, d) / double(d), rho.dims());
}

DensityMatrix maximally_mixed(const Dims& dims) {
  validate_dims(dims);
  const int d = total_dimension(dims);
  return DensityMatrix(CMatrix::Identity(d, d) / double(d), dims);
}

DensityMatrix werner_state(double p) { return white_noise_mix(DensityMatrix(bell_state()), p); }

PureState random_pure(const Dims& dims, std::uint64_t seed) {
  validate_dims(dims);
  std::mt19937_64 rng(seed);
  CVector v = gaussian_vector(total_dimension(dims), rng);
  return PureState(v.normalized(), dims);
}

DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed) {
  validate_dims(dims);
  if (rank < 1) throw Error(ErrorCode::OutOfRange, "rank must be >= 1");
  std::mt19937_64 rng(seed);
  const int d = total_dimension(dims);
  CMatrix a(d, rank);
  for (int j = 0; j < rank; ++j) a.col(j) = gaussian_vector(d, rng);
  CMatrix m = a * a.adjoint();
  m /= m.trace().real();
  return DensityMatrix(m, dims);
}

DensityMatrix random_separable(const Dims& dims, int terms, std::uint64_t seed) {
  validate_dims(dims);
  if (terms < 1) throw Error(ErrorCode::OutOfRange, "terms must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const int d = total_dimension(dims);
  CMatrix m = CMatrix::Zero(d, d);
  double total = 0;
  for (int t = 0; t < terms; ++t) {
    CVector v = CVector::Ones(1);
    for (int ds : dims) {
      const CVector f = gaussian_vector(ds, rng).normalized();
      v = kron(v, f);
    }
    const double w = uniform(rng) + 1e-3;
    m += w * v * v.adjoint();
    total += w;
  }
  return DensityMatrix(m / total, dims);
}

int numerical_rank(const DensityMatrix& rho) {
  const RVector ev = hermitian_eigenvalues(rho.matrix());
  return static_cast<int>((ev.array() > 1e-12).count());
}

Decomposition random_decomposition(const DensityMatrix& rho, int size, std::uint64_t seed) {
  const auto eig = hermitian_eig(rho.matrix());
  std::vector<int> support;
  for (int j = static_cast<int>(eig.eigenvalues.size()) - 1; j >= 0; --j) {
    if (eig.eigenvalues(j) > 1e-12) support.push_back(j);
  }
  const int r = static_cast<int>(support.size());
  if (size < r) {
    throw Error(ErrorCode::SizeTooSmall, "size " + std::to_string(size) + " < rank " + std::to_string(r));
  }

  CMatrix u;
  if (seed == kIdentityMixingSeed) {
    u = CMatrix::Identity(size, size);
  } else {
    std::mt19937_64 rng(seed);
    u = haar_unitary(size, rng);
  }

  const int n = rho.dimension();
  std::vector<Decomposition::Member> members;
  for (int i = 0; i < size; ++i) {
    CVector unnormalized = CVector::Zero(n);
    for (int jj = 0; jj < r; ++jj) {
      const int j = support[jj];
      unnormalized += std::conj(u(i, jj)) * std::sqrt(eig.eigenvalues(j)) * eig.eigenvectors.col(j);
    }
    const double weight = unnormalized.squaredNorm();
    if (weight < 1e-15) continue;
    members.push_back({weight, PureState(unnormalized / std::sqrt(weight), rho.dims())});
  }
  // Renormalize away the clipped eigenvalue tail so the weights sum to one.
  double total = 0;
  for (const auto& m : members) total += m.weight;
  for (auto& m : members) m.weight /= total;
  return Decomposition(std::move(members), rho);
}

}  // namespace concbound
