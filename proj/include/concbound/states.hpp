#pragma once

#include <cstdint>
#include <vector>

#include "concbound/types.hpp"

namespace concbound {

/// Total Hilbert-space dimension of a subsystem list.
int total_dimension(const Dims& dims);

/// Unit-norm state vector with tensor structure. Basis index of |i j k> is
/// i*d2*d3 + j*d3 + k (leftmost factor most significant).
class PureState {
 public:
  PureState(CVector amplitudes, Dims dims);

  const CVector& amplitudes() const { return amplitudes_; }
  const Dims& dims() const { return dims_; }
  int dimension() const { return static_cast<int>(amplitudes_.size()); }

  CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  CVector amplitudes_;
  Dims dims_;
};

/// Hermitian, unit-trace, PSD matrix with tensor structure.
class DensityMatrix {
 public:
  static constexpr double kHermitianTol = 1e-10;
  static constexpr double kTraceTol = 1e-10;
  static constexpr double kPsdTol = 1e-9;

  DensityMatrix(CMatrix matrix, Dims dims);
  explicit DensityMatrix(const PureState& psi);

  const CMatrix& matrix() const { return matrix_; }
  const Dims& dims() const { return dims_; }
  int dimension() const { return static_cast<int>(matrix_.rows()); }

  double purity() const;

 private:
  CMatrix matrix_;
  Dims dims_;
};

/// Pure-state ensemble {p_i, |psi_i>} that reproduces a given density matrix.
class Decomposition {
 public:
  struct Member {
    double weight;
    PureState state;
  };

  /// Validates weights and that sum p_i |psi_i><psi_i| equals `source`
  /// within 1e-9.
  Decomposition(std::vector<Member> members, const DensityMatrix& source);

  const std::vector<Member>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  CMatrix reconstruct() const;

 private:
  std::vector<Member> members_;
};

CMatrix partial_trace(const CMatrix& rho, const Dims& dims, const std::vector<int>& keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

/// Reduced state of a pure state on the kept subsystems.
DensityMatrix reduced_state(const PureState& psi, const std::vector<int>& keep);

/// Transposes the selected tensor factors; result is Hermitian with unit trace
/// but in general not PSD.
CMatrix partial_transpose(const CMatrix& rho, const Dims& dims, const std::vector<int>& part);
CMatrix partial_transpose(const DensityMatrix& rho, const std::vector<int>& part);

// Named states.
PureState ghz_state();
PureState w_state();
PureState bell_state();
PureState product_state(const std::vector<int>& levels, const Dims& dims);
PureState maximally_entangled(int d);

/// 3x3 PPT entangled family, parameter a in [0, 1].
DensityMatrix horodecki_state(double a);

/// p*rho + (1-p)*I/d.
DensityMatrix white_noise_mix(const DensityMatrix& rho, double p);

DensityMatrix maximally_mixed(const Dims& dims);

/// Two-qubit Werner state p*|Bell><Bell| + (1-p)*I/4.
DensityMatrix werner_state(double p);

PureState random_pure(const Dims& dims, std::uint64_t seed);
DensityMatrix random_density(const Dims& dims, int rank, std::uint64_t seed);

/// Convex mixture of `terms` random product states (one factor per subsystem).
DensityMatrix random_separable(const Dims& dims, int terms, std::uint64_t seed);

/// Seed value that makes random_decomposition return the eigen-ensemble
/// itself (the unitary mixing block is the identity).
inline constexpr std::uint64_t kIdentityMixingSeed = 0;

/// Random pure-state decomposition of rho with `size` members, built from the
/// eigen-ensemble through the first r columns of an m x m Haar unitary.
Decomposition random_decomposition(const DensityMatrix& rho, int size, std::uint64_t seed);

/// Number of eigenvalues above 1e-12.
int numerical_rank(const DensityMatrix& rho);

}  // namespace concbound
