#pragma once

#include <map>
#include <vector>

#include "concbound/generators.hpp"
#include "concbound/states.hpp"

namespace concbound {

/// Strictly increasing list of generator indices t_1 < ... < t_k.
class SubsetSelector {
 public:
  SubsetSelector(std::vector<int> indices, int count);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  auto operator<=>(const SubsetSelector&) const = default;

 private:
  std::vector<int> indices_;
};

/// Complex weights u_s with |u_s| <= 1.
class CoefficientVector {
 public:
  explicit CoefficientVector(std::vector<Complex> weights);

  /// All ones, the default choice in the closed-form examples.
  static CoefficientVector ones(int k);

  const std::vector<Complex>& weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }

 private:
  std::vector<Complex> weights_;
};

/// n choose k as a double (exact in the ranges used here).
double binomial(int n, int k);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<SubsetSelector> all_subsets(int n, int k);

struct SubsetTerm {
  SubsetSelector subset;
  std::vector<Complex> coefficients;  // u for bipartite, (u, v, w) concatenated for triples
  double delta;
  std::string split;                  // split label, empty for a single family
};

/// Aggregated lower bound on a squared concurrence together with the
/// per-subset evidence that produced it.
struct BoundReport {
  double bound_on_c_squared = 0;
  double prefactor = 0;
  int k = 0;
  int n_generators = 0;
  std::vector<SubsetTerm> per_subset;
  double wall_time_seconds = 0;

  double concurrence_bound() const;

  /// Recomputes prefactor * sum(delta^2) from the stored terms.
  double recompute() const;
};

using Assignments = std::map<SubsetSelector, CoefficientVector>;

/// sqrt(2 (1 - Tr rho_A^2)) for the given split.
double concurrence_pure(const PureState& psi, const Bipartition& split);

/// sqrt(sum_t |<psi|J_t|psi*>|^2).
double concurrence_pure_sumrule(const PureState& psi, const GeneratorSet& gens);

/// <psi| S |psi*>.
Complex conjugate_expectation(const PureState& psi, const CMatrix& s);

/// S = sum_s u_s J_{t_s}.
CMatrix combine(const GeneratorSet& gens, const SubsetSelector& t, const CoefficientVector& u);

/// Holds sqrt(rho) and its conjugate so repeated spectrum evaluations for
/// one state cost a single SVD each.
class SpectrumEvaluator {
 public:
  explicit SpectrumEvaluator(const DensityMatrix& rho);

  RVector spectrum(const CMatrix& s) const;
  double gap(const CMatrix& s) const;
  double delta(const CMatrix& s) const;
  int dimension() const { return static_cast<int>(sqrt_rho_.rows()); }

 private:
  CMatrix sqrt_rho_;
  CMatrix sqrt_rho_conj_;
};

/// Square roots of the eigenvalues of rho S rho* S^dagger, descending. Computed
/// as the singular values of sqrt(rho) S conj(sqrt(rho)), which are the
/// eigenvalues of the Hermitian sqrt(sqrt(rho) S rho* S^dagger sqrt(rho)).
RVector lambda_spectrum(const DensityMatrix& rho, const CMatrix& s);

/// Same spectrum from the non-Hermitian product rho S rho* S^dagger (real
/// parts of its eigenvalues, clamped at 0). Kept as a cross-check.
RVector lambda_spectrum_via_product(const DensityMatrix& rho, const CMatrix& s);

/// lambda_1 - sum_{i>1} lambda_i, not clamped.
double spectral_gap(const RVector& lambda_descending);

/// max(0, lambda_1 - sum_{i>1} lambda_i) with rounding residue in
/// [-1e-10, 0) mapped to 0.
double delta_from_spectrum(const RVector& lambda_descending);

double delta_k(const DensityMatrix& rho, const GeneratorSet& gens, const SubsetSelector& t,
               const CoefficientVector& u);

/// N / (k^2 C(N, k)) * sum over assigned subsets of Delta_k^2. Subsets not in
/// `assignments` contribute 0.
BoundReport observation1_bound(const DensityMatrix& rho, const GeneratorSet& gens, int k,
                               const Assignments& assignments);

/// Closed two-qubit formula max(0, l1 - l2 - l3 - l4).
double wootters_concurrence(const DensityMatrix& rho);

/// Delta with all N generators and a unit-norm coefficient vector; a lower
/// bound on C itself.
double delta_total_bound(const DensityMatrix& rho, const GeneratorSet& gens, const std::vector<Complex>& u);

/// sum_i p_i |<psi_i| S |psi_i*>|.
double decomposition_average(const Decomposition& dec, const CMatrix& s);

/// Minimum eigenvalue of the partial transpose on side A of the split.
double ppt_min_eigenvalue(const DensityMatrix& rho, const Bipartition& split);

/// Most negative partial-transpose eigenvalue over every one-vs-rest split.
double ppt_min_eigenvalue_worst_split(const DensityMatrix& rho);

}  // namespace concbound
