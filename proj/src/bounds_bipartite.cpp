#include "concbound/bounds_bipartite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "concbound/numerics.hpp"

namespace concbound {

namespace {

void require_operator_symmetric(const CMatrix& s) {
  const double defect = symmetry_defect(s);
  if (defect > 1e-10) throw Error(ErrorCode::NotSymmetric, "operator max|S - S^T| = " + std::to_string(defect));
}

}  // namespace

SubsetSelector::SubsetSelector(std::vector<int> indices, int count) : indices_(std::move(indices)) {
  if (indices_.empty()) throw Error(ErrorCode::BadK, "empty subset");
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0 || indices_[i] >= count) throw Error(ErrorCode::OutOfRange, "subset index out of range");
    if (i > 0 && indices_[i] <= indices_[i - 1]) throw Error(ErrorCode::OutOfRange, "subset must be increasing");
  }
}

CoefficientVector::CoefficientVector(std::vector<Complex> weights) : weights_(std::move(weights)) {
  for (const auto& w : weights_) {
    if (!(std::abs(w) <= 1.0 + 1e-12)) throw Error(ErrorCode::OutOfRange, "|u_s| must be <= 1");
  }
}

CoefficientVector CoefficientVector::ones(int k) { return CoefficientVector(std::vector<Complex>(k, 1.0)); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  double out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

std::vector<SubsetSelector> all_subsets(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + ", N = " + std::to_string(n));
  std::vector<SubsetSelector> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.emplace_back(idx, n);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double BoundReport::concurrence_bound() const { return std::sqrt(std::max(bound_on_c_squared, 0.0)); }

double BoundReport::recompute() const {
  double sum = 0;
  for (const auto& term : per_subset) sum += term.delta * term.delta;
  return prefactor * sum;
}

double concurrence_pure(const PureState& psi, const Bipartition& split) {
  if (split.parties() != static_cast<int>(psi.dims().size())) {
    throw Error(ErrorCode::DimensionMismatch, "split does not match the state's parties");
  }
  const double purity = reduced_state(psi, split.side_a()).purity();
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

Complex conjugate_expectation(const PureState& psi, const CMatrix& s) {
  const CVector& a = psi.amplitudes();
  return a.dot(s * a.conjugate());
}

double concurrence_pure_sumrule(const PureState& psi, const GeneratorSet& gens) {
  if (gens.dimension() != psi.dimension()) throw Error(ErrorCode::DimensionMismatch, "generators vs state");
  double sum = 0;
  for (const auto& j : gens.operators()) sum += std::norm(conjugate_expectation(psi, j));
  return std::sqrt(sum);
}

CMatrix combine(const GeneratorSet& gens, const SubsetSelector& t, const CoefficientVector& u) {
  if (t.size() != u.size()) throw Error(ErrorCode::LengthMismatch, "|t| != |u|");
  const int n = gens.dimension();
  CMatrix s = CMatrix::Zero(n, n);
  for (int i = 0; i < t.size(); ++i) {
    if (t.indices()[i] >= gens.count()) throw Error(ErrorCode::OutOfRange, "subset index beyond N");
    s += u.weights()[i] * gens[t.indices()[i]];
  }
  return s;
}

SpectrumEvaluator::SpectrumEvaluator(const DensityMatrix& rho)
    : sqrt_rho_(psd_sqrt(rho.matrix())), sqrt_rho_conj_(sqrt_rho_.conjugate()) {}

RVector SpectrumEvaluator::spectrum(const CMatrix& s) const {
  if (s.rows() != sqrt_rho_.rows() || s.cols() != sqrt_rho_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "operator vs state dimension");
  }
  require_operator_symmetric(s);
  const CMatrix a = sqrt_rho_ * s * sqrt_rho_conj_;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues();  // already descending and nonnegative
}

double SpectrumEvaluator::gap(const CMatrix& s) const { return spectral_gap(spectrum(s)); }

double SpectrumEvaluator::delta(const CMatrix& s) const { return delta_from_spectrum(spectrum(s)); }

RVector lambda_spectrum(const DensityMatrix& rho, const CMatrix& s) { return SpectrumEvaluator(rho).spectrum(s); }

RVector lambda_spectrum_via_product(const DensityMatrix& rho, const CMatrix& s) {
  if (s.rows() != rho.dimension()) throw Error(ErrorCode::DimensionMismatch, "operator vs state dimension");
  require_operator_symmetric(s);
  const CMatrix& r = rho.matrix();
  const CMatrix x = r * s * r.conjugate() * s.adjoint();
  Eigen::ComplexEigenSolver<CMatrix> solver(x, false);
  RVector out = solver.eigenvalues().real().cwiseMax(0.0).cwiseSqrt();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double spectral_gap(const RVector& lambda) {
  if (lambda.size() == 0) return 0;
  return lambda(0) - (lambda.sum() - lambda(0));
}

double delta_from_spectrum(const RVector& lambda) {
  const double gap = spectral_gap(lambda);
  return gap > 0 ? gap : 0.0;
}

double delta_k(const DensityMatrix& rho, const GeneratorSet& gens, const SubsetSelector& t,
               const CoefficientVector& u) {
  return delta_from_spectrum(lambda_spectrum(rho, combine(gens, t, u)));
}

BoundReport observation1_bound(const DensityMatrix& rho, const GeneratorSet& gens, int k,
                               const Assignments& assignments) {
  const auto start = std::chrono::steady_clock::now();
  const int n = gens.count();
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + ", N = " + std::to_string(n));
  if (gens.dimension() != rho.dimension()) throw Error(ErrorCode::DimensionMismatch, "generators vs state");

  const SpectrumEvaluator eval(rho);
  BoundReport report;
  report.k = k;
  report.n_generators = n;
  report.prefactor = n / (double(k) * k * binomial(n, k));
  for (const auto& [t, u] : assignments) {
    if (t.size() != k) throw Error(ErrorCode::LengthMismatch, "subset size differs from k");
    const double d = eval.delta(combine(gens, t, u));
    report.per_subset.push_back({t, u.weights(), d, gens.split_label()});
  }
  report.bound_on_c_squared = report.recompute();
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw Error(ErrorCode::WrongDims, "expected a two-qubit state");
  const GeneratorSet gens = bipartite_generators(2, 2);
  return delta_from_spectrum(lambda_spectrum(rho, gens[0]));
}

double delta_total_bound(const DensityMatrix& rho, const GeneratorSet& gens, const std::vector<Complex>& u) {
  if (static_cast<int>(u.size()) != gens.count()) throw Error(ErrorCode::LengthMismatch, "need one weight per generator");
  double norm2 = 0;
  for (const auto& x : u) norm2 += std::norm(x);
  if (std::abs(norm2 - 1.0) > 1e-10) throw Error(ErrorCode::NotNormalized, "sum |u|^2 = " + std::to_string(norm2));
  const int n = gens.dimension();
  CMatrix s = CMatrix::Zero(n, n);
  for (int t = 0; t < gens.count(); ++t) s += u[static_cast<std::size_t>(t)] * gens[t];
  return delta_from_spectrum(lambda_spectrum(rho, s));
}

double decomposition_average(const Decomposition& dec, const CMatrix& s) {
  require_operator_symmetric(s);
  double sum = 0;
  for (const auto& m : dec.members()) sum += m.weight * std::abs(conjugate_expectation(m.state, s));
  return sum;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const Bipartition& split) {
  if (split.parties() != static_cast<int>(rho.dims().size())) {
    throw Error(ErrorCode::DimensionMismatch, "split does not match the state's parties");
  }
  return hermitian_eigenvalues(partial_transpose(rho, split.side_a())).minCoeff();
}

double ppt_min_eigenvalue_worst_split(const DensityMatrix& rho) {
  const int parties = static_cast<int>(rho.dims().size());
  if (parties < 2) throw Error(ErrorCode::WrongArity, "need at least two parties");
  double worst = std::numeric_limits<double>::infinity();
  // For two or three parties the single-party cuts are all the bipartitions.
  for (int p = 0; p < (parties == 2 ? 1 : parties); ++p) {
    worst = std::min(worst, ppt_min_eigenvalue(rho, Bipartition::single(p, parties)));
  }
  return worst;
}

}  // namespace concbound
