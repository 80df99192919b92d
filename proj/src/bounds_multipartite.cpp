#include "concbound/bounds_multipartite.hpp"

#include <chrono>
#include <cmath>

namespace concbound {

namespace {

void require_tripartite(const DensityMatrix& rho, const GeneratorTriple& gens) {
  if (rho.dims().size() != 3) throw Error(ErrorCode::WrongArity, "expected a tripartite state");
  for (const auto& g : gens) {
    if (g.dimension() != rho.dimension()) throw Error(ErrorCode::DimensionMismatch, "generators vs state");
    if (g.count() != gens[0].count()) throw Error(ErrorCode::LengthMismatch, "generator families not aligned");
  }
}

void check_weights(const std::vector<Complex>& xs) {
  for (const auto& x : xs) {
    if (!(std::abs(x) <= 1.0 + 1e-12)) throw Error(ErrorCode::OutOfRange, "coefficients must satisfy |x| <= 1");
  }
}

}  // namespace

TripleCoefficients::TripleCoefficients(std::vector<Complex> u, std::vector<Complex> v, std::vector<Complex> w)
    : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)) {
  if (u_.size() != v_.size() || u_.size() != w_.size()) throw Error(ErrorCode::LengthMismatch, "u, v, w lengths");
  check_weights(u_);
  check_weights(v_);
  check_weights(w_);
}

TripleCoefficients TripleCoefficients::ones(int k) {
  std::vector<Complex> one(static_cast<std::size_t>(k), 1.0);
  return {one, one, one};
}

TripleCoefficients TripleCoefficients::from_flat(const std::vector<Complex>& flat) {
  if (flat.size() % 3 != 0) throw Error(ErrorCode::LengthMismatch, "flat triple length must be a multiple of 3");
  const auto k = static_cast<std::ptrdiff_t>(flat.size() / 3);
  return {std::vector<Complex>(flat.begin(), flat.begin() + k),
          std::vector<Complex>(flat.begin() + k, flat.begin() + 2 * k),
          std::vector<Complex>(flat.begin() + 2 * k, flat.end())};
}

std::vector<Complex> TripleCoefficients::flat() const {
  std::vector<Complex> out = u_;
  out.insert(out.end(), v_.begin(), v_.end());
  out.insert(out.end(), w_.begin(), w_.end());
  return out;
}

double ctau_pure(const PureState& psi) {
  if (psi.dims().size() != 3) throw Error(ErrorCode::WrongArity, "expected a tripartite state");
  const DensityMatrix rho(psi);
  double purities = 0;
  for (int p = 0; p < 3; ++p) purities += partial_trace(rho, {p}).purity();
  return std::sqrt(std::max(0.0, 3.0 - purities));
}

CMatrix combine_triple(const GeneratorTriple& gens, const SubsetSelector& t, const TripleCoefficients& x) {
  if (t.size() != x.size()) throw Error(ErrorCode::LengthMismatch, "|t| != |x|");
  const int n = gens[0].dimension();
  CMatrix s = CMatrix::Zero(n, n);
  for (int i = 0; i < t.size(); ++i) {
    const int ti = t.indices()[static_cast<std::size_t>(i)];
    const auto si = static_cast<std::size_t>(i);
    s += x.u()[si] * gens[0][ti] + x.v()[si] * gens[1][ti] + x.w()[si] * gens[2][ti];
  }
  return s;
}

double delta_tot_k(const DensityMatrix& rho, const GeneratorTriple& gens, const SubsetSelector& t,
                   const TripleCoefficients& x) {
  require_tripartite(rho, gens);
  return delta_from_spectrum(lambda_spectrum(rho, combine_triple(gens, t, x)));
}

BoundReport observation2_bound(const DensityMatrix& rho, const GeneratorTriple& gens, int k,
                               const TripleAssignments& assignments) {
  const auto start = std::chrono::steady_clock::now();
  require_tripartite(rho, gens);
  const int n = gens[0].count();
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + ", N = " + std::to_string(n));

  const SpectrumEvaluator eval(rho);
  BoundReport report;
  report.k = k;
  report.n_generators = n;
  report.prefactor = n / (6.0 * k * k * binomial(n, k));
  for (const auto& [t, x] : assignments) {
    if (t.size() != k) throw Error(ErrorCode::LengthMismatch, "subset size differs from k");
    report.per_subset.push_back({t, x.flat(), eval.delta(combine_triple(gens, t, x)), "tot"});
  }
  report.bound_on_c_squared = report.recompute();
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

BoundReport observation3_bound(const DensityMatrix& rho, const GeneratorTriple& gens, int k,
                               const SplitAssignments& assignments) {
  const auto start = std::chrono::steady_clock::now();
  require_tripartite(rho, gens);
  const int n = gens[0].count();
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + ", N = " + std::to_string(n));

  BoundReport report;
  report.k = k;
  report.n_generators = n;
  report.prefactor = 0.5 * n / (double(k) * k * binomial(n, k));
  for (std::size_t split = 0; split < 3; ++split) {
    const BoundReport part = observation1_bound(rho, gens[split], k, assignments[split]);
    report.per_subset.insert(report.per_subset.end(), part.per_subset.begin(), part.per_subset.end());
  }
  report.bound_on_c_squared = report.recompute();
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace concbound
