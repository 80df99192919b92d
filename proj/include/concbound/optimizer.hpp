#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "concbound/bounds_multipartite.hpp"

namespace concbound {

enum class SubsetStrategy { Exhaustive, TopSingletons };

struct OptimizerConfig {
  static constexpr std::uint64_t kDefaultSeed = 20130415;

  int restarts = 32;
  int iterations = 200;
  std::uint64_t seed = kDefaultSeed;
  double step_initial = 0.5;
  double step_final = 1e-4;
  SubsetStrategy strategy = SubsetStrategy::Exhaustive;
  int top_j = 0;  // used by TopSingletons
  int threads = 0;  // 0 = hardware concurrency; results do not depend on it

  void validate() const;
};

nlohmann::json to_json(const OptimizerConfig& cfg);
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j);

/// Detection threshold on a C^2 bound.
inline constexpr double kDetectTolerance = 1e-7;

struct CoefficientOptimum {
  std::vector<Complex> coefficients;
  double value = 0;             // clamped Delta
  double gap = 0;               // unclamped lambda_1 - sum of the rest
  std::vector<double> trace;    // best gap after each restart
};

/// Maximizes `gap` over `count` complex coefficients u_s = r_s e^{i theta_s}
/// with r_s in [0, 1]: seeded random starts, each refined by coordinate
/// descent on (r, theta) with a geometrically shrinking step. `stream`
/// separates independent problems sharing one config seed.
CoefficientOptimum maximize_coefficients(int count, const std::function<double(const std::vector<Complex>&)>& gap,
                                         const OptimizerConfig& cfg, std::uint64_t stream);

struct UOptimum {
  CoefficientVector u;
  double delta;
};

UOptimum optimize_u(const DensityMatrix& rho, const GeneratorSet& gens, const SubsetSelector& t,
                    const OptimizerConfig& cfg);

/// Observation 1 with coefficients optimized independently per subset.
BoundReport optimize_bound_bipartite(const DensityMatrix& rho, const GeneratorSet& gens, int k,
                                     const OptimizerConfig& cfg);

enum class TripartiteOperators { Canonical, ExampleGhz, ExampleW };

/// Generator triple used by the given operator choice on a d x d x d state.
GeneratorTriple generator_triple_for(TripartiteOperators ops, int d);

/// Observation 2. Example operators use the fixed choice u = v = w = 1 with
/// k = 1; canonical operators are optimized per subset.
BoundReport optimize_bound_multipartite(const DensityMatrix& rho, int k, const OptimizerConfig& cfg,
                                        TripartiteOperators ops);

/// Observation 3 with coefficients optimized per split and per subset.
BoundReport optimize_observation3(const DensityMatrix& rho, int k, const OptimizerConfig& cfg);

struct ScanResult {
  double threshold = 0;
  double bracket = 0;   // half-width: detected at threshold + bracket, not at threshold - bracket
  std::vector<std::pair<double, double>> evaluations;  // (p, detector value) in evaluation order
  bool detected_at_lower_end = false;
};

/// Bisection for the smallest p at which detector(family(p)) > tol_detect.
/// Throws NotDetectedAtUpperEnd if p_hi is not detected.
ScanResult threshold_scan(const std::function<DensityMatrix(double)>& family,
                          const std::function<double(const DensityMatrix&)>& detector, double p_lo, double p_hi,
                          double tol_p, double tol_detect);

}  // namespace concbound
