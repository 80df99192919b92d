#include "concbound/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

namespace concbound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t restart) {
  return seed ^ splitmix64(splitmix64(stream) ^ (restart * 0x632be59bd9b4e019ULL));
}

// Runs fn(i) for i in [0, n); each index writes only its own slot.
void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, std::max(n, 1));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next++; i < n; i = next++) fn(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::vector<Complex> to_coefficients(const std::vector<double>& radius, const std::vector<double>& phase) {
  std::vector<Complex> out(radius.size());
  for (std::size_t s = 0; s < radius.size(); ++s) out[s] = std::polar(radius[s], phase[s]);
  return out;
}

// Gap is degree-1 homogeneous in the coefficients, so a positive optimum is
// pushed to max_s |u_s| = 1.
std::vector<Complex> saturate(std::vector<Complex> u) {
  double largest = 0;
  for (const auto& x : u) largest = std::max(largest, std::abs(x));
  if (largest > 0) {
    for (auto& x : u) x /= largest;
  }
  return u;
}

std::vector<SubsetSelector> select_subsets(int n, int k, const OptimizerConfig& cfg,
                                           const std::function<double(int)>& singleton_score) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadK, "k = " + std::to_string(k) + ", N = " + std::to_string(n));
  if (cfg.strategy == SubsetStrategy::Exhaustive) return all_subsets(n, k);

  const int j = std::clamp(cfg.top_j, k, n);
  std::vector<double> score(static_cast<std::size_t>(n));
  parallel_for(n, cfg.threads, [&](int t) { score[static_cast<std::size_t>(t)] = singleton_score(t); });
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) order[static_cast<std::size_t>(t)] = t;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)];
  });
  std::vector<int> chosen(order.begin(), order.begin() + j);
  std::sort(chosen.begin(), chosen.end());

  std::vector<SubsetSelector> out;
  for (const auto& local : all_subsets(j, k)) {
    std::vector<int> idx;
    for (int i : local.indices()) idx.push_back(chosen[static_cast<std::size_t>(i)]);
    out.emplace_back(idx, n);
  }
  return out;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw Error(ErrorCode::OutOfRange, "restarts must be >= 1");
  if (iterations < 1) throw Error(ErrorCode::OutOfRange, "iterations must be >= 1");
  if (!(step_initial > 0) || !(step_final > 0) || step_final > step_initial) {
    throw Error(ErrorCode::OutOfRange, "steps must satisfy 0 < final <= initial");
  }
  if (strategy == SubsetStrategy::TopSingletons && top_j < 1) {
    throw Error(ErrorCode::OutOfRange, "top_singletons needs j >= 1");
  }
}

nlohmann::json to_json(const OptimizerConfig& cfg) {
  nlohmann::json j{{"restarts", cfg.restarts},
                   {"iterations", cfg.iterations},
                   {"seed", cfg.seed},
                   {"step_initial", cfg.step_initial},
                   {"step_final", cfg.step_final}};
  if (cfg.strategy == SubsetStrategy::Exhaustive) {
    j["subset_strategy"] = "exhaustive";
  } else {
    j["subset_strategy"] = {{"top_singletons", cfg.top_j}};
  }
  return j;
}

OptimizerConfig optimizer_config_from_json(const nlohmann::json& j) {
  OptimizerConfig cfg;
  try {
    cfg.restarts = j.value("restarts", cfg.restarts);
    cfg.iterations = j.value("iterations", cfg.iterations);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.step_initial = j.value("step_initial", cfg.step_initial);
    cfg.step_final = j.value("step_final", cfg.step_final);
    if (j.contains("subset_strategy")) {
      const auto& s = j["subset_strategy"];
      if (s.is_string() && s.get<std::string>() == "exhaustive") {
        cfg.strategy = SubsetStrategy::Exhaustive;
      } else if (s.is_object() && s.contains("top_singletons")) {
        cfg.strategy = SubsetStrategy::TopSingletons;
        cfg.top_j = s["top_singletons"].get<int>();
      } else {
        throw Error(ErrorCode::ParseError, "unknown subset_strategy");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  cfg.validate();
  return cfg;
}

CoefficientOptimum maximize_coefficients(int count, const std::function<double(const std::vector<Complex>&)>& gap,
                                         const OptimizerConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  constexpr double kTwoPi = 2 * std::numbers::pi;
  const auto n = static_cast<std::size_t>(count);
  const double decay =
      cfg.iterations > 1 ? std::pow(cfg.step_final / cfg.step_initial, 1.0 / (cfg.iterations - 1)) : 1.0;

  CoefficientOptimum best;
  best.gap = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::mt19937_64 rng(derived_seed(cfg.seed, stream, static_cast<std::uint64_t>(restart)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> radius(n), phase(n);
    for (std::size_t s = 0; s < n; ++s) {
      radius[s] = unit(rng);
      phase[s] = kTwoPi * unit(rng);
    }
    double current = gap(to_coefficients(radius, phase));

    double step = cfg.step_initial;
    for (int it = 0; it < cfg.iterations; ++it, step *= decay) {
      for (std::size_t c = 0; c < 2 * n; ++c) {
        const bool is_radius = c < n;
        const std::size_t s = is_radius ? c : c - n;
        for (double dir : {1.0, -1.0}) {
          auto r = radius;
          auto th = phase;
          if (is_radius) {
            r[s] = std::clamp(r[s] + dir * step, 0.0, 1.0);
            if (r[s] == radius[s]) continue;
          } else {
            th[s] = std::fmod(th[s] + dir * step * std::numbers::pi + kTwoPi, kTwoPi);
          }
          const double trial = gap(to_coefficients(r, th));
          if (trial > current) {
            current = trial;
            radius = std::move(r);
            phase = std::move(th);
            break;
          }
        }
      }
    }

    auto coeffs = to_coefficients(radius, phase);
    if (current > 0) {
      auto scaled = saturate(coeffs);
      const double scaled_gap = gap(scaled);
      if (scaled_gap >= current) {
        coeffs = std::move(scaled);
        current = scaled_gap;
      }
    }
    if (current > best.gap) {
      best.gap = current;
      best.coefficients = std::move(coeffs);
    }
    best.trace.push_back(best.gap);
  }
  best.value = best.gap > 0 ? best.gap : 0.0;
  return best;
}

UOptimum optimize_u(const DensityMatrix& rho, const GeneratorSet& gens, const SubsetSelector& t,
                    const OptimizerConfig& cfg) {
  const SpectrumEvaluator eval(rho);
  std::uint64_t stream = 0;
  for (int i : t.indices()) stream = splitmix64(stream ^ static_cast<std::uint64_t>(i + 1));
  const auto opt = maximize_coefficients(
      t.size(), [&](const std::vector<Complex>& u) { return eval.gap(combine(gens, t, CoefficientVector(u))); },
      cfg, stream);
  return {CoefficientVector(opt.coefficients), opt.value};
}

BoundReport optimize_bound_bipartite(const DensityMatrix& rho, const GeneratorSet& gens, int k,
                                     const OptimizerConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  const auto subsets = select_subsets(gens.count(), k, cfg, [&](int t) {
    return optimize_u(rho, gens, SubsetSelector({t}, gens.count()), cfg).delta;
  });
  std::vector<std::optional<CoefficientVector>> found(subsets.size());
  parallel_for(static_cast<int>(subsets.size()), cfg.threads, [&](int i) {
    found[static_cast<std::size_t>(i)] = optimize_u(rho, gens, subsets[static_cast<std::size_t>(i)], cfg).u;
  });
  Assignments assignments;
  for (std::size_t i = 0; i < subsets.size(); ++i) assignments.emplace(subsets[i], *found[i]);
  BoundReport report = observation1_bound(rho, gens, k, assignments);
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

GeneratorTriple generator_triple_for(TripartiteOperators ops, int d) {
  switch (ops) {
    case TripartiteOperators::ExampleGhz:
      if (d != 2) throw Error(ErrorCode::WrongDims, "example operators act on three qubits");
      return example_generator_triple(ExampleFamily::Ghz);
    case TripartiteOperators::ExampleW:
      if (d != 2) throw Error(ErrorCode::WrongDims, "example operators act on three qubits");
      return example_generator_triple(ExampleFamily::W);
    case TripartiteOperators::Canonical:
      break;
  }
  return tripartite_generator_triple(d);
}

namespace {

int cube_side(const DensityMatrix& rho) {
  const auto& dims = rho.dims();
  if (dims.size() != 3) throw Error(ErrorCode::WrongArity, "expected a tripartite state");
  if (dims[0] != dims[1] || dims[1] != dims[2]) throw Error(ErrorCode::WrongDims, "expected a d x d x d system");
  return dims[0];
}

}  // namespace

BoundReport optimize_bound_multipartite(const DensityMatrix& rho, int k, const OptimizerConfig& cfg,
                                        TripartiteOperators ops) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  const GeneratorTriple gens = generator_triple_for(ops, cube_side(rho));
  if (ops != TripartiteOperators::Canonical) {
    if (k != 1) throw Error(ErrorCode::BadK, "example operators are a single term, k must be 1");
    TripleAssignments fixed;
    fixed.emplace(SubsetSelector({0}, 1), TripleCoefficients::ones(1));
    return observation2_bound(rho, gens, 1, fixed);
  }

  const SpectrumEvaluator eval(rho);
  const int n = gens[0].count();
  auto optimize_triple = [&](const SubsetSelector& t) {
    std::uint64_t stream = 0x7431;
    for (int i : t.indices()) stream = splitmix64(stream ^ static_cast<std::uint64_t>(i + 1));
    return maximize_coefficients(
        3 * t.size(),
        [&](const std::vector<Complex>& x) { return eval.gap(combine_triple(gens, t, TripleCoefficients::from_flat(x))); },
        cfg, stream);
  };
  const auto subsets = select_subsets(n, k, cfg, [&](int t) { return optimize_triple(SubsetSelector({t}, n)).value; });
  std::vector<std::vector<Complex>> found(subsets.size());
  parallel_for(static_cast<int>(subsets.size()), cfg.threads, [&](int i) {
    found[static_cast<std::size_t>(i)] = optimize_triple(subsets[static_cast<std::size_t>(i)]).coefficients;
  });
  TripleAssignments assignments;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    assignments.emplace(subsets[i], TripleCoefficients::from_flat(found[i]));
  }
  BoundReport report = observation2_bound(rho, gens, k, assignments);
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

BoundReport optimize_observation3(const DensityMatrix& rho, int k, const OptimizerConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  cfg.validate();
  const GeneratorTriple gens = tripartite_generator_triple(cube_side(rho));
  SplitAssignments assignments;
  for (std::size_t split = 0; split < 3; ++split) {
    const auto& g = gens[split];
    const auto subsets = select_subsets(g.count(), k, cfg, [&](int t) {
      return optimize_u(rho, g, SubsetSelector({t}, g.count()), cfg).delta;
    });
    std::vector<std::optional<CoefficientVector>> found(subsets.size());
    parallel_for(static_cast<int>(subsets.size()), cfg.threads, [&](int i) {
      found[static_cast<std::size_t>(i)] = optimize_u(rho, g, subsets[static_cast<std::size_t>(i)], cfg).u;
    });
    for (std::size_t i = 0; i < subsets.size(); ++i) assignments[split].emplace(subsets[i], *found[i]);
  }
  BoundReport report = observation3_bound(rho, gens, k, assignments);
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

ScanResult threshold_scan(const std::function<DensityMatrix(double)>& family,
                          const std::function<double(const DensityMatrix&)>& detector, double p_lo, double p_hi,
                          double tol_p, double tol_detect) {
  if (!(p_lo < p_hi)) throw Error(ErrorCode::OutOfRange, "need p_lo < p_hi");
  if (!(tol_p > 0)) throw Error(ErrorCode::OutOfRange, "tol_p must be positive");
  ScanResult result;
  auto probe = [&](double p) {
    const double value = detector(family(p));
    result.evaluations.emplace_back(p, value);
    return value > tol_detect;
  };
  if (!probe(p_hi)) {
    throw Error(ErrorCode::NotDetectedAtUpperEnd, "detector value at p = " + std::to_string(p_hi) +
                                                      " does not exceed " + std::to_string(tol_detect));
  }
  if (probe(p_lo)) {
    result.threshold = p_lo;
    result.bracket = 0;
    result.detected_at_lower_end = true;
    return result;
  }
  double lo = p_lo, hi = p_hi;
  while (hi - lo > tol_p) {
    const double mid = 0.5 * (lo + hi);
    (probe(mid) ? hi : lo) = mid;
  }
  result.threshold = 0.5 * (lo + hi);
  result.bracket = 0.5 * (hi - lo);
  return result;
}

}  // namespace concbound
