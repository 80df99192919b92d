#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "concbound/optimizer.hpp"

namespace concbound::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDemoFailure = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitScanBracket = 3;

/// A state plus the text that produced it, e.g. "family:ghz-noise,p=0.5".
struct StateInput {
  std::string descriptor;
  DensityMatrix state;
};

/// Resolves "family:name,key=value,..." or a path to a state JSON file.
StateInput resolve_state(const std::string& descriptor);

/// Builds the p-parametrized family behind "ghz-noise", "w-noise",
/// "werner" or "horodecki:a=0.5".
std::function<DensityMatrix(double)> noise_family(const std::string& spec);

enum class Mode { Obs1, Obs2, Obs3, Wootters, Ppt };
Mode parse_mode(const std::string& text);
std::string to_string(Mode mode);

struct BoundOutcome {
  Mode mode = Mode::Obs1;
  std::optional<BoundReport> report;
  double bound_c2 = 0;       // C^2 (or C_tau^2) lower bound; 0 in PPT mode
  double ppt_min_eig = 0;    // worst split
  bool entangled = false;
};

/// Evaluates one state in one mode.
BoundOutcome evaluate(const DensityMatrix& rho, Mode mode, int k, const OptimizerConfig& cfg,
                      TripartiteOperators ops);

/// Verdict rule shared by the CLI and record replay.
bool verdict_entangled(Mode mode, double bound_c2, double ppt_min_eig);

nlohmann::json report_to_json(const BoundReport& report);
BoundReport report_from_json(const nlohmann::json& j);

/// Optimizer settings from an inline JSON object or a JSON file, with the
/// CONCBOUND_SEED environment variable replacing the default seed.
OptimizerConfig load_optimizer_config(const std::optional<std::string>& source);

/// Entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace concbound::cli
