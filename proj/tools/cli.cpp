#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "concbound/numerics.hpp"
#include "concbound/state_io.hpp"

namespace concbound::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPptTolerance = 1e-9;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad number for " + what + ": '" + text + "'");
  }
}

// "name,key=value,..." -> name + params
std::pair<std::string, std::map<std::string, std::string>> parse_params(const std::string& text, char first_sep) {
  std::string name = text;
  std::string rest;
  if (const auto pos = text.find(first_sep); pos != std::string::npos) {
    name = text.substr(0, pos);
    rest = text.substr(pos + 1);
  }
  std::map<std::string, std::string> params;
  for (const auto& item : split(rest, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "expected key=value, got '" + item + "'");
    params[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return {name, params};
}

double param(const std::map<std::string, std::string>& params, const std::string& key, double fallback) {
  const auto it = params.find(key);
  return it == params.end() ? fallback : parse_number(it->second, key);
}

Dims dims_for_total(int d) {
  const int root = static_cast<int>(std::lround(std::sqrt(double(d))));
  if (root * root == d && root >= 2) return {root, root};
  const int cube = static_cast<int>(std::lround(std::cbrt(double(d))));
  if (cube * cube * cube == d && cube >= 2) return {cube, cube, cube};
  throw Error(ErrorCode::WrongDims, "cannot infer subsystems for d = " + std::to_string(d) + "; pass dims=AxB");
}

Dims parse_dims(const std::string& text) {
  Dims dims;
  for (const auto& part : split(text, 'x')) dims.push_back(static_cast<int>(parse_number(part, "dims")));
  return dims;
}

DensityMatrix family_state(const std::string& name, const std::map<std::string, std::string>& params) {
  const double p = param(params, "p", 1.0);
  if (name == "ghz-noise") return white_noise_mix(DensityMatrix(ghz_state()), p);
  if (name == "w-noise") return white_noise_mix(DensityMatrix(w_state()), p);
  if (name == "werner") return werner_state(p);
  if (name == "bell") return DensityMatrix(bell_state());
  if (name == "horodecki") return white_noise_mix(horodecki_state(param(params, "a", 0.5)), p);
  if (name == "maximally-mixed") {
    if (const auto it = params.find("dims"); it != params.end()) return maximally_mixed(parse_dims(it->second));
    return maximally_mixed(dims_for_total(static_cast<int>(param(params, "d", 4))));
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

TripartiteOperators resolve_operators(const std::string& choice, const std::string& descriptor) {
  if (choice == "canonical") return TripartiteOperators::Canonical;
  if (choice == "ghz") return TripartiteOperators::ExampleGhz;
  if (choice == "w") return TripartiteOperators::ExampleW;
  if (choice != "auto") throw Error(ErrorCode::ParseError, "unknown operators '" + choice + "'");
  if (descriptor.find("ghz-noise") != std::string::npos) return TripartiteOperators::ExampleGhz;
  if (descriptor.find("w-noise") != std::string::npos) return TripartiteOperators::ExampleW;
  return TripartiteOperators::Canonical;
}

std::string to_string(TripartiteOperators ops) {
  switch (ops) {
    case TripartiteOperators::Canonical: return "canonical";
    case TripartiteOperators::ExampleGhz: return "ghz";
    case TripartiteOperators::ExampleW: return "w";
  }
  return "canonical";
}

// ---------------------------------------------------------------- demos

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    out_ << (ok ? "PASS " : "FAIL ") << name << "  (" << detail << ")\n";
    all_ = all_ && ok;
  }
  void note(const std::string& text) { out_ << "     " << text << '\n'; }
  bool all_passed() const { return all_; }

 private:
  std::ostream& out_;
  bool all_ = true;
};

double ghz_closed_form(double p) {
  const double x = 0.75 * (5 * p - 1);
  return p >= 0.2 ? x * x / 6 : 0.0;
}

double w_closed_form(double p) {
  const double s3 = std::sqrt(3.0);
  const double x = p * (8 + s3) - s3;
  return x > 0 ? x * x / 96 : 0.0;
}

double example_bound(ExampleFamily family, double p) {
  const auto ops = family == ExampleFamily::Ghz ? TripartiteOperators::ExampleGhz : TripartiteOperators::ExampleW;
  const PureState psi = family == ExampleFamily::Ghz ? ghz_state() : w_state();
  return optimize_bound_multipartite(white_noise_mix(DensityMatrix(psi), p), 1, OptimizerConfig{}, ops)
      .bound_on_c_squared;
}

ScanResult example_scan(ExampleFamily family) {
  const PureState psi = family == ExampleFamily::Ghz ? ghz_state() : w_state();
  const auto ops = family == ExampleFamily::Ghz ? TripartiteOperators::ExampleGhz : TripartiteOperators::ExampleW;
  return threshold_scan([&](double p) { return white_noise_mix(DensityMatrix(psi), p); },
                        [&](const DensityMatrix& rho) {
                          return std::sqrt(optimize_bound_multipartite(rho, 1, OptimizerConfig{}, ops).bound_on_c_squared);
                        },
                        0.0, 1.0, 1e-5, kDetectTolerance);
}

int demo_ghz(std::ostream& out) {
  Checklist c(out);
  for (double p : {0.25, 0.5, 0.75, 1.0}) {
    const double got = example_bound(ExampleFamily::Ghz, p);
    c.check("closed form p=" + fmt(p), std::abs(got - ghz_closed_form(p)) <= 1e-9, "bound " + fmt(got));
  }
  const double ctau2 = std::pow(ctau_pure(ghz_state()), 2);
  c.check("p=1 equals C_tau(GHZ)^2", std::abs(example_bound(ExampleFamily::Ghz, 1.0) - ctau2) <= 1e-9,
          "C_tau^2 " + fmt(ctau2));
  const auto scan = example_scan(ExampleFamily::Ghz);
  c.check("threshold 1/5", std::abs(scan.threshold - 0.2) <= 1e-4,
          "p* " + fmt(scan.threshold) + " +/- " + fmt(scan.bracket));
  return c.all_passed() ? kExitOk : kExitDemoFailure;
}

int demo_w(std::ostream& out) {
  Checklist c(out);
  for (double p : {0.2, 0.3, 0.5, 0.75, 1.0}) {
    const double got = example_bound(ExampleFamily::W, p);
    c.check("closed form p=" + fmt(p), std::abs(got - w_closed_form(p)) <= 1e-9, "bound " + fmt(got));
  }
  const double ps = std::sqrt(3.0) / (8 + std::sqrt(3.0));
  const auto scan = example_scan(ExampleFamily::W);
  c.check("detection threshold", std::abs(scan.threshold - ps) <= 1e-4,
          "p* " + fmt(scan.threshold) + " vs " + fmt(ps));

  const double p_ppt = 3 * (8 * std::sqrt(2.0) - 3) / 119;
  const auto ppt_scan = threshold_scan([](double p) { return white_noise_mix(DensityMatrix(w_state()), p); },
                                       [](const DensityMatrix& rho) { return -ppt_min_eigenvalue_worst_split(rho); },
                                       0.0, 1.0, 1e-5, kPptTolerance);
  c.check("PPT boundary", std::abs(ppt_scan.threshold - p_ppt) <= 1e-4,
          "p " + fmt(ppt_scan.threshold) + " vs " + fmt(p_ppt));

  const DensityMatrix rho = white_noise_mix(DensityMatrix(w_state()), 0.2);
  const double worst = ppt_min_eigenvalue_worst_split(rho);
  const double obs2 = example_bound(ExampleFamily::W, 0.2);
  c.check("p=0.2 PPT on every split", worst >= -1e-9, "min eigenvalue " + fmt(worst));
  c.check("p=0.2 detected by the joint bound", obs2 > 1e-4, "bound " + fmt(obs2));
  c.note("PPT-but-entangled window: [" + fmt(scan.threshold) + ", " + fmt(ppt_scan.threshold) + ")");
  return c.all_passed() ? kExitOk : kExitDemoFailure;
}

// Textbook two-qubit formula: lambda_i^2 are the eigenvalues of
// sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho). Long double keeps the
// square roots of the null eigenvalues of rank-deficient states small.
double wootters_textbook(const DensityMatrix& rho) {
  using LComplex = std::complex<long double>;
  using LMatrix = Eigen::Matrix<LComplex, 4, 4>;
  const LMatrix r = rho.matrix().cast<LComplex>();
  Eigen::SelfAdjointEigenSolver<LMatrix> es(r);
  Eigen::Matrix<long double, 4, 1> roots = es.eigenvalues().cwiseMax(0.0L).cwiseSqrt();
  const LMatrix sqrt_r = es.eigenvectors() * roots.asDiagonal() * es.eigenvectors().adjoint();
  LMatrix flip = LMatrix::Zero();
  flip(0, 3) = flip(3, 0) = -1.0L;
  flip(1, 2) = flip(2, 1) = 1.0L;
  const LMatrix tilde = flip * r.conjugate() * flip;
  LMatrix m = sqrt_r * tilde * sqrt_r;
  m = (0.5L * (m + m.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<LMatrix> em(m, Eigen::EigenvaluesOnly);
  std::vector<long double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(em.eigenvalues()(i), 0.0L)));
  std::sort(l.begin(), l.end(), std::greater<>());
  return static_cast<double>(std::max(0.0L, l[0] - l[1] - l[2] - l[3]));
}

int demo_wootters(std::ostream& out) {
  Checklist c(out);
  const GeneratorSet gens = bipartite_generators(2, 2);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const DensityMatrix rho = random_density({2, 2}, 1 + i % 4, 1000 + static_cast<std::uint64_t>(i));
    Assignments a;
    a.emplace(SubsetSelector({0}, 1), CoefficientVector::ones(1));
    const double bound = observation1_bound(rho, gens, 1, a).bound_on_c_squared;
    worst = std::max(worst, std::abs(bound - std::pow(wootters_textbook(rho), 2)));
  }
  c.check("1000 random two-qubit states", worst <= 1e-9, "max |bound - C^2| = " + fmt(worst));
  return c.all_passed() ? kExitOk : kExitDemoFailure;
}

int demo_horodecki(std::ostream& out, int k, const OptimizerConfig& cfg) {
  Checklist c(out);
  const GeneratorSet gens = bipartite_generators(3, 3);
  for (double a : {0.2, 0.5, 0.8}) {
    const DensityMatrix rho = horodecki_state(a);
    const double ppt = ppt_min_eigenvalue(rho, Bipartition::single(0, 2));
    c.check("a=" + fmt(a) + " PPT", ppt >= -1e-9, "min eigenvalue " + fmt(ppt));
    const auto report = optimize_bound_bipartite(rho, gens, k, cfg);
    c.check("a=" + fmt(a) + " detected with k=" + std::to_string(k), report.bound_on_c_squared > kDetectTolerance,
            "C^2 >= " + fmt(report.bound_on_c_squared));
  }
  return c.all_passed() ? kExitOk : kExitDemoFailure;
}

}  // namespace

// ---------------------------------------------------------------- public

StateInput resolve_state(const std::string& descriptor) {
  static const std::string prefix = "family:";
  if (descriptor.rfind(prefix, 0) == 0) {
    const auto [name, params] = parse_params(descriptor.substr(prefix.size()), ',');
    return {descriptor, family_state(name, params)};
  }
  return {descriptor, load_density(descriptor)};
}

std::function<DensityMatrix(double)> noise_family(const std::string& spec) {
  const auto [name, params] = parse_params(spec, ':');
  if (params.count("p")) throw Error(ErrorCode::ParseError, "p is the scanned parameter");
  if (name != "ghz-noise" && name != "w-noise" && name != "werner" && name != "horodecki") {
    throw Error(ErrorCode::ParseError, "unknown scan family '" + name + "'");
  }
  family_state(name, params);  // validates the fixed parameters once
  return [name, params](double p) {
    auto with_p = params;
    with_p["p"] = fmt(p);
    return family_state(name, with_p);
  };
}

Mode parse_mode(const std::string& text) {
  if (text == "obs1") return Mode::Obs1;
  if (text == "obs2") return Mode::Obs2;
  if (text == "obs3") return Mode::Obs3;
  if (text == "wootters") return Mode::Wootters;
  if (text == "ppt") return Mode::Ppt;
  throw Error(ErrorCode::ParseError, "unknown mode '" + text + "'");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::Obs1: return "obs1";
    case Mode::Obs2: return "obs2";
    case Mode::Obs3: return "obs3";
    case Mode::Wootters: return "wootters";
    case Mode::Ppt: return "ppt";
  }
  return "?";
}

bool verdict_entangled(Mode mode, double bound_c2, double ppt_min_eig) {
  if (mode == Mode::Ppt) return ppt_min_eig < -kPptTolerance;
  return bound_c2 > kDetectTolerance;
}

BoundOutcome evaluate(const DensityMatrix& rho, Mode mode, int k, const OptimizerConfig& cfg,
                      TripartiteOperators ops) {
  BoundOutcome outcome;
  outcome.mode = mode;
  outcome.ppt_min_eig = ppt_min_eigenvalue_worst_split(rho);
  switch (mode) {
    case Mode::Obs1: {
      if (rho.dims().size() != 2) throw Error(ErrorCode::WrongArity, "obs1 needs a bipartite state");
      outcome.report = optimize_bound_bipartite(rho, bipartite_generators(rho.dims()[0], rho.dims()[1]), k, cfg);
      break;
    }
    case Mode::Obs2:
      outcome.report = optimize_bound_multipartite(rho, k, cfg, ops);
      break;
    case Mode::Obs3:
      outcome.report = optimize_observation3(rho, k, cfg);
      break;
    case Mode::Wootters:
      outcome.bound_c2 = std::pow(wootters_concurrence(rho), 2);
      break;
    case Mode::Ppt:
      break;
  }
  if (outcome.report) outcome.bound_c2 = outcome.report->bound_on_c_squared;
  outcome.entangled = verdict_entangled(mode, outcome.bound_c2, outcome.ppt_min_eig);
  return outcome;
}

json report_to_json(const BoundReport& report) {
  json terms = json::array();
  for (const auto& term : report.per_subset) {
    json re = json::array(), im = json::array();
    for (const auto& x : term.coefficients) {
      re.push_back(x.real());
      im.push_back(x.imag());
    }
    terms.push_back({{"t", term.subset.indices()}, {"re", re}, {"im", im}, {"delta", term.delta}, {"split", term.split}});
  }
  return {{"bound_on_c_squared", report.bound_on_c_squared},
          {"prefactor", report.prefactor},
          {"k", report.k},
          {"n_generators", report.n_generators},
          {"wall_time_seconds", report.wall_time_seconds},
          {"per_subset", terms}};
}

BoundReport report_from_json(const json& j) {
  try {
    BoundReport report;
    report.bound_on_c_squared = j.at("bound_on_c_squared").get<double>();
    report.prefactor = j.at("prefactor").get<double>();
    report.k = j.at("k").get<int>();
    report.n_generators = j.at("n_generators").get<int>();
    report.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    for (const auto& term : j.at("per_subset")) {
      std::vector<Complex> coeffs;
      const auto& re = term.at("re");
      const auto& im = term.at("im");
      for (std::size_t i = 0; i < re.size(); ++i) coeffs.emplace_back(re[i].get<double>(), im.at(i).get<double>());
      report.per_subset.push_back({SubsetSelector(term.at("t").get<std::vector<int>>(), report.n_generators), coeffs,
                                   term.at("delta").get<double>(), term.at("split").get<std::string>()});
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

OptimizerConfig load_optimizer_config(const std::optional<std::string>& source) {
  json j = json::object();
  if (source) {
    std::string text = *source;
    if (text.find('{') == std::string::npos) {
      std::ifstream in(text);
      if (!in) throw Error(ErrorCode::ParseError, "cannot open optimizer config " + text);
      text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("optimizer config: ") + e.what());
    }
  }
  if (!j.contains("seed")) {
    if (const char* env = std::getenv("CONCBOUND_SEED")) {
      try {
        j["seed"] = std::stoull(env);
      } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "CONCBOUND_SEED must be an unsigned integer");
      }
    }
  }
  return optimizer_config_from_json(j);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds on bipartite and tripartite concurrence"};
  app.require_subcommand(1);

  std::string state_desc, mode_text = "obs1", operators = "auto", format = "json";
  std::optional<std::string> optimizer_src, out_path;
  int k = 1;
  auto* bound = app.add_subcommand("bound", "Bound the concurrence of one state");
  bound->add_option("--state", state_desc, "State JSON file or family:name,key=value,...")->required();
  bound->add_option("--mode", mode_text, "obs1|obs2|obs3|wootters|ppt");
  bound->add_option("--k", k, "Subset size");
  bound->add_option("--operators", operators, "auto|canonical|ghz|w (obs2)");
  bound->add_option("--optimizer", optimizer_src, "Optimizer config: inline JSON or file");
  bound->add_option("--out", out_path, "Write the run record here");
  bound->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

  std::string family_spec, p_range = "0:1";
  double tol_p = 1e-4;
  auto* scan = app.add_subcommand("scan", "Bisect the detection threshold of a noisy family");
  scan->add_option("--family", family_spec, "ghz-noise|w-noise|werner|horodecki:a=...")->required();
  scan->add_option("--mode", mode_text, "obs1|obs2|obs3|ppt");
  scan->add_option("--k", k, "Subset size");
  scan->add_option("--operators", operators, "auto|canonical|ghz|w (obs2)");
  scan->add_option("--optimizer", optimizer_src, "Optimizer config: inline JSON or file");
  scan->add_option("--p-range", p_range, "lo:hi");
  scan->add_option("--tol", tol_p, "Bracket width in p");
  scan->add_option("--out", out_path, "CSV output path");

  std::string scenario;
  int demo_k = 2;
  auto* demo = app.add_subcommand("demo", "Run a built-in check scenario");
  demo->add_option("scenario", scenario, "ghz|w|horodecki|wootters-check")
      ->required()
      ->check(CLI::IsMember({"ghz", "w", "horodecki", "wootters-check"}));
  demo->add_option("--k", demo_k, "Subset size for the horodecki scenario");
  demo->add_option("--optimizer", optimizer_src, "Optimizer config: inline JSON or file");

  std::vector<const char*> argv{"concbound"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    const OptimizerConfig cfg = load_optimizer_config(optimizer_src);

    if (*bound) {
      const Mode mode = parse_mode(mode_text);
      const StateInput input = resolve_state(state_desc);
      const TripartiteOperators ops = resolve_operators(operators, input.descriptor);
      const BoundOutcome r = evaluate(input.state, mode, k, cfg, ops);
      const std::string verdict = r.entangled ? "ENTANGLED" : "UNDETECTED";

      out << "state: " << input.descriptor << '\n' << "mode: " << to_string(mode) << '\n';
      if (mode != Mode::Ppt) {
        out << "bound_c2: " << fmt(r.bound_c2) << '\n' << "bound_c: " << fmt(std::sqrt(r.bound_c2)) << '\n';
      }
      out << "ppt_min_eig: " << fmt(r.ppt_min_eig) << '\n' << "verdict: " << verdict << '\n';

      if (out_path) {
        std::ofstream f(*out_path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + *out_path);
        if (format == "csv") {
          f << "mode,k,bound_c2,bound_c,ppt_min_eig,verdict\n"
            << to_string(mode) << ',' << k << ',' << fmt(r.bound_c2) << ',' << fmt(std::sqrt(r.bound_c2)) << ','
            << fmt(r.ppt_min_eig) << ',' << verdict << '\n';
        } else {
          json record{{"command", args},
                      {"input", input.descriptor},
                      {"mode", to_string(mode)},
                      {"k", k},
                      {"operators", to_string(ops)},
                      {"optimizer", to_json(cfg)},
                      {"tol_detect", kDetectTolerance},
                      {"bound_c2", r.bound_c2},
                      {"ppt_min_eig", r.ppt_min_eig},
                      {"verdict", verdict},
                      {"report", r.report ? report_to_json(*r.report) : json()},
                      {"version", kVersion},
                      {"timestamp", timestamp_utc()}};
          f << record.dump(2) << '\n';
        }
      }
      return kExitOk;
    }

    if (*scan) {
      const Mode mode = parse_mode(mode_text);
      if (mode == Mode::Wootters) throw Error(ErrorCode::ParseError, "scan supports obs1|obs2|obs3|ppt");
      const auto family = noise_family(family_spec);
      const auto range = split(p_range, ':');
      if (range.size() != 2) throw Error(ErrorCode::ParseError, "--p-range must be lo:hi");
      const double lo = parse_number(range[0], "p-range"), hi = parse_number(range[1], "p-range");
      const TripartiteOperators ops = resolve_operators(operators, family_spec);

      std::map<double, std::pair<double, double>> rows;  // p -> (bound column, ppt min eigenvalue)
      double current_p = lo;
      ScanResult result;
      try {
        result = threshold_scan(
            [&](double p) {
              current_p = p;
              return family(p);
            },
            [&](const DensityMatrix& rho) {
              const BoundOutcome r = evaluate(rho, mode, k, cfg, ops);
              const double column = mode == Mode::Ppt ? std::max(0.0, -r.ppt_min_eig) : r.bound_c2;
              rows[current_p] = {column, r.ppt_min_eig};
              // obs modes compare on the concurrence scale
              return mode == Mode::Ppt ? column : std::sqrt(column);
            },
            lo, hi, tol_p, mode == Mode::Ppt ? kPptTolerance : kDetectTolerance);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotDetectedAtUpperEnd) {
          err << "error: " << e.what() << '\n';
          return kExitScanBracket;
        }
        throw;
      }
      std::ostringstream summary;
      summary << "# threshold=" << fmt(result.threshold) << " bracket=" << fmt(result.bracket)
              << " family=" << family_spec << " mode=" << to_string(mode) << " k=" << k
              << " evaluations=" << result.evaluations.size()
              << (result.detected_at_lower_end ? " detected_at_lower_end" : "");
      if (out_path) {
        std::ofstream f(*out_path);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write " + *out_path);
        f << "p,bound,ppt_min_eig_worst_split\n";
        for (const auto& [p, row] : rows) f << fmt(p) << ',' << fmt(row.first) << ',' << fmt(row.second) << '\n';
        f << summary.str() << '\n';
      }
      out << summary.str() << '\n';
      return kExitOk;
    }

    if (*demo) {
      if (scenario == "ghz") return demo_ghz(out);
      if (scenario == "w") return demo_w(out);
      if (scenario == "wootters-check") return demo_wootters(out);
      return demo_horodecki(out, demo_k, cfg);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace concbound::cli
