#include "concbound/state_io.hpp"

#include <fstream>

namespace concbound {

using nlohmann::json;

namespace {

Dims read_dims(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array()) throw Error(ErrorCode::ParseError, "missing \"dims\" array");
  Dims dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer()) throw Error(ErrorCode::ParseError, "dims must be integers");
    dims.push_back(d.get<int>());
  }
  return dims;
}

double number(const json& x) {
  if (!x.is_number()) throw Error(ErrorCode::ParseError, "expected a number");
  return x.get<double>();
}

}  // namespace

json to_json(const DensityMatrix& rho) {
  const auto& m = rho.matrix();
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json rr = json::array(), ir = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ir.push_back(m(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return {{"dims", rho.dims()}, {"re", re}, {"im", im}};
}

json to_json(const PureState& psi) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    re.push_back(psi.amplitudes()(i).real());
    im.push_back(psi.amplitudes()(i).imag());
  }
  return {{"dims", psi.dims()}, {"re", re}, {"im", im}};
}

std::variant<DensityMatrix, PureState> state_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "state must be a JSON object");
  const Dims dims = read_dims(j);
  if (!j.contains("re") || !j["re"].is_array()) throw Error(ErrorCode::ParseError, "missing \"re\" array");
  const json& re = j["re"];
  const json im = j.contains("im") ? j["im"] : json();
  const bool matrix_layout = !re.empty() && re.front().is_array();

  if (!matrix_layout) {
    const auto n = re.size();
    if (!im.is_null() && (!im.is_array() || im.size() != n)) {
      throw Error(ErrorCode::ParseError, "\"im\" must match \"re\" in length");
    }
    CVector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      v(static_cast<Eigen::Index>(i)) = Complex(number(re[i]), im.is_null() ? 0.0 : number(im[i]));
    }
    return PureState(v, dims);
  }

  const auto n = re.size();
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (!re[r].is_array() || re[r].size() != n) throw Error(ErrorCode::ParseError, "\"re\" must be square");
    if (!im.is_null() && (!im.is_array() || im.size() != n || !im[r].is_array() || im[r].size() != n)) {
      throw Error(ErrorCode::ParseError, "\"im\" must match \"re\" in shape");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const double imag = im.is_null() ? 0.0 : number(im[r][c]);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(number(re[r][c]), imag);
    }
  }
  return DensityMatrix(m, dims);
}

DensityMatrix density_from_json(const json& j) {
  auto state = state_from_json(j);
  if (auto* psi = std::get_if<PureState>(&state)) return DensityMatrix(*psi);
  return std::get<DensityMatrix>(std::move(state));
}

DensityMatrix load_density(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return density_from_json(j);
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace concbound
