#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace concbound {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Subsystem dimensions, leftmost tensor factor first.
using Dims = std::vector<int>;

enum class ErrorCode {
  NonSquare,
  NotHermitian,
  NotPSD,
  NotSymmetric,
  NotNormalized,
  BadSubsystemIndex,
  OutOfRange,
  SizeTooSmall,
  DimensionTooSmall,
  DimensionMismatch,
  BadSplit,
  LengthMismatch,
  BadK,
  WrongDims,
  WrongArity,
  NotDetectedAtUpperEnd,
  InvalidState,
  ParseError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace concbound
