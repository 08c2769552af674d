#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace sgf {

using Real = double;
using Complex = std::complex<Real>;

using RealArray = Eigen::ArrayXd;
using ComplexArray = Eigen::ArrayXcd;
using IntArray = Eigen::ArrayXi;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

// Volume of the periodic domain [0,2pi)^2. Every inner product and norm in
// this library carries this factor explicitly; tests assert it once against
// grid quadrature and the rest of the code relies on it.
inline constexpr Real kDomainVolume = 4.0 * 3.14159265358979323846 * 3.14159265358979323846;
inline constexpr Real kTwoPi = 2.0 * 3.14159265358979323846;

enum class ErrorCode {
  InvalidCutoff,
  LatticeMismatch,
  DegenerateInput,
  NoiseDegenerate,
  InvalidParameter,
  InsufficientResolution,
  BlowUpDetected,
  InvalidExperiment,
  InvalidDictionary,
  InsufficientSignal,
  InvalidConfig,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown when a trajectory leaves the finite range; carries the time and
// W-norm at detection so runs can report where things went wrong.
class BlowUpError : public Error {
 public:
  BlowUpError(Real t, Real wsq)
      : Error(ErrorCode::BlowUpDetected,
              "blow-up detected at t=" + std::to_string(t) + " (||u||_W^2=" + std::to_string(wsq) + ")"),
        t_(t),
        wsq_(wsq) {}
  Real t() const { return t_; }
  Real wsq() const { return wsq_; }

 private:
  Real t_;
  Real wsq_;
};

}  // namespace sgf
