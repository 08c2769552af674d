#pragma once

#include "sgf/field.hpp"
#include "sgf/lattice.hpp"

#include <random>
#include <string>

namespace sgf {

/// Diagonal noise map with an optional bounded multiplicative gain,
///
///   phi(u) dW  ~  amp[k] += q_k * (1 + eps * s(||u||_V^2)) * dW_k,
///   s(x) = x / (sat + x),
///
/// acting in the d(u - alpha Lap u) slot of the momentum equation. It is
/// bounded and Lipschitz with computable constants, and invertible on the
/// n_low lowest modes, where q_k > 0 is required.
struct NoiseSpec {
  const Lattice* lat = nullptr;
  RealArray q;       // per-mode base amplitude >= 0
  Real eps = 0;      // multiplicative gain
  Real sat = 1;      // saturation scale > 0
  int n_low = 0;     // rank of the invertible low-mode block

  /// Base squared Hilbert-Schmidt norm (2pi)^2 sum helm*q^2 (gain = 1).
  Real hs_base_sq() const;
  /// Bound constant R = sup_v ||phi(v)||_HS^2 = (1+eps)^2 * hs_base_sq.
  Real bound_R() const;
  /// Lipschitz constant of v -> phi(v): eps * sqrt(hs_base_sq / sat), from
  /// |s(a)-s(b)| <= |a-b|/sat and the norm chain; with eps = 0 it is exactly
  /// 0 and phi is constant.
  Real lipschitz() const;
  Real gain(Real vsq) const { return 1.0 + eps * vsq / (sat + vsq); }

  void validate() const;
};

/// Named q-profiles. "lowband": q = scale on the n_low lowest modes, zero
/// above (degenerate noise); "flat": q = scale on every mode;
/// "sobolev": q = scale / lambda_k.
NoiseSpec make_noise(const Lattice& lat, const std::string& profile, Real scale, Real eps,
                     Real sat, int n_low);

/// One increment of the truncated cylindrical Wiener process: reality-paired
/// complex Gaussians with variance dt/2 per real component of each canonical
/// mode, i.e. E|dW_k|^2 = dt.
struct WienerIncrement {
  ComplexArray dW;
  Real dt = 0;
};

WienerIncrement sample_wiener(const Lattice& lat, Real dt, std::mt19937_64& rng);

/// The noise field phi(u) applied to an increment (a V-valued increment of
/// the u - alpha Lap u variable; the integrator divides by helm).
SpectralVelocity apply_phi(const NoiseSpec& spec, const SpectralVelocity& u,
                           const WienerIncrement& xi);

/// Coefficients c with phi(u) c = P_N v exactly:
/// c_k = (P_N v)_k / (q_k gain) on low modes, zero elsewhere.
ComplexArray pseudo_inverse_g(const NoiseSpec& spec, const SpectralVelocity& u,
                              const SpectralVelocity& v);

/// l2 norm squared of U-coefficients (the Wiener-coordinate norm; see
/// girsanov_consistency for why this is the Girsanov-relevant choice).
Real u_norm_sq(const ComplexArray& coeffs);

/// Low-mode projection P_N.
SpectralVelocity project_low(const NoiseSpec& spec, const SpectralVelocity& v);

/// Everything the viscosity condition needs, plus the condition itself:
///   lhs = l * l1 / (2 theta^2) >= rhs = l0 * R, with
///   l  = nu/(P^2+alpha),
///   l0 = (1 + 2/lambda1 + 2(P^2+alpha)/(lambda1 alpha^2)) K^2,
///   l1 = 2nu/(P^2+alpha) - 1 - K^2 L_phi^2/lambda1.
/// l1 <= 0 is reported as infeasible, not thrown. Feasibility is also
/// reported at 2x and 4x the estimated theta since the estimate is only a
/// lower bound on the true constant.
struct ConditionReport {
  Real lambda1 = 0;
  Real poincare_sq = 0;
  Real k_sq = 0;
  Real theta_hat = 0;
  Real bound_R = 0;
  Real lipschitz = 0;
  Real l = 0;
  Real l0 = 0;
  Real l1 = 0;
  Real lhs = 0;
  Real rhs = 0;
  bool feasible = false;
  bool feasible_2theta = false;
  bool feasible_4theta = false;
};

ConditionReport hypothesis_check(const NoiseSpec& spec, Real nu, Real theta_hat);

/// Largest factor s such that scaling q by s keeps the condition feasible
/// (bisection; 0 if even s -> 0 fails, i.e. l1 <= 0 at zero noise).
Real max_feasible_noise_scale(const NoiseSpec& spec, Real nu, Real theta_hat);

std::string format_report(const ConditionReport& rep);

}  // namespace sgf
