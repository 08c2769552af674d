#pragma once

#include "sgf/lattice.hpp"
#include "sgf/types.hpp"

#include <cmath>
#include <random>

namespace sgf {

/// Divergence-free velocity field on the torus, one complex amplitude per
/// retained wavevector:
///
///   u(x) = sum_k amp[k] * (i k_perp/|k|) * exp(i k.x),  k_perp = (-k2, k1).
///
/// The phase i makes the direction vector odd under k -> -k, so real fields
/// are exactly those with amp[-k] = conj(amp[k]). Operations that can
/// disturb that pairing through roundoff re-symmetrize their output.
/// div u = 0 holds structurally (k . k_perp = 0) and the zero mode is
/// excluded, so fields are mean-free by construction.
struct SpectralVelocity {
  const Lattice* lat = nullptr;
  ComplexArray amp;

  SpectralVelocity() = default;
  explicit SpectralVelocity(const Lattice& l) : lat(&l), amp(ComplexArray::Zero(l.size())) {}
};

/// Squared norms of one field. vsq = l2sq + alpha*h1sq is the V (energy)
/// norm, starsq = |curl(u - alpha Lap u)|^2, wsq = vsq + starsq.
struct NormBundle {
  Real l2sq = 0;
  Real h1sq = 0;
  Real vsq = 0;
  Real starsq = 0;
  Real wsq = 0;
};

inline void require_lattice(const SpectralVelocity& u, const Lattice& lat) {
  if (u.lat == nullptr || !u.lat->same_as(lat) || u.amp.size() != lat.size())
    throw Error(ErrorCode::LatticeMismatch, "field does not live on the given lattice");
}

SpectralVelocity zero_field(const Lattice& lat);

/// Single +/- pair: amplitude a on (k1,k2) and conj(a) on the negation.
SpectralVelocity mode_field(const Lattice& lat, int k1, int k2, Complex a);

/// Deterministic smooth profile on the n_low lowest modes, amp = a/lambda_k.
SpectralVelocity low_mode_field(const Lattice& lat, int n_low, Real a);

/// Reality-paired complex Gaussian amplitudes with per-mode std
/// scale/(1+|k|^2)^(decay/2), for test/measurement sweeps.
template <typename Rng>
SpectralVelocity random_field(const Lattice& lat, Rng& rng, Real scale, Real decay);

NormBundle norms(const SpectralVelocity& u, const Lattice& lat);

Real vsq_norm(const SpectralVelocity& u, const Lattice& lat);
Real wsq_norm(const SpectralVelocity& u, const Lattice& lat);

/// L2 inner product (u,v) of two real fields.
Real inner_l2(const SpectralVelocity& u, const SpectralVelocity& v, const Lattice& lat);
/// V inner product (u,v) + alpha ((u,v)).
Real inner_v(const SpectralVelocity& u, const SpectralVelocity& v, const Lattice& lat);

/// Max per-mode violation of amp[-k] = conj(amp[k]), relative to the largest
/// amplitude (0 for the zero field).
Real reality_defect(const SpectralVelocity& u);

/// Enforce the reality pairing exactly by averaging with the conjugate
/// partner.
void symmetrize(SpectralVelocity& u);

bool all_finite(const SpectralVelocity& u);

// -- implementation -----------------------------------------------------

template <typename Rng>
SpectralVelocity random_field(const Lattice& lat, Rng& rng, Real scale, Real decay) {
  std::normal_distribution<Real> gauss(0.0, 1.0);
  SpectralVelocity u(lat);
  for (const auto& [ip, im] : lat.pairs()) {
    Real sigma = scale / std::pow(1.0 + lat.ksq()(ip), 0.5 * decay);
    Complex a(sigma * gauss(rng), sigma * gauss(rng));
    u.amp(ip) = a;
    u.amp(im) = std::conj(a);
  }
  return u;
}

}  // namespace sgf
