#include "sgf/noise.hpp"

#include <sstream>

namespace sgf {

Real NoiseSpec::hs_base_sq() const { return kDomainVolume * (lat->helm() * q.square()).sum(); }

Real NoiseSpec::bound_R() const { return (1.0 + eps) * (1.0 + eps) * hs_base_sq(); }

Real NoiseSpec::lipschitz() const {
  return eps == 0.0 ? 0.0 : eps * std::sqrt(hs_base_sq() / sat);
}

void NoiseSpec::validate() const {
  if (lat == nullptr || q.size() != lat->size())
    throw Error(ErrorCode::LatticeMismatch, "noise spec does not match lattice");
  if (eps < 0 || !(sat > 0)) throw Error(ErrorCode::InvalidParameter, "eps >= 0, sat > 0 required");
  if (n_low < 0 || n_low > lat->size())
    throw Error(ErrorCode::InvalidParameter, "n_low out of range");
  for (int i = 0; i < n_low; ++i) {
    if (!(q(i) > 0))
      throw Error(ErrorCode::NoiseDegenerate, "q must be positive on the low-mode block");
    if (lat->neg(i) >= n_low)
      throw Error(ErrorCode::InvalidParameter, "low-mode block must be closed under k -> -k");
  }
  for (int i = 0; i < lat->size(); ++i)
    if (q(i) != q(lat->neg(i)))
      throw Error(ErrorCode::InvalidParameter, "q must be symmetric under k -> -k");
}

NoiseSpec make_noise(const Lattice& lat, const std::string& profile, Real scale, Real eps,
                     Real sat, int n_low) {
  NoiseSpec spec;
  spec.lat = &lat;
  spec.eps = eps;
  spec.sat = sat;
  spec.n_low = n_low;
  spec.q = RealArray::Zero(lat.size());
  if (profile == "lowband") {
    for (int i = 0; i < n_low; ++i) {
      spec.q(i) = scale;
      spec.q(lat.neg(i)) = scale;
    }
  } else if (profile == "flat") {
    spec.q.setConstant(scale);
  } else if (profile == "sobolev") {
    spec.q = scale / lat.lambda();
  } else {
    throw Error(ErrorCode::InvalidParameter, "unknown noise profile: " + profile);
  }
  spec.validate();
  return spec;
}

WienerIncrement sample_wiener(const Lattice& lat, Real dt, std::mt19937_64& rng) {
  if (dt < 0) throw Error(ErrorCode::InvalidParameter, "dt must be >= 0");
  WienerIncrement xi;
  xi.dt = dt;
  xi.dW = ComplexArray::Zero(lat.size());
  if (dt == 0) return xi;
  std::normal_distribution<Real> gauss(0.0, std::sqrt(0.5 * dt));
  for (const auto& [ip, im] : lat.pairs()) {
    Complex z(gauss(rng), gauss(rng));
    xi.dW(ip) = z;
    xi.dW(im) = std::conj(z);
  }
  return xi;
}

SpectralVelocity apply_phi(const NoiseSpec& spec, const SpectralVelocity& u,
                           const WienerIncrement& xi) {
  require_lattice(u, *spec.lat);
  Real g = spec.gain(vsq_norm(u, *spec.lat));
  SpectralVelocity out(*spec.lat);
  out.amp = spec.q * g * xi.dW;
  return out;
}

SpectralVelocity project_low(const NoiseSpec& spec, const SpectralVelocity& v) {
  require_lattice(v, *spec.lat);
  SpectralVelocity out(*spec.lat);
  out.amp.head(spec.n_low) = v.amp.head(spec.n_low);
  return out;
}

ComplexArray pseudo_inverse_g(const NoiseSpec& spec, const SpectralVelocity& u,
                              const SpectralVelocity& v) {
  require_lattice(u, *spec.lat);
  require_lattice(v, *spec.lat);
  Real g = spec.gain(vsq_norm(u, *spec.lat));
  ComplexArray c = ComplexArray::Zero(spec.lat->size());
  for (int i = 0; i < spec.n_low; ++i) {
    if (!(spec.q(i) > 0))
      throw Error(ErrorCode::NoiseDegenerate, "zero q on a low mode");
    c(i) = v.amp(i) / (spec.q(i) * g);
  }
  return c;
}

Real u_norm_sq(const ComplexArray& coeffs) { return coeffs.abs2().sum(); }

ConditionReport hypothesis_check(const NoiseSpec& spec, Real nu, Real theta_hat) {
  spec.validate();
  if (!(theta_hat > 0)) throw Error(ErrorCode::InvalidParameter, "theta estimate must be > 0");
  const Lattice& lat = *spec.lat;

  ConditionReport rep;
  rep.lambda1 = lat.lambda1();
  rep.poincare_sq = lat.poincare_sq();
  rep.k_sq = lat.stokes_k_sq();
  rep.theta_hat = theta_hat;
  rep.bound_R = spec.bound_R();
  rep.lipschitz = spec.lipschitz();

  Real psum = rep.poincare_sq + lat.alpha();
  rep.l = nu / psum;
  rep.l0 = (1.0 + 2.0 / rep.lambda1 + 2.0 * psum / (rep.lambda1 * lat.alpha() * lat.alpha())) *
           rep.k_sq;
  rep.l1 = 2.0 * nu / psum - 1.0 - rep.k_sq * rep.lipschitz * rep.lipschitz / rep.lambda1;
  rep.rhs = rep.l0 * rep.bound_R;

  auto lhs_at = [&](Real theta) { return rep.l * rep.l1 / (2.0 * theta * theta); };
  rep.lhs = lhs_at(theta_hat);
  rep.feasible = rep.l1 > 0 && rep.lhs >= rep.rhs;
  rep.feasible_2theta = rep.l1 > 0 && lhs_at(2 * theta_hat) >= rep.rhs;
  rep.feasible_4theta = rep.l1 > 0 && lhs_at(4 * theta_hat) >= rep.rhs;
  return rep;
}

Real max_feasible_noise_scale(const NoiseSpec& spec, Real nu, Real theta_hat) {
  auto feasible_at = [&](Real s) {
    NoiseSpec scaled = spec;
    scaled.q = spec.q * s;
    return hypothesis_check(scaled, nu, theta_hat).feasible;
  };
  if (!feasible_at(0.0)) return 0.0;
  Real lo = 0.0, hi = 1.0;
  while (feasible_at(hi) && hi < 1e12) {
    lo = hi;
    hi *= 2;
  }
  if (hi >= 1e12) return hi;
  for (int it = 0; it < 60; ++it) {
    Real mid = 0.5 * (lo + hi);
    (feasible_at(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::string format_report(const ConditionReport& rep) {
  std::ostringstream os;
  os.precision(12);
  os << "lambda1 = " << rep.lambda1 << "\n"
     << "poincare_sq = " << rep.poincare_sq << "\n"
     << "K_sq = " << rep.k_sq << "\n"
     << "theta_hat = " << rep.theta_hat << "\n"
     << "R = " << rep.bound_R << "\n"
     << "L_phi = " << rep.lipschitz << "\n"
     << "l = " << rep.l << "\n"
     << "l0 = " << rep.l0 << "\n"
     << "l1 = " << rep.l1 << "\n"
     << "lhs = " << rep.lhs << "\n"
     << "rhs = " << rep.rhs << "\n"
     << "feasible = " << (rep.feasible ? "true" : "false") << "\n"
     << "feasible_at_2theta = " << (rep.feasible_2theta ? "true" : "false") << "\n"
     << "feasible_at_4theta = " << (rep.feasible_4theta ? "true" : "false") << "\n";
  if (rep.l1 <= 0) os << "note = infeasible-contraction (l1 <= 0)\n";
  return os.str();
}

}  // namespace sgf
