#include "sgf/field.hpp"

namespace sgf {

SpectralVelocity zero_field(const Lattice& lat) { return SpectralVelocity(lat); }

SpectralVelocity mode_field(const Lattice& lat, int k1, int k2, Complex a) {
  SpectralVelocity u(lat);
  for (int i = 0; i < lat.size(); ++i) {
    if (lat.k1(i) == k1 && lat.k2(i) == k2) {
      u.amp(i) = a;
      u.amp(lat.neg(i)) = std::conj(a);
      return u;
    }
  }
  throw Error(ErrorCode::InvalidParameter, "mode not on lattice");
}

SpectralVelocity low_mode_field(const Lattice& lat, int n_low, Real a) {
  if (n_low < 0 || n_low > lat.size())
    throw Error(ErrorCode::InvalidParameter, "n_low out of range");
  SpectralVelocity u(lat);
  // a/lambda is real and lambda(-k) = lambda(k), so filling negations keeps
  // the reality pairing even when n_low cuts a +/- pair.
  for (int i = 0; i < n_low; ++i) {
    u.amp(i) = a / lat.lambda()(i);
    u.amp(lat.neg(i)) = a / lat.lambda()(i);
  }
  return u;
}

NormBundle norms(const SpectralVelocity& u, const Lattice& lat) {
  require_lattice(u, lat);
  const RealArray a2 = u.amp.abs2();
  NormBundle n;
  n.l2sq = kDomainVolume * a2.sum();
  n.h1sq = kDomainVolume * (lat.ksq() * a2).sum();
  n.vsq = n.l2sq + lat.alpha() * n.h1sq;
  n.starsq = kDomainVolume * (lat.helm().square() * lat.ksq() * a2).sum();
  n.wsq = n.vsq + n.starsq;
  return n;
}

Real vsq_norm(const SpectralVelocity& u, const Lattice& lat) {
  require_lattice(u, lat);
  return kDomainVolume * (lat.helm() * u.amp.abs2()).sum();
}

Real wsq_norm(const SpectralVelocity& u, const Lattice& lat) {
  require_lattice(u, lat);
  return kDomainVolume * (lat.helm() * lat.lambda() * u.amp.abs2()).sum();
}

Real inner_l2(const SpectralVelocity& u, const SpectralVelocity& v, const Lattice& lat) {
  require_lattice(u, lat);
  require_lattice(v, lat);
  return kDomainVolume * (u.amp * v.amp.conjugate()).real().sum();
}

Real inner_v(const SpectralVelocity& u, const SpectralVelocity& v, const Lattice& lat) {
  require_lattice(u, lat);
  require_lattice(v, lat);
  return kDomainVolume * (lat.helm() * (u.amp * v.amp.conjugate()).real()).sum();
}

Real reality_defect(const SpectralVelocity& u) {
  if (u.lat == nullptr) return 0.0;
  Real scale = u.amp.abs().maxCoeff();
  if (scale == 0.0) return 0.0;
  Real worst = 0.0;
  for (int i = 0; i < u.lat->size(); ++i)
    worst = std::max(worst, std::abs(u.amp(i) - std::conj(u.amp(u.lat->neg(i)))));
  return worst / scale;
}

void symmetrize(SpectralVelocity& u) {
  const Lattice& lat = *u.lat;
  for (const auto& [ip, im] : lat.pairs()) {
    Complex a = 0.5 * (u.amp(ip) + std::conj(u.amp(im)));
    u.amp(ip) = a;
    u.amp(im) = std::conj(a);
  }
}

bool all_finite(const SpectralVelocity& u) {
  return u.amp.real().allFinite() && u.amp.imag().allFinite();
}

}  // namespace sgf
