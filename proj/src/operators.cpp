#include "sgf/operators.hpp"

namespace sgf {

namespace {

// Per-mode values of the velocity components,
// u1 = -i k2/|k| amp, u2 = i k1/|k| amp (basis direction i k_perp/|k|).
void velocity_values(const SpectralVelocity& u, const Lattice& lat, ComplexArray& u1,
                     ComplexArray& u2) {
  int n = lat.size();
  u1.resize(n);
  u2.resize(n);
  for (int i = 0; i < n; ++i) {
    Real inv_norm = 1.0 / std::sqrt(lat.ksq()(i));
    u1(i) = Complex(0.0, -lat.k2(i) * inv_norm) * u.amp(i);
    u2(i) = Complex(0.0, lat.k1(i) * inv_norm) * u.amp(i);
  }
}

// Per-mode values of q = curl(u - alpha Lap u) = -helm * |k| * amp in this
// basis convention.
ComplexArray potential_vorticity_values(const SpectralVelocity& u, const Lattice& lat) {
  ComplexArray q(lat.size());
  for (int i = 0; i < lat.size(); ++i)
    q(i) = -lat.helm()(i) * std::sqrt(lat.ksq()(i)) * u.amp(i);
  return q;
}

// Leray-projected, band-truncated coefficients of q_u x v where
// q_u = curl(u - alpha Lap u). Taking the k_perp/|k| component of the
// analyzed product is the Leray projection in this representation.
SpectralVelocity curl_cross(const SpectralVelocity& u, const SpectralVelocity& v,
                            const Transform& tr, Transform::Workspace& ws) {
  const Lattice& lat = tr.lattice();
  ComplexArray q = potential_vorticity_values(u, lat);
  ComplexArray v1, v2;
  velocity_values(v, lat, v1, v2);

  tr.values_to_grid(q, ws, ws.grid_q);
  tr.values_to_grid(v1, ws, ws.grid_u1);
  tr.values_to_grid(v2, ws, ws.grid_u2);

  // q x v = q * (-v2, v1)
  ws.grid_f1.array() = -ws.grid_q.array() * ws.grid_u2.array();
  ws.grid_f2.array() = ws.grid_q.array() * ws.grid_u1.array();

  ComplexArray f1(lat.size()), f2(lat.size());
  tr.from_grid(ws.grid_f1, ws.tmp, ws.coef);
  tr.gather(ws.coef, f1);
  tr.from_grid(ws.grid_f2, ws.tmp, ws.coef);
  tr.gather(ws.coef, f2);

  // Divergence-free component in the i k_perp/|k| basis:
  // amp = -i (f . k_perp)/|k|.
  SpectralVelocity out(lat);
  for (int i = 0; i < lat.size(); ++i) {
    Real inv_norm = 1.0 / std::sqrt(lat.ksq()(i));
    out.amp(i) =
        Complex(0.0, -1.0) * (Real(-lat.k2(i)) * f1(i) + Real(lat.k1(i)) * f2(i)) * inv_norm;
  }
  return out;
}

}  // namespace

SpectralVelocity stokes_solve(const SpectralVelocity& f, const Lattice& lat) {
  require_lattice(f, lat);
  SpectralVelocity v(lat);
  v.amp = f.amp / lat.helm();
  return v;
}

Real trilinear_form(const SpectralVelocity& u, const SpectralVelocity& v,
                    const SpectralVelocity& w, const Transform& tr, Transform::Workspace& ws) {
  const Lattice& lat = tr.lattice();
  require_lattice(u, lat);
  require_lattice(v, lat);
  require_lattice(w, lat);

  ComplexArray u1, u2, w1, w2, vc1, vc2;
  velocity_values(u, lat, u1, u2);
  velocity_values(v, lat, vc1, vc2);
  velocity_values(w, lat, w1, w2);

  int n = tr.grid_n();
  ComplexMatrix gu1(n, n), gu2(n, n), gw(n, n), gdv(n, n);
  tr.values_to_grid(u1, ws, gu1);
  tr.values_to_grid(u2, ws, gu2);

  // accumulate sum_j (u . grad v_j) w_j on the grid
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  ComplexArray dv(lat.size());
  const ComplexArray* vcomp[2] = {&vc1, &vc2};
  const ComplexArray* wcomp[2] = {&w1, &w2};
  for (int j = 0; j < 2; ++j) {
    tr.values_to_grid(*wcomp[j], ws, gw);
    for (int i = 0; i < lat.size(); ++i) dv(i) = Complex(0.0, lat.k1(i)) * (*vcomp[j])(i);
    tr.values_to_grid(dv, ws, gdv);
    acc.array() += gu1.array() * gdv.array() * gw.array();
    for (int i = 0; i < lat.size(); ++i) dv(i) = Complex(0.0, lat.k2(i)) * (*vcomp[j])(i);
    tr.values_to_grid(dv, ws, gdv);
    acc.array() += gu2.array() * gdv.array() * gw.array();
  }
  return tr.integrate(acc);
}

SpectralVelocity nonlinear_term(const SpectralVelocity& u, const Transform& tr,
                                Transform::Workspace& ws) {
  require_lattice(u, tr.lattice());
  SpectralVelocity out = curl_cross(u, u, tr, ws);
  symmetrize(out);
  return out;
}

Real h3sq_norm(const SpectralVelocity& u, const Lattice& lat) {
  require_lattice(u, lat);
  return kDomainVolume * ((1.0 + lat.ksq()).cube() * u.amp.abs2()).sum();
}

Real w_dual_norm(const SpectralVelocity& f, const Lattice& lat) {
  require_lattice(f, lat);
  return std::sqrt(kDomainVolume * (f.amp.abs2() / (lat.helm() * lat.lambda())).sum());
}

BoundRatios bound_ratios(const SpectralVelocity& u, const SpectralVelocity& v,
                         const SpectralVelocity& w, const Transform& tr,
                         Transform::Workspace& ws) {
  const Lattice& lat = tr.lattice();
  NormBundle nu = norms(u, lat);
  NormBundle nv = norms(v, lat);
  NormBundle nw = norms(w, lat);
  Real h3 = std::sqrt(h3sq_norm(u, lat));
  if (nu.vsq == 0 || nv.vsq == 0 || nw.wsq == 0)
    throw Error(ErrorCode::DegenerateInput, "bound_ratios needs nonzero fields");

  SpectralVelocity buv = curl_cross(u, v, tr, ws);
  Real lhs1 = std::abs(inner_l2(buv, w, lat));
  SpectralVelocity buu = nonlinear_term(u, tr, ws);
  Real lhs2 = std::abs(inner_l2(buu, w, lat));

  BoundRatios r;
  r.k_tilde_ratio = lhs1 / (h3 * std::sqrt(nv.vsq) * std::sqrt(nw.wsq));
  r.theta_ratio = lhs2 / (nu.vsq * std::sqrt(nw.wsq));
  return r;
}

ConstantEstimate estimate_constants(const Lattice& lat, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidParameter, "need at least one sample");
  Transform tr(lat);
  Transform::Workspace ws(tr);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<Real> decay_pick(0.0, 2.0);

  ConstantEstimate est;
  est.samples = samples;
  for (int s = 0; s < samples; ++s) {
    SpectralVelocity u = random_field(lat, rng, 1.0, decay_pick(rng));
    SpectralVelocity v = random_field(lat, rng, 1.0, decay_pick(rng));
    NormBundle nu = norms(u, lat);
    NormBundle nv = norms(v, lat);
    if (nu.vsq == 0 || nv.vsq == 0) continue;

    // Optimal w comes free through the W-dual norm, so every draw realizes
    // the sharpest ratio for that (u,v).
    SpectralVelocity buu = nonlinear_term(u, tr, ws);
    est.theta_hat = std::max(est.theta_hat, w_dual_norm(buu, lat) / nu.vsq);

    SpectralVelocity buv = curl_cross(u, v, tr, ws);
    Real h3 = std::sqrt(h3sq_norm(u, lat));
    est.k_tilde_hat =
        std::max(est.k_tilde_hat, w_dual_norm(buv, lat) / (h3 * std::sqrt(nv.vsq)));
  }
  return est;
}

}  // namespace sgf
