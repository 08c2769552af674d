#include "sgf/transform.hpp"

namespace sgf {

Transform::Transform(const Lattice& lat) : lat_(&lat), n_(lat.grid_n()), K_(2 * lat.k_max() + 1) {
  synth_.resize(n_, K_);
  for (int j = 0; j < n_; ++j) {
    Real x = kTwoPi * j / n_;
    for (int c = 0; c < K_; ++c) {
      int m = c - lat.k_max();
      synth_(j, c) = std::polar(1.0, m * x);
    }
  }
  row_.resize(lat.size());
  col_.resize(lat.size());
  for (int i = 0; i < lat.size(); ++i) {
    row_[i] = lat.k1(i) + lat.k_max();
    col_[i] = lat.k2(i) + lat.k_max();
  }
}

void Transform::scatter(const ComplexArray& values, ComplexMatrix& coef) const {
  coef.setZero();
  for (int i = 0; i < lat_->size(); ++i) coef(row_[i], col_[i]) = values(i);
}

void Transform::gather(const ComplexMatrix& coef, ComplexArray& values) const {
  values.resize(lat_->size());
  for (int i = 0; i < lat_->size(); ++i) values(i) = coef(row_[i], col_[i]);
}

void Transform::to_grid(const ComplexMatrix& coef, ComplexMatrix& tmp, ComplexMatrix& grid) const {
  tmp.noalias() = synth_ * coef;
  grid.noalias() = tmp * synth_.transpose();
}

void Transform::from_grid(const ComplexMatrix& grid, ComplexMatrix& tmp, ComplexMatrix& coef) const {
  tmp.noalias() = grid * synth_.conjugate();
  coef.noalias() = synth_.adjoint() * tmp;
  coef *= 1.0 / (static_cast<Real>(n_) * n_);
}

void Transform::values_to_grid(const ComplexArray& values, Workspace& ws, ComplexMatrix& grid) const {
  scatter(values, ws.coef);
  to_grid(ws.coef, ws.tmp, grid);
}

Real Transform::integrate(const ComplexMatrix& grid) const {
  Real cell = (kTwoPi / n_) * (kTwoPi / n_);
  return cell * grid.real().sum();
}

}  // namespace sgf
