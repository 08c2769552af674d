#pragma once

#include "sgf/field.hpp"
#include "sgf/lattice.hpp"

namespace sgf {

/// Exact spectral <-> grid transforms for the retained band, implemented as
/// partial DFT matrix products (grid_n x K synthesis matrix, K = 2 k_max+1).
///
/// Because grid_n >= 3(k_max+1) > 3 k_max, quadratic products of retained
/// fields are analyzed without aliasing onto the retained band: grid
/// evaluation followed by analysis is the exact Galerkin truncation, not an
/// approximation. The algebraic identity tests rely on this.
///
/// A Transform is immutable after construction and safe to share across
/// threads; per-call scratch lives in a Workspace owned by the caller.
class Transform {
 public:
  explicit Transform(const Lattice& lat);

  const Lattice& lattice() const { return *lat_; }
  int grid_n() const { return n_; }
  int band() const { return K_; }

  struct Workspace {
    ComplexMatrix coef;   // K x K
    ComplexMatrix tmp;    // n x K
    ComplexMatrix grid_q, grid_u1, grid_u2, grid_f1, grid_f2;  // n x n
    explicit Workspace(const Transform& tr)
        : coef(tr.K_, tr.K_),
          tmp(tr.n_, tr.K_),
          grid_q(tr.n_, tr.n_),
          grid_u1(tr.n_, tr.n_),
          grid_u2(tr.n_, tr.n_),
          grid_f1(tr.n_, tr.n_),
          grid_f2(tr.n_, tr.n_) {}
  };

  /// Scatter per-mode values into the (k1,k2) coefficient matrix.
  void scatter(const ComplexArray& values, ComplexMatrix& coef) const;
  /// Gather lattice-mode coefficients back out of a coefficient matrix.
  void gather(const ComplexMatrix& coef, ComplexArray& values) const;

  /// grid = synth * coef * synth^T (pointwise field values).
  void to_grid(const ComplexMatrix& coef, ComplexMatrix& tmp, ComplexMatrix& grid) const;
  /// coef = synth^H * grid * conj(synth) / n^2 (exact for band content).
  void from_grid(const ComplexMatrix& grid, ComplexMatrix& tmp, ComplexMatrix& coef) const;

  /// Evaluate one scalar spectral series (per-mode values) on the grid.
  void values_to_grid(const ComplexArray& values, Workspace& ws, ComplexMatrix& grid) const;

  /// Quadrature of a grid scalar over the domain: (2pi/n)^2 * sum.
  Real integrate(const ComplexMatrix& grid) const;

 private:
  const Lattice* lat_;
  int n_;
  int K_;
  ComplexMatrix synth_;                 // n x K
  std::vector<int> row_, col_;          // per-mode slot in the coef matrix
};

}  // namespace sgf
