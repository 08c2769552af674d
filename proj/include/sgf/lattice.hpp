#pragma once

#include "sgf/types.hpp"

#include <vector>

namespace sgf {

/// Truncated wavevector set for the 2D torus with the per-mode multiplier
/// tables used everywhere else: |k|^2, the Helmholtz factor 1+alpha|k|^2 and
/// the eigenvalue lambda_k = 1 + (1+alpha|k|^2)|k|^2 of the W-vs-V
/// eigenproblem (diagonal in this basis).
///
/// Modes are every k in Z^2 \ {0} with |k1|,|k2| <= k_max, sorted by
/// (|k|^2, k1, k2) so lambda is non-decreasing and the first `n` modes are
/// the n lowest-eigenvalue ones. The set is closed under k -> -k and the
/// index of the partner is tabulated.
class Lattice {
 public:
  static Lattice build(int k_max, Real alpha);

  int k_max() const { return k_max_; }
  Real alpha() const { return alpha_; }
  int size() const { return static_cast<int>(ksq_.size()); }
  /// Physical grid size for exactly dealiased quadratic products,
  /// grid_n >= 3(k_max+1) (even).
  int grid_n() const { return grid_n_; }

  int k1(int i) const { return k1_[i]; }
  int k2(int i) const { return k2_[i]; }
  const RealArray& ksq() const { return ksq_; }
  const RealArray& helm() const { return helm_; }
  const RealArray& lambda() const { return lambda_; }
  /// Index of -k for mode i.
  int neg(int i) const { return neg_[i]; }
  /// Pairs (i_plus, i_minus) with the canonical representative first
  /// (k1 > 0, or k1 == 0 and k2 > 0).
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  Real lambda1() const { return lambda_(0); }
  /// Squared Poincare constant, 1/min|k|^2 (= 1 on the full torus lattice).
  Real poincare_sq() const { return 1.0 / ksq_.minCoeff(); }
  /// Squared operator norm of the generalized Stokes inverse as a map
  /// V -> W: max over modes of lambda/helm^2.
  Real stokes_k_sq() const { return (lambda_ / helm_.square()).maxCoeff(); }

  bool same_as(const Lattice& other) const {
    return k_max_ == other.k_max_ && alpha_ == other.alpha_;
  }

 private:
  Lattice() = default;

  int k_max_ = 0;
  Real alpha_ = 0;
  int grid_n_ = 0;
  std::vector<int> k1_, k2_;
  RealArray ksq_, helm_, lambda_;
  std::vector<int> neg_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace sgf
