#include "sgf/lattice.hpp"

#include <algorithm>
#include <map>

namespace sgf {

Lattice Lattice::build(int k_max, Real alpha) {
  if (k_max < 1) throw Error(ErrorCode::InvalidCutoff, "k_max must be >= 1");
  if (!(alpha > 0)) throw Error(ErrorCode::InvalidParameter, "alpha must be > 0");

  struct Mode {
    int k1, k2, ksq;
  };
  std::vector<Mode> modes;
  modes.reserve((2 * k_max + 1) * (2 * k_max + 1) - 1);
  for (int a = -k_max; a <= k_max; ++a)
    for (int b = -k_max; b <= k_max; ++b) {
      if (a == 0 && b == 0) continue;
      modes.push_back({a, b, a * a + b * b});
    }
  std::sort(modes.begin(), modes.end(), [](const Mode& x, const Mode& y) {
    if (x.ksq != y.ksq) return x.ksq < y.ksq;
    if (x.k1 != y.k1) return x.k1 < y.k1;
    return x.k2 < y.k2;
  });

  Lattice lat;
  lat.k_max_ = k_max;
  lat.alpha_ = alpha;
  int n = static_cast<int>(modes.size());
  lat.k1_.resize(n);
  lat.k2_.resize(n);
  lat.ksq_.resize(n);
  lat.helm_.resize(n);
  lat.lambda_.resize(n);
  lat.neg_.resize(n);

  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i) {
    lat.k1_[i] = modes[i].k1;
    lat.k2_[i] = modes[i].k2;
    Real ksq = static_cast<Real>(modes[i].ksq);
    lat.ksq_(i) = ksq;
    lat.helm_(i) = 1.0 + alpha * ksq;
    lat.lambda_(i) = 1.0 + lat.helm_(i) * ksq;
    index[{modes[i].k1, modes[i].k2}] = i;
  }
  for (int i = 0; i < n; ++i) {
    lat.neg_[i] = index.at({-modes[i].k1, -modes[i].k2});
    bool canonical = modes[i].k1 > 0 || (modes[i].k1 == 0 && modes[i].k2 > 0);
    if (canonical) lat.pairs_.emplace_back(i, lat.neg_[i]);
  }

  int g = 3 * (k_max + 1);
  if (g % 2 != 0) ++g;
  lat.grid_n_ = g;
  return lat;
}

}  // namespace sgf
