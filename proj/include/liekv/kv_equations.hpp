#ifndef LIEKV_KV_EQUATIONS_HPP
#define LIEKV_KV_EQUATIONS_HPP

#include "liekv/kv_solution.hpp"

namespace liekv {

// Residual of the Lie-series equation
//   X + Y - Z(Y,X) = (1 - e^{-adX}) F + (e^{adY} - 1) G.
struct Eq7Residual {
  LieSeries residual;
  // per degree 1..max_degree: largest |numerator| among residual
  // coefficients of that degree, as a decimal string ("0" when clean)
  std::vector<std::string> per_degree_max_numerator;

  bool zero_through(int maxdeg) const {
    for (const auto& [k, c] : residual.terms)
      if (static_cast<int>(Word::from_key(k).len) <= maxdeg && !is_zero(c)) return false;
    return true;
  }
};

Eq7Residual check_eq7(const KvPair& p, int maxdeg);

// The universal divergence tr(adX o d_X F + adY o d_Y G) as a necklace
// series: one occurrence of the differentiation generator in each Lie
// monomial is replaced by a slot, the slotted bracketing is rewritten into
// an operator word over the ad letters (slot kept rightmost), and the trace
// closes the word into a necklace.
CyclicSeries divergence(const KvPair& p, int maxdeg);

// T(X,Y) = (1/2) tr(B(adX) + B(adY) - B(adZ) - 1) with B(z) = z/(e^z - 1),
// expanded universally over the ad letters. The four constant terms cancel
// exactly and are asserted away before the cyclic reduction.
CyclicSeries trace_rhs(int maxdeg);

struct Eq8Residual {
  CyclicSeries residual;

  bool zero_through(int maxdeg) const {
    for (const auto& [k, c] : residual.terms)
      if (static_cast<int>(Word::from_key(k).len) <= maxdeg && !is_zero(c)) return false;
    return true;
  }
  // largest degree d <= maxdeg with residual zero in all degrees <= d
  int zero_prefix_degree(int maxdeg) const {
    int d = 0;
    while (d < maxdeg && zero_through(d + 1)) ++d;
    return d;
  }
};

Eq8Residual check_eq8(const KvPair& p, int maxdeg);

}  // namespace liekv

#endif
