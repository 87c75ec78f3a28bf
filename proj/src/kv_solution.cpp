#include "liekv/kv_solution.hpp"

#include <map>
#include <mutex>

namespace liekv {

ScalarSeries psi_series(int order) { return series_psi(order); }

const LieSeries& bch_cached(int maxdeg) {
  static std::map<int, LieSeries> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(maxdeg);
  if (it != cache.end()) return it->second;
  return cache.emplace(maxdeg, bch_series(maxdeg)).first->second;
}

LieSeries f1_series(int maxdeg) {
  TLieSeries zt = t_scale_by_degree(bch_cached(maxdeg), 0);  // Z(t) = Z(tX,tY)
  TLieSeries xy = lift_t(LieSeries::generator(maxdeg, 0) + LieSeries::generator(maxdeg, 1));

  // psi(ad Z(t))(X+Y): Z(t) has no degree-0 part, so the sum truncates.
  TLieSeries psi_part = apply_ad_series(series_psi(maxdeg), zt, xy, maxdeg);

  // prefactor sum_k c_k(t) ad(X)^k applied termwise
  std::vector<TPoly> pref = prefactor_tz(maxdeg);
  TLieSeries xlift = lift_t(LieSeries::generator(maxdeg, 0));
  TLieSeries integrand(maxdeg);
  TLieSeries cur = psi_part;
  for (int k = 0; k <= maxdeg; ++k) {
    if (k > 0) {
      cur = lie_bracket(xlift, cur, maxdeg);
      if (cur.is_zero_series()) break;
    }
    for (const auto& [kw, p] : cur.terms) integrand.add_term(Word::from_key(kw), p * pref[k]);
  }
  return t_integrate01(integrand);
}

KvPair f0_g0(int maxdeg) {
  LieSeries x = LieSeries::generator(maxdeg, 0);
  LieSeries y = LieSeries::generator(maxdeg, 1);
  LieSeries f1 = f1_series(maxdeg);
  LieSeries f1_flipped = substitute(f1, -x, -y, maxdeg);  // F1(-X,-Y)
  LieSeries conj = apply_ad_series(series_exp(maxdeg), x, f1_flipped, maxdeg);
  LieSeries f0 =
      (f1 + conj) * Rat(1, 2) + (bch_cached(maxdeg) - x) * Rat(1, 4);
  LieSeries g0 = substitute(f0, -y, -x, maxdeg);  // G0(X,Y) = F0(-Y,-X)
  return {std::move(f0), std::move(g0)};
}

}  // namespace liekv
