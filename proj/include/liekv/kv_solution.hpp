#ifndef LIEKV_KV_SOLUTION_HPP
#define LIEKV_KV_SOLUTION_HPP

#include "liekv/bch.hpp"
#include "liekv/lie_series.hpp"

namespace liekv {

// A tangential pair (F, G) of universal Lie series without constant term.
struct KvPair {
  LieSeries f, g;
};

// psi(z) = (e^z-1-z)/((e^z-1)(1-e^{-z})) by exact series division;
// psi(0) = 1/2 and psi(z) + psi(-z) = 1.
ScalarSeries psi_series(int order);

// F1(X,Y) = ( \int_0^1 (1-e^{-t adX})/(1-e^{-adX}) o psi(ad Z(t)) dt )(X+Y)
// with Z(t) = Z(tX, tY). The operator prefactor is expanded as a scalar
// series in z with t-polynomial coefficients and specialized to z = adX;
// the t-polynomial coefficients of the integrand are integrated exactly.
LieSeries f1_series(int maxdeg);

// F0 = (F1(X,Y) + e^{adX} F1(-X,-Y))/2 + (Z(X,Y) - X)/4,  G0(X,Y) = F0(-Y,-X).
// The pair is symmetric by construction: G(X,Y) = F(-Y,-X).
KvPair f0_g0(int maxdeg);

// Campbell-Hausdorff series shared by the KV constructions and checks,
// cached per truncation order.
const LieSeries& bch_cached(int maxdeg);

}  // namespace liekv

#endif
