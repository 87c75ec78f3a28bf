#ifndef LIEKV_BCH_HPP
#define LIEKV_BCH_HPP

#include "liekv/lie_series.hpp"

namespace liekv {

// The Campbell-Hausdorff series Z(X,Y) = log(exp X exp Y) through maxdeg,
// by the Dynkin iterated-bracket sum: accumulate the rational weight
// (-1)^{m-1} / (m p_1!q_1!...p_m!q_m!) of every word X^{p_1}Y^{q_1}...X^{p_m}Y^{q_m}
// with p_i + q_i > 0, then map each word w to (1/|w|) times its left-normed
// bracketing. Intended for maxdeg up to ~10; see bch_series for higher orders.
LieSeries bch_dynkin(int maxdeg);

// The same series as dynkin_project(assoc_log(assoc_exp(X) assoc_exp(Y))).
// Must agree with bch_dynkin coefficient-wise; the two methods are an
// oracle pair.
LieSeries bch_log(int maxdeg);

// Fast path: Lyndon coordinates of assoc_log(assoc_exp(X) assoc_exp(Y)) by
// triangular peeling. Agrees with both methods above (the logarithm is a Lie
// element, on which the Dynkin map is the identity).
LieSeries bch_series(int maxdeg);

// The part of Z with Y-degree <= 1, computed directly as
// X + (z/(1-e^{-z}))(ad X) Y. Equals y_degree_at_most(bch, 1).
LieSeries bch_linear_in_y(int maxdeg);

}  // namespace liekv

#endif
