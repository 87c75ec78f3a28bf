#ifndef LIEKV_SCALAR_SERIES_HPP
#define LIEKV_SCALAR_SERIES_HPP

#include <vector>

#include "liekv/rational.hpp"

namespace liekv {

// Truncated power series in one variable z with exact rational coefficients.
// c[k] is the coefficient of z^k; the vector length fixes the truncation.
struct ScalarSeries {
  std::vector<Rat> c;

  ScalarSeries() = default;
  explicit ScalarSeries(int order) : c(order + 1) {}
  int order() const { return static_cast<int>(c.size()) - 1; }
  const Rat& at(int k) const {
    static const Rat zero;
    return k <= order() ? c[k] : zero;
  }
};

ScalarSeries ss_mul(const ScalarSeries& a, const ScalarSeries& b, int order);
// Requires b.c[0] != 0.
ScalarSeries ss_div(const ScalarSeries& a, const ScalarSeries& b, int order);

// e^z, (e^z-1)/z, (1-e^{-z})/z, e^z-1, 1-e^{-z}
ScalarSeries series_exp(int order);
ScalarSeries series_em1_over_z(int order);
ScalarSeries series_one_minus_emz_over_z(int order);
ScalarSeries series_exp_minus_one(int order);
ScalarSeries series_one_minus_exp_neg(int order);

// z/(e^z-1): the Bernoulli generating function, b_n = n! * coefficient of z^n.
ScalarSeries series_bernoulli_gf(int order);
// z/(1-e^{-z}) = 1 + z/2 + z^2/12 + 0 z^3 - ...
ScalarSeries series_z_over_one_minus_emz(int order);
// psi(z) = (e^z-1-z) / ((e^z-1)(1-e^{-z}));  psi(0) = 1/2, psi(z)+psi(-z) = 1.
ScalarSeries series_psi(int order);
// sinh(z/2)/(z/2)
ScalarSeries series_sinh_half_over_half(int order);

Rat bernoulli(int n);

// Polynomial in the deformation parameter t, c[j] the coefficient of t^j.
// Trailing zeros are stripped, so is_zero(p) iff p.c.empty().
struct TPoly {
  std::vector<Rat> c;

  TPoly() = default;
  TPoly(const Rat& constant) {
    if (!liekv::is_zero(constant)) c.push_back(constant);
  }
  static TPoly monomial(const Rat& coeff, int power) {
    TPoly p;
    if (!liekv::is_zero(coeff)) {
      p.c.assign(power + 1, Rat());
      p.c[power] = coeff;
    }
    return p;
  }
  void normalize() {
    while (!c.empty() && liekv::is_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 when zero
  bool operator==(const TPoly& o) const { return c == o.c; }
};

inline bool is_zero(const TPoly& p) { return p.c.empty(); }

TPoly operator+(const TPoly& a, const TPoly& b);
TPoly& operator+=(TPoly& a, const TPoly& b);
TPoly operator*(const TPoly& a, const TPoly& b);
TPoly operator*(const TPoly& a, const Rat& s);
TPoly operator-(const TPoly& a);

Rat tpoly_integrate01(const TPoly& p);   // integral over t in [0,1]
Rat tpoly_eval(const TPoly& p, const Rat& t);
std::string tpoly_str(const TPoly& p);   // e.g. "1/2 - 1/2*t^2"

// Coefficients in z of (1 - e^{-tz})/(1 - e^{-z}) as polynomials in t;
// index k is the z^k coefficient, for k = 0..order. Both numerator and
// denominator are divisible by z, so this is a genuine power series in z.
std::vector<TPoly> prefactor_tz(int order);

}  // namespace liekv

#endif
