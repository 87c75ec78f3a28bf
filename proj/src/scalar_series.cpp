#include "liekv/scalar_series.hpp"

#include <cassert>
#include <stdexcept>

namespace liekv {

ScalarSeries ss_mul(const ScalarSeries& a, const ScalarSeries& b, int order) {
  ScalarSeries out(order);
  int na = a.order(), nb = b.order();
  for (int i = 0; i <= na && i <= order; ++i) {
    if (is_zero(a.c[i])) continue;
    for (int j = 0; j <= nb && i + j <= order; ++j) {
      if (is_zero(b.c[j])) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

ScalarSeries ss_div(const ScalarSeries& a, const ScalarSeries& b, int order) {
  if (b.order() < 0 || is_zero(b.c[0]))
    throw std::invalid_argument("ss_div: denominator has zero constant term");
  ScalarSeries q(order);
  for (int k = 0; k <= order; ++k) {
    Rat acc = a.at(k);
    for (int j = 0; j < k; ++j)
      if (!is_zero(q.c[j])) acc -= q.c[j] * b.at(k - j);
    q.c[k] = acc / b.c[0];
  }
  return q;
}

ScalarSeries series_exp(int order) {
  ScalarSeries s(order);
  Rat f(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f /= k;
    s.c[k] = f;
  }
  return s;
}

ScalarSeries series_em1_over_z(int order) {
  ScalarSeries s(order);
  for (int k = 0; k <= order; ++k) s.c[k] = Rat(1) / Rat(factorial(k + 1));
  return s;
}

ScalarSeries series_one_minus_emz_over_z(int order) {
  ScalarSeries s(order);
  for (int k = 0; k <= order; ++k) {
    s.c[k] = Rat(1) / Rat(factorial(k + 1));
    if (k % 2 == 1) s.c[k] = -s.c[k];
  }
  return s;
}

ScalarSeries series_exp_minus_one(int order) {
  ScalarSeries s = series_exp(order);
  s.c[0] = 0;
  return s;
}

ScalarSeries series_one_minus_exp_neg(int order) {
  ScalarSeries s(order);
  for (int k = 1; k <= order; ++k) {
    s.c[k] = Rat(1) / Rat(factorial(k));
    if (k % 2 == 0) s.c[k] = -s.c[k];
  }
  return s;
}

ScalarSeries series_bernoulli_gf(int order) {
  ScalarSeries one(0);
  one.c[0] = 1;
  return ss_div(one, series_em1_over_z(order), order);
}

ScalarSeries series_z_over_one_minus_emz(int order) {
  ScalarSeries one(0);
  one.c[0] = 1;
  return ss_div(one, series_one_minus_emz_over_z(order), order);
}

ScalarSeries series_psi(int order) {
  // numerator e^z-1-z and denominator (e^z-1)(1-e^{-z}) = e^z+e^{-z}-2
  // both start at z^2; divide after shifting by z^2.
  ScalarSeries num(order), den(order);
  for (int k = 0; k <= order; ++k) {
    num.c[k] = Rat(1) / Rat(factorial(k + 2));
    if ((k + 2) % 2 == 0) den.c[k] = Rat(2) / Rat(factorial(k + 2));
  }
  return ss_div(num, den, order);
}

ScalarSeries series_sinh_half_over_half(int order) {
  ScalarSeries s(order);
  Rat pow4(1);
  for (int j = 0; 2 * j <= order; ++j) {
    s.c[2 * j] = Rat(1) / (pow4 * Rat(factorial(2 * j + 1)));
    pow4 *= 4;
  }
  return s;
}

Rat bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: n >= 0 required");
  static std::vector<Rat> table;  // b_0..b_K
  if (n >= static_cast<int>(table.size())) {
    int order = n + 8;
    ScalarSeries gf = series_bernoulli_gf(order);
    table.resize(order + 1);
    for (int k = 0; k <= order; ++k) table[k] = gf.c[k] * Rat(factorial(k));
  }
  return table[n];
}

TPoly operator+(const TPoly& a, const TPoly& b) {
  TPoly out = a;
  out += b;
  return out;
}

TPoly& operator+=(TPoly& a, const TPoly& b) {
  if (b.c.size() > a.c.size()) a.c.resize(b.c.size());
  for (std::size_t j = 0; j < b.c.size(); ++j) a.c[j] += b.c[j];
  a.normalize();
  return a;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.c.empty() || b.c.empty()) return TPoly();
  TPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, Rat());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  out.normalize();
  return out;
}

TPoly operator*(const TPoly& a, const Rat& s) {
  if (is_zero(s)) return TPoly();
  TPoly out = a;
  for (auto& x : out.c) x *= s;
  return out;
}

TPoly operator-(const TPoly& a) { return a * Rat(-1); }

Rat tpoly_integrate01(const TPoly& p) {
  Rat acc;
  for (std::size_t j = 0; j < p.c.size(); ++j)
    acc += p.c[j] / Rat(static_cast<long>(j) + 1);
  return acc;
}

Rat tpoly_eval(const TPoly& p, const Rat& t) {
  Rat acc;
  for (std::size_t j = p.c.size(); j-- > 0;) acc = acc * t + p.c[j];
  return acc;
}

std::string tpoly_str(const TPoly& p) {
  if (p.c.empty()) return "0";
  std::string s;
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    if (is_zero(p.c[j])) continue;
    std::string term = rat_str(p.c[j]);
    if (j >= 1) term += "*t" + (j > 1 ? "^" + std::to_string(j) : "");
    s += s.empty() ? term : (sgn(p.c[j]) > 0 ? "+" + term : term);
  }
  return s;
}

std::vector<TPoly> prefactor_tz(int order) {
  // (1-e^{-tz})/z has z^k coefficient (-1)^k t^{k+1}/(k+1)!;
  // (1-e^{-z})/z has z^k coefficient (-1)^k/(k+1)!.  Long division in z.
  std::vector<TPoly> q(order + 1);
  ScalarSeries den = series_one_minus_emz_over_z(order);
  for (int k = 0; k <= order; ++k) {
    Rat nk = Rat(1) / Rat(factorial(k + 1));
    if (k % 2 == 1) nk = -nk;
    TPoly acc = TPoly::monomial(nk, k + 1);
    for (int j = 0; j < k; ++j) acc += q[j] * (-den.c[k - j]);
    q[k] = acc;  // den.c[0] == 1
  }
  return q;
}

}  // namespace liekv
