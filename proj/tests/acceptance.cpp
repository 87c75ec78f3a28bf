// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "liekv/enveloping.hpp"
#include "liekv/kv_equations.hpp"
#include "liekv/numeric_checks.hpp"

using namespace liekv;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word W(const std::string& s) { return word_from_string(s, Alphabet::generators); }

constexpr std::uint64_t kSeed = 20240817;

// --- criterion 1: Eq (1) coefficients by both methods, cross-method zero ---
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  LieSeries zd = bch_dynkin(8);
  LieSeries zl = bch_log(8);
  double elapsed = seconds_since(t0);

  int d = 8;
  auto x = LieSeries::generator(d, 0);
  auto y = LieSeries::generator(d, 1);
  auto br = [&](const LieSeries& a, const LieSeries& b) { return lie_bracket(a, b, d); };
  // the degree 2..4 terms as printed in the classical expansion
  LieSeries deg2 = br(x, y) * rat(1, 2);
  LieSeries deg3 = br(x, br(x, y)) * rat(1, 12) + br(y, br(y, x)) * rat(1, 12);
  LieSeries deg4 = br(y, br(x, br(y, x))) * rat(1, 48) - br(x, br(y, br(x, y))) * rat(1, 48);

  bool ok = true;
  for (const LieSeries* z : {&zd, &zl}) {
    ok = ok && z->degree_part(2) == deg2.degree_part(2);
    ok = ok && z->degree_part(3) == deg3.degree_part(3);
    ok = ok && z->degree_part(4) == deg4.degree_part(4);
  }
  bool cross = (zd - zl).is_zero_series();
  bool timing = elapsed < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "BCH coefficients exact by both methods, cross-method residual %s through "
                "degree 8, %.2f s",
                cross ? "0" : "NONZERO", elapsed);
  report(1, ok && cross && timing, buf);
}

// --- criterion 2: Witt dimensions through degree 12 ---
void criterion2() {
  bool ok = true;
  long expected[] = {2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
  for (int n = 1; n <= 12; ++n) {
    long brute = 0;  // Moebius-free oracle: count rotation-minimal words
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << n); ++bits)
      if (is_lyndon(Word(bits, n))) ++brute;
    ok = ok && static_cast<long>(lyndon_words(n).size()) == expected[n - 1];
    ok = ok && witt_dimension(n) == expected[n - 1];
    ok = ok && brute == expected[n - 1];
  }
  report(2, ok, "Witt dimensions match lyndon_basis counts through degree 12");
}

// --- criterion 3: Bernoulli values ---
void criterion3() {
  bool ok = bernoulli(0) == Rat(1) && bernoulli(1) == rat(-1, 2) &&
            bernoulli(2) == rat(1, 6) && bernoulli(3) == Rat(0) &&
            bernoulli(4) == rat(-1, 30) && bernoulli(5) == Rat(0) &&
            bernoulli(6) == rat(1, 42) &&
            bernoulli(6) / Rat(factorial(6)) == rat(1, 30240);
  report(3, ok, "Bernoulli numbers 1, -1/2, 1/6, 0, -1/30, 0, 1/42 exact");
}

// --- criterion 4: F0 against the known order-4 expansion ---
void criterion4() {
  int d = 4;
  KvPair p = f0_g0(d);
  auto x = LieSeries::generator(d, 0);
  auto y = LieSeries::generator(d, 1);
  auto br = [&](const LieSeries& a, const LieSeries& b) { return lie_bracket(a, b, d); };

  bool low = p.f.degree_part(1) == y * rat(1, 4) && p.f.coeff(W("XY")) == rat(1, 24) &&
             p.f.coeff(W("XXY")) == rat(-1, 48) &&
             p.f.coeff(W("XYY")) == Rat(-1) * rat(-1, 48);  // -1/48 yxY = +1/48 [[X,Y],Y]

  // degree 4 in the ad-monomial spanning set x^3 Y, y x^2 Y, y^2 x Y
  LieSeries m1 = br(x, br(x, br(x, y)));
  LieSeries m2 = br(y, br(x, br(x, y)));
  LieSeries m3 = br(y, br(y, br(x, y)));
  Rat a = p.f.coeff(W("XXXY"));
  Rat b = -p.f.coeff(W("XXYY"));
  Rat c = p.f.coeff(W("XYYY"));
  LieSeries reconstructed = m1 * a + m2 * b + m3 * c;
  bool spans = reconstructed.degree_part(4) == p.f.degree_part(4);
  bool values = a == rat(-1, 180) && b == rat(-1, 480) && c == rat(1, 360);
  std::printf("  computed degree-4 expansion: %s*x^3Y + %s*yx^2Y + %s*y^2xY%s\n",
              rat_str(a).c_str(), rat_str(b).c_str(), rat_str(c).c_str(),
              spans ? "" : "  [FLAG: monomial outside the listed set needed]");
  report(4, low && values && spans,
         "F0 matches the order-4 expansion (1/4 Y, 1/24, -1/48, -1/48, -1/180, -1/480, "
         "+1/360) exactly");
}

// --- criterion 5: Lie-series equation residual ---
void criterion5() {
  KvPair p = f0_g0(6);
  Eq7Residual r = check_eq7(p, 6);
  report(5, r.zero_through(6), "(F0,G0) residual of the Lie-series equation is 0 through degree 6");
}

// --- criterion 6: trace identity residual, conjectural degrees reported ---
void criterion6() {
  KvPair p = f0_g0(6);
  Eq8Residual r = check_eq8(p, 6);
  bool ok = r.zero_through(4);
  for (int deg = 5; deg <= 6; ++deg) {
    CyclicSeries part = r.residual.degree_part(deg);
    std::printf("  trace-identity residual degree %d (conjectural regime): %s\n", deg,
                part.is_zero() ? "0" : cyclic_str(part).c_str());
  }
  report(6, ok, "trace-identity residual of (F0,G0) is 0 through degree 4 "
                "(degrees 5-6 reported above)");
}

// --- criterion 7: numeric ODE suite ---
void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  int d = 12;
  KvPair p = f0_g0(d);
  UniversalData u{d, bch_cached(d).truncated(d), p.f, p.g};
  bool ok = true;
  double worst10 = 0, worst11 = 0, worst19 = 0;
  for (const auto& name : {"heisenberg", "aff1", "sl2", "so3"}) {
    const LieAlgebra& alg = bundled_algebra(name);
    SampleSet ss = draw_samples(alg, 20, kSeed, 0.045);
    NumericReport r10 = check_eq10(alg, u, ss, 1e-4, 1e-6);
    NumericReport r11 = check_eq11(alg, ss, 1e-4, 1e-6);
    NumericReport r19 = check_eq19(alg, u, ss, 1e-4, 1e-5);
    ok = ok && r10.pass && r11.pass && r19.pass;
    worst10 = std::max(worst10, r10.max_rel);
    worst11 = std::max(worst11, r11.max_rel);
    worst19 = std::max(worst19, r19.max_rel);
  }
  double elapsed = seconds_since(t0);
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "dilation/jacobian/density ODE checks on 4 algebras: max rel errors "
                "%.2e (eq10) %.2e (eq11) %.2e (eq19), %.1f s",
                worst10, worst11, worst19, elapsed);
  report(7, ok && elapsed < 300.0, buf);
}

// --- criterion 8: the two expressions of j ---
void criterion8() {
  bool ok = true;
  for (const auto& name : bundled_algebra_names()) {
    const LieAlgebra& alg = bundled_algebra(name);
    NumericReport r = check_jq(alg, draw_samples(alg, 20, kSeed, 0.045), 1e-10);
    ok = ok && r.pass && r.max_abs <= 1e-10;
  }
  const LieAlgebra& h3 = bundled_algebra("heisenberg");
  for (const auto& [x, y] : draw_samples(h3, 20, kSeed, 0.045).pts)
    ok = ok && std::fabs(j_value(h3, x) - 1.0) <= 1e-12;
  const LieAlgebra& sl2 = bundled_algebra("sl2");
  for (double s : {0.01, 0.05, 0.1, 0.2, 0.3}) {
    VectorXd xh = VectorXd::Zero(3);
    xh[0] = s;
    double closed = std::pow(std::sinh(s) / s, 2.0);
    ok = ok && std::fabs(j_value(sl2, xh) - closed) <= 1e-10;
  }
  report(8, ok, "j = exp(-tr(adX)/2) q to 1e-10; Heisenberg j = 1 to 1e-12; "
                "sl2 closed form (sinh s/s)^2 to 1e-10");
}

// --- criterion 9: Duflo suite ---
void criterion9() {
  bool ok = true;
  std::mt19937_64 eng(kSeed);
  auto rnd_sym = [&](const LieAlgebra& alg) {
    SymElement p(alg.dim);
    for (int t = 0; t < 3; ++t) {
      Mono m(alg.dim, 0);
      int deg = 1 + static_cast<int>(eng() % 3);
      for (int i = 0; i < deg; ++i) m[eng() % alg.dim] += 1;
      p.add_term(m, rat(static_cast<long>(eng() % 9) - 4, 1 + static_cast<long>(eng() % 3)));
    }
    return p;
  };
  for (const auto& name : {"heisenberg", "sl2"}) {
    const LieAlgebra& alg = bundled_algebra(name);
    for (int trial = 0; trial < 5; ++trial) {
      SymElement a = rnd_sym(alg), b = rnd_sym(alg), c = rnd_sym(alg);
      SymElement lhs = gutt_star(gutt_star(a, b, alg), c, alg);
      SymElement rhs = gutt_star(a, gutt_star(b, c, alg), alg);
      ok = ok && (lhs - rhs).is_zero_elt();
    }
  }
  const LieAlgebra& sl2 = bundled_algebra("sl2");
  SymElement cas(3);
  cas.add_term(Mono{2, 0, 0}, Rat(1));
  cas.add_term(Mono{0, 1, 1}, Rat(4));
  ok = ok && check_duflo_multiplicative(cas, cas, sl2).multiplicative;
  ok = ok && check_duflo_multiplicative(cas, sym_mul(cas, cas), sl2).multiplicative;
  // control: plain symmetrization is not multiplicative on sl2
  UeaElement control = symmetrize(sym_mul(cas, cas), sl2) -
                       uea_mul(symmetrize(cas, sl2), symmetrize(cas, sl2), sl2);
  ok = ok && !control.is_zero_elt();
  report(9, ok, "Gutt star associative (exact); Duflo map multiplicative on sl2 Casimir "
                "powers; plain symmetrization control fails as expected");
}

// --- criterion 10: universal-to-concrete soundness bridge ---
void criterion10() {
  int d = 6;
  KvPair p = f0_g0(d);
  Eq8Residual res = check_eq8(p, d);
  int dstar = res.zero_prefix_degree(d);
  KvPair pt{p.f.truncated(dstar), p.g.truncated(dstar)};
  UniversalData u{dstar, bch_cached(d).truncated(dstar), pt.f, pt.g};
  CyclicSeries div = divergence(pt, dstar);
  CyclicSeries trhs = trace_rhs(dstar);
  bool ok = true;
  double worst = 0;
  for (const auto& name : bundled_algebra_names()) {
    const LieAlgebra& alg = bundled_algebra(name);
    NumericReport r =
        check_eq8_bridge(alg, u, div, trhs, draw_samples(alg, 20, kSeed, 0.045), 1e-4, 1e-6);
    ok = ok && r.pass;
    worst = std::max(worst, r.max_abs);
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "universally-zero trace residual (degrees <= %d) evaluates numerically to "
                "<= 1e-6 on all bundled algebras (worst %.2e)",
                dstar, worst);
  report(10, ok, buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s: %d/10 criteria passed\n", failures == 0 ? "SUCCESS" : "FAILURE",
              10 - failures);
  return failures;
}
