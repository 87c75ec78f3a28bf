#include "liekv/numeric_checks.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "liekv/parallel.hpp"

namespace liekv {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void NumericReport::finish() {
  max_abs = max_rel = 0;
  for (const auto& r : rows) {
    max_abs = std::max(max_abs, r.abs_err);
    max_rel = std::max(max_rel, r.rel_err);
  }
  pass = max_rel <= tol;
}

SampleSet draw_samples(const LieAlgebra& alg, int n, std::uint64_t seed, double max_coord) {
  SampleSet out;
  out.seed = seed;
  std::mt19937_64 eng(seed);
  auto u01 = [&] { return (eng() >> 11) * 0x1.0p-53; };  // deterministic across platforms
  out.pts.reserve(n);
  for (int s = 0; s < n; ++s) {
    VectorXd x(alg.dim), y(alg.dim);
    for (int i = 0; i < alg.dim; ++i) x[i] = max_coord * (2 * u01() - 1);
    for (int i = 0; i < alg.dim; ++i) y[i] = max_coord * (2 * u01() - 1);
    out.pts.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

VectorXd bracket_num(const LieAlgebra& alg, const VectorXd& a, const VectorXd& b) {
  VectorXd out = VectorXd::Zero(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (b[j] == 0) continue;
      for (int k = 0; k < alg.dim; ++k) {
        double s = alg.scd(i, j, k);
        if (s != 0) out[k] += a[i] * b[j] * s;
      }
    }
  }
  return out;
}

MatrixXd ad_matrix(const LieAlgebra& alg, const VectorXd& x) {
  MatrixXd m = MatrixXd::Zero(alg.dim, alg.dim);
  for (int k = 0; k < alg.dim; ++k)
    for (int j = 0; j < alg.dim; ++j)
      for (int i = 0; i < alg.dim; ++i) m(k, j) += x[i] * alg.scd(i, j, k);
  return m;
}

namespace {

std::vector<double> to_doubles(const ScalarSeries& s) {
  std::vector<double> out(s.c.size());
  for (std::size_t k = 0; k < s.c.size(); ++k) out[k] = to_double(s.c[k]);
  return out;
}

constexpr int kSeriesLen = 60;
constexpr double kTailTarget = 1e-13;

// Applies sum_k coeffs[k] M^k, stopping once tail_bound(k, norm1(M)) dips
// below 1e-13; throws if the guard cannot be met within the table.
MatrixXd apply_series(const std::vector<double>& coeffs,
                      double (*tail_bound)(int, double), const MatrixXd& m,
                      const char* what) {
  const int d = static_cast<int>(m.rows());
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  MatrixXd acc = MatrixXd::Zero(d, d);
  MatrixXd pw = MatrixXd::Identity(d, d);
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
    if (k > 0) pw = pw * m;
    if (coeffs[k] != 0) acc += coeffs[k] * pw;
    if (tail_bound(k, norm) < kTailTarget) return acc;
  }
  throw std::domain_error(std::string(what) + ": matrix norm guard violation");
}

// tail of sum_{j>k} (rho m)^j / j!  <=  (rho m)^{k+1}/(k+1)! e^{rho m}
template <int RhoNum, int RhoDen>
double factorial_tail(int k, double m) {
  double x = m * RhoNum / RhoDen;
  return std::pow(x, k + 1) / std::tgamma(static_cast<double>(k) + 2) * std::exp(x);
}

// |b_j|/j! = 2 zeta(j)/(2 pi)^j <= 3.3 (m/2pi)^j for even j >= 2
double bernoulli_tail(int k, double m) {
  if (k < 1) return std::numeric_limits<double>::infinity();
  double r = m / 6.283185307179586;
  if (r >= 0.85) return std::numeric_limits<double>::infinity();
  return 3.3 * std::pow(r, k + 1) / (1 - r);
}

}  // namespace

MatrixXd matrix_exp(const MatrixXd& m) {
  static const std::vector<double> coeffs = to_doubles(series_exp(kSeriesLen));
  return apply_series(coeffs, factorial_tail<1, 1>, m, "matrix_exp");
}

MatrixXd matrix_dexp(const MatrixXd& m) {
  static const std::vector<double> coeffs = to_doubles(series_one_minus_emz_over_z(kSeriesLen));
  return apply_series(coeffs, factorial_tail<1, 1>, m, "matrix_dexp");
}

MatrixXd matrix_sinhc_half(const MatrixXd& m) {
  static const std::vector<double> coeffs = to_doubles(series_sinh_half_over_half(kSeriesLen));
  return apply_series(coeffs, factorial_tail<1, 2>, m, "matrix_sinhc_half");
}

MatrixXd matrix_bernoulli(const MatrixXd& m) {
  static const std::vector<double> coeffs = to_doubles(series_bernoulli_gf(kSeriesLen));
  return apply_series(coeffs, bernoulli_tail, m, "matrix_bernoulli");
}

double j_value(const LieAlgebra& alg, const VectorXd& x) {
  return matrix_dexp(ad_matrix(alg, x)).determinant();
}

double q_value(const LieAlgebra& alg, const VectorXd& x) {
  return matrix_sinhc_half(ad_matrix(alg, x)).determinant();
}

// per-degree sums s_n(X, Y) of the evaluated Lyndon bracketings
static std::vector<VectorXd> evaluate_by_degree(const LieSeries& s, const LieAlgebra& alg,
                                                const VectorXd& x, const VectorXd& y) {
  if (x.lpNorm<Eigen::Infinity>() + y.lpNorm<Eigen::Infinity>() > 0.1 + 1e-12)
    throw std::domain_error("evaluate_lie_series: |X|+|Y| convergence guard violated");
  std::unordered_map<std::uint64_t, VectorXd> memo;
  auto eval = [&](auto&& self, const Word& w) -> const VectorXd& {
    auto it = memo.find(w.key());
    if (it != memo.end()) return it->second;
    VectorXd v;
    if (w.len == 1) {
      v = w.at(0) == 0 ? x : y;
    } else {
      auto [p, q] = std_factorization(w);
      v = bracket_num(alg, self(self, p), self(self, q));
    }
    return memo.emplace(w.key(), std::move(v)).first->second;
  };
  std::vector<VectorXd> by_degree(s.max_degree + 1, VectorXd::Zero(alg.dim));
  for (const auto& [k, c] : s.terms) {
    Word w = Word::from_key(k);
    by_degree[w.len] += to_double(c) * eval(eval, w);
  }
  return by_degree;
}

VectorXd evaluate_lie_series(const LieSeries& s, const LieAlgebra& alg, const VectorXd& x,
                             const VectorXd& y, double* tail_estimate) {
  std::vector<VectorXd> by_degree = evaluate_by_degree(s, alg, x, y);
  VectorXd total = VectorXd::Zero(alg.dim);
  for (const auto& v : by_degree) total += v;
  if (tail_estimate) {
    *tail_estimate = 0;
    if (s.max_degree >= 2) {
      double last = by_degree[s.max_degree].lpNorm<Eigen::Infinity>();
      double prev = by_degree[s.max_degree - 1].lpNorm<Eigen::Infinity>();
      if (last > 0) {
        double r = prev > 0 ? last / prev : 1.0;
        *tail_estimate = r < 1 ? last * r / (1 - r) : std::numeric_limits<double>::infinity();
      }
    }
  }
  return total;
}

VectorXd evaluate_dilated(const LieSeries& s, const LieAlgebra& alg, const VectorXd& x,
                          const VectorXd& y, double t) {
  std::vector<VectorXd> by_degree = evaluate_by_degree(s, alg, x, y);
  VectorXd total = VectorXd::Zero(alg.dim);
  double tpow = 1;
  for (int n = 1; n <= s.max_degree; ++n) {
    total += tpow * by_degree[n];
    tpow *= t;
  }
  return total;
}

double density_value(const LieAlgebra& alg, const VectorXd& x, const VectorXd& y,
                     const LieSeries& z) {
  double jx = j_value(alg, x);
  double jy = j_value(alg, y);
  double jz = j_value(alg, evaluate_lie_series(z, alg, x, y));
  if (jx <= 0 || jy <= 0 || jz <= 0)
    throw std::domain_error("density_value: nonpositive j on sample domain");
  return std::sqrt(jx) * std::sqrt(jy) / std::sqrt(jz);
}

namespace {

NumericReport make_report(const char* check, const LieAlgebra& alg, const SampleSet& samples,
                          double h, double tol, int maxdeg) {
  NumericReport r;
  r.check = check;
  r.algebra = alg.name;
  r.seed = samples.seed;
  r.samples = static_cast<int>(samples.pts.size());
  r.max_degree = maxdeg;
  r.h = h;
  r.tol = tol;
  r.rows.resize(samples.pts.size());
  return r;
}

double rel_scale(double a, double b) { return std::max({std::fabs(a), std::fabs(b), 1.0}); }

}  // namespace

NumericReport check_eq10(const LieAlgebra& alg, const UniversalData& u,
                         const SampleSet& samples, double h, double tol) {
  NumericReport rep = make_report("eq10", alg, samples, h, tol, u.max_degree);
  parallel_for(rep.samples, [&](int i) {
    const auto& [x, y] = samples.pts[i];
    const double t = 0.5;
    auto zt = [&](double tt, const VectorXd& xx, const VectorXd& yy) {
      return evaluate_dilated(u.z, alg, xx, yy, tt);
    };
    VectorXd lhs = (zt(t + h, x, y) - zt(t - h, x, y)) / (2 * h);
    VectorXd ft = evaluate_dilated(u.f, alg, x, y, t);
    VectorXd gt = evaluate_dilated(u.g, alg, x, y, t);
    VectorXd xf = bracket_num(alg, x, ft);
    VectorXd yg = bracket_num(alg, y, gt);
    VectorXd rhs = (zt(t, x + h * xf, y) - zt(t, x - h * xf, y)) / (2 * h) +
                   (zt(t, x, y + h * yg) - zt(t, x, y - h * yg)) / (2 * h);
    double abs = (lhs - rhs).lpNorm<Eigen::Infinity>();
    double scale =
        std::max({lhs.lpNorm<Eigen::Infinity>(), rhs.lpNorm<Eigen::Infinity>(), 1.0});
    rep.rows[i] = {i, abs, abs / scale};
  });
  rep.finish();
  return rep;
}

NumericReport check_eq11(const LieAlgebra& alg, const SampleSet& samples, double h,
                         double tol) {
  NumericReport rep = make_report("eq11", alg, samples, h, tol, 0);
  parallel_for(rep.samples, [&](int i) {
    const VectorXd& x = samples.pts[i].first;
    const double t = 0.5;
    auto log_jhalf = [&](double tt) { return 0.5 * std::log(j_value(alg, tt * x)); };
    double lhs = (log_jhalf(t + h) - log_jhalf(t - h)) / (2 * h);
    MatrixXd m = ad_matrix(alg, x);
    double rhs = 0.5 * (matrix_bernoulli(t * m).trace() - alg.dim) / t;
    double abs = std::fabs(lhs - rhs);
    rep.rows[i] = {i, abs, abs / rel_scale(lhs, rhs)};
  });
  rep.finish();
  return rep;
}

NumericReport check_eq19(const LieAlgebra& alg, const UniversalData& u,
                         const SampleSet& samples, double h, double tol) {
  NumericReport rep = make_report("eq19", alg, samples, h, tol, u.max_degree);
  parallel_for(rep.samples, [&](int i) {
    const auto& [x, y] = samples.pts[i];
    const double t = 0.5;
    auto dt = [&](const VectorXd& xx, const VectorXd& yy) {
      return density_value(alg, t * xx, t * yy, u.z);
    };
    auto dt_at = [&](double tt) { return density_value(alg, tt * x, tt * y, u.z); };
    auto ft_at = [&](const VectorXd& xx, const VectorXd& yy) {
      return evaluate_dilated(u.f, alg, xx, yy, t);
    };
    auto gt_at = [&](const VectorXd& xx, const VectorXd& yy) {
      return evaluate_dilated(u.g, alg, xx, yy, t);
    };

    double lhs = (dt_at(t + h) - dt_at(t - h)) / (2 * h);

    VectorXd xf = bracket_num(alg, x, ft_at(x, y));
    VectorXd yg = bracket_num(alg, y, gt_at(x, y));
    double xi = (dt(x + h * xf, y) - dt(x - h * xf, y)) / (2 * h) +
                (dt(x, y + h * yg) - dt(x, y - h * yg)) / (2 * h);

    MatrixXd jf(alg.dim, alg.dim), jg(alg.dim, alg.dim);
    for (int k = 0; k < alg.dim; ++k) {
      VectorXd e = VectorXd::Zero(alg.dim);
      e[k] = 1;
      jf.col(k) = (ft_at(x + h * e, y) - ft_at(x - h * e, y)) / (2 * h);
      jg.col(k) = (gt_at(x, y + h * e) - gt_at(x, y - h * e)) / (2 * h);
    }
    double trace_term =
        (ad_matrix(alg, x) * jf).trace() + (ad_matrix(alg, y) * jg).trace();
    double rhs = xi + trace_term * dt(x, y);

    double abs = std::fabs(lhs - rhs);
    rep.rows[i] = {i, abs, abs / rel_scale(lhs, rhs)};
  });
  rep.finish();
  return rep;
}

NumericReport check_density(const LieAlgebra& alg, const LieSeries& z,
                            const SampleSet& samples, double tol) {
  NumericReport rep = make_report("density", alg, samples, 0, tol, z.max_degree);
  parallel_for(rep.samples, [&](int i) {
    const auto& [x, y] = samples.pts[i];
    VectorXd zero = VectorXd::Zero(alg.dim);
    double err = std::fabs(density_value(alg, x, zero, z) - 1.0);
    err = std::max(err, std::fabs(density_value(alg, x, y, z) - density_value(alg, y, x, z)));
    if (alg.nilpotent) err = std::max(err, std::fabs(density_value(alg, x, y, z) - 1.0));
    rep.rows[i] = {i, err, err};
  });
  rep.finish();
  return rep;
}

NumericReport check_jq(const LieAlgebra& alg, const SampleSet& samples, double tol) {
  NumericReport rep = make_report("jq", alg, samples, 0, tol, 0);
  parallel_for(rep.samples, [&](int i) {
    const VectorXd& x = samples.pts[i].first;
    double j = j_value(alg, x);
    double q = q_value(alg, x);
    double tr = ad_matrix(alg, x).trace();
    double err = std::fabs(j - std::exp(-tr / 2) * q);
    if (alg.nilpotent) err = std::max(err, std::fabs(j - 1.0));
    rep.rows[i] = {i, err, err / std::max(std::fabs(j), 1.0)};
  });
  rep.finish();
  return rep;
}

double evaluate_cyclic(const CyclicSeries& s, const MatrixXd& adx, const MatrixXd& ady) {
  double total = 0;
  for (const auto& [k, c] : s.terms) {
    Word w = Word::from_key(k);
    MatrixXd m = w.at(0) == 0 ? adx : ady;
    for (std::uint32_t p = 1; p < w.len; ++p) m = m * (w.at(p) == 0 ? adx : ady);
    total += to_double(c) * m.trace();
  }
  return total;
}

NumericReport check_eq8_bridge(const LieAlgebra& alg, const UniversalData& u,
                               const CyclicSeries& divergence_series,
                               const CyclicSeries& trace_rhs_series,
                               const SampleSet& samples, double h, double tol) {
  NumericReport rep = make_report("eq8_bridge", alg, samples, h, tol, u.max_degree);
  CyclicSeries residual = divergence_series - trace_rhs_series;
  parallel_for(rep.samples, [&](int i) {
    const auto& [x, y] = samples.pts[i];
    MatrixXd jf(alg.dim, alg.dim), jg(alg.dim, alg.dim);
    for (int k = 0; k < alg.dim; ++k) {
      VectorXd e = VectorXd::Zero(alg.dim);
      e[k] = 1;
      jf.col(k) = (evaluate_lie_series(u.f, alg, x + h * e, y) -
                   evaluate_lie_series(u.f, alg, x - h * e, y)) /
                  (2 * h);
      jg.col(k) = (evaluate_lie_series(u.g, alg, x, y + h * e) -
                   evaluate_lie_series(u.g, alg, x, y - h * e)) /
                  (2 * h);
    }
    MatrixXd adx = ad_matrix(alg, x), ady = ad_matrix(alg, y);
    double lhs_num = (adx * jf).trace() + (ady * jg).trace();
    double lhs_univ = evaluate_cyclic(divergence_series, adx, ady);

    MatrixXd adz = ad_matrix(alg, evaluate_lie_series(u.z, alg, x, y));
    double rhs_num = 0.5 * ((matrix_bernoulli(adx) + matrix_bernoulli(ady) -
                             matrix_bernoulli(adz))
                                .trace() -
                            alg.dim);
    double rhs_univ = evaluate_cyclic(trace_rhs_series, adx, ady);

    // the two numeric sides must differ by exactly the evaluated residual
    double res_eval = evaluate_cyclic(residual, adx, ady);
    double abs = std::max({std::fabs(lhs_num - lhs_univ), std::fabs(rhs_num - rhs_univ),
                           std::fabs(lhs_num - rhs_num - res_eval)});
    rep.rows[i] = {i, abs, abs / rel_scale(lhs_num, rhs_num)};
  });
  rep.finish();
  return rep;
}

}  // namespace liekv
