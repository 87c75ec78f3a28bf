#ifndef LIEKV_NUMERIC_CHECKS_HPP
#define LIEKV_NUMERIC_CHECKS_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "liekv/assoc_series.hpp"
#include "liekv/lie_algebra.hpp"
#include "liekv/lie_series.hpp"

namespace liekv {

// Result of one numeric check over a set of samples. rel_err divides by
// max(|lhs|, |rhs|, 1): the floor keeps the quotient meaningful when both
// sides vanish identically (abelian cases, nilpotent trace terms).
struct NumericReport {
  std::string check;
  std::string algebra;
  std::uint64_t seed = 0;
  int samples = 0;
  int max_degree = 0;
  double h = 0;
  double tol = 0;
  struct Row {
    int sample;
    double abs_err;
    double rel_err;
  };
  std::vector<Row> rows;
  double max_abs = 0;
  double max_rel = 0;
  bool pass = true;

  void finish();  // computes max_abs/max_rel/pass from rows against tol
};

struct SampleSet {
  std::uint64_t seed = 0;
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pts;
};

// Deterministic seeded samples with every coordinate in [-max_coord, max_coord].
SampleSet draw_samples(const LieAlgebra& alg, int n, std::uint64_t seed, double max_coord);

// The universal series a numeric check needs, all truncated at max_degree.
struct UniversalData {
  int max_degree = 0;
  LieSeries z, f, g;
};

Eigen::VectorXd bracket_num(const LieAlgebra& alg, const Eigen::VectorXd& a,
                            const Eigen::VectorXd& b);
// (ad X)_{kj} = sum_i x_i c_{ij}^k
Eigen::MatrixXd ad_matrix(const LieAlgebra& alg, const Eigen::VectorXd& x);

// Analytic matrix functions by truncated Taylor series with a rigorous tail
// bound below 1e-13 (no eigendecomposition; works for non-diagonalizable ad).
// They throw when the norm guard cannot be met.
Eigen::MatrixXd matrix_exp(const Eigen::MatrixXd& m);
// (1 - e^{-M})/M
Eigen::MatrixXd matrix_dexp(const Eigen::MatrixXd& m);
// sinh(M/2)/(M/2)
Eigen::MatrixXd matrix_sinhc_half(const Eigen::MatrixXd& m);
// B(M) = M/(e^M - 1); requires norm1(M) comfortably below 2*pi
Eigen::MatrixXd matrix_bernoulli(const Eigen::MatrixXd& m);

// j(X) = det((1-e^{-adX})/adX);  q(X) = det(sinh(adX/2)/(adX/2)).
// Both expressions of the Jacobian agree: j = exp(-tr(adX)/2) q.
double j_value(const LieAlgebra& alg, const Eigen::VectorXd& x);
double q_value(const LieAlgebra& alg, const Eigen::VectorXd& x);

// Sum of the evaluated Lyndon bracketings through the series' max_degree.
// Guard: |X|_inf + |Y|_inf <= 0.1. If tail_estimate is non-null it receives
// a geometric estimate of the truncated tail from the last two degrees.
Eigen::VectorXd evaluate_lie_series(const LieSeries& s, const LieAlgebra& alg,
                                    const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                    double* tail_estimate = nullptr);

// The dilated series (1/t) s(tX, tY) = sum_n t^{n-1} s_n(X, Y), evaluated
// per homogeneous degree (well defined at t = 0 and numerically t-stable).
Eigen::VectorXd evaluate_dilated(const LieSeries& s, const LieAlgebra& alg,
                                 const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                 double t);

// D(X,Y) = j^{1/2}(X) j^{1/2}(Y) / j^{1/2}(Z(X,Y)). Throws when j <= 0 on
// the sample domain.
double density_value(const LieAlgebra& alg, const Eigen::VectorXd& x,
                     const Eigen::VectorXd& y, const LieSeries& z);

// d/dt Z_t = [X,F_t].d_X Z_t + [Y,G_t].d_Y Z_t at t = 1/2, by central
// differences; requires that the pair satisfies the Lie-series equation.
NumericReport check_eq10(const LieAlgebra& alg, const UniversalData& u,
                         const SampleSet& samples, double h, double tol);
// j^{-1/2}(tX) d/dt j^{1/2}(tX) = (1/2) tr(adX/(e^{t adX}-1) - 1/t) at t = 1/2.
NumericReport check_eq11(const LieAlgebra& alg, const SampleSet& samples, double h,
                         double tol);
// d/dt D_t = Xi(D_t) + tr(adX o d_X F_t + adY o d_Y G_t) D_t at t = 1/2.
NumericReport check_eq19(const LieAlgebra& alg, const UniversalData& u,
                         const SampleSet& samples, double h, double tol);
// D(X,0) = 1, D(X,Y) = D(Y,X); additionally D = 1 on nilpotent algebras.
NumericReport check_density(const LieAlgebra& alg, const LieSeries& z,
                            const SampleSet& samples, double tol);
// |j - e^{-tr(adX)/2} q| per sample; additionally |j - 1| when nilpotent.
NumericReport check_jq(const LieAlgebra& alg, const SampleSet& samples, double tol);

// sum over necklaces of coeff * tr(product of ad-letter matrices)
double evaluate_cyclic(const CyclicSeries& s, const Eigen::MatrixXd& adx,
                       const Eigen::MatrixXd& ady);

// Universal-to-concrete soundness of the trace identity: the finite-difference
// Jacobian trace must match the evaluated universal divergence, the matrix
// Bernoulli expression must match the evaluated universal T, and (F, G, Z
// being truncated at a degree through which the universal residual vanishes)
// the two numeric sides must agree with each other.
NumericReport check_eq8_bridge(const LieAlgebra& alg, const UniversalData& u,
                               const CyclicSeries& divergence_series,
                               const CyclicSeries& trace_rhs_series,
                               const SampleSet& samples, double h, double tol);

}  // namespace liekv

#endif
