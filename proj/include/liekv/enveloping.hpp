#ifndef LIEKV_ENVELOPING_HPP
#define LIEKV_ENVELOPING_HPP

#include <map>
#include <string>
#include <vector>

#include "liekv/lie_algebra.hpp"

namespace liekv {

// Exponent vector of a monomial in the basis e_1..e_d (size = dim).
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int a : m) d += a;
  return d;
}

// Element of the symmetric algebra S[g]: commutative polynomial in the e_i.
struct SymElement {
  int dim = 0;
  std::map<Mono, Rat> terms;

  SymElement() = default;
  explicit SymElement(int d) : dim(d) {}
  static SymElement monomial(int dim, const Mono& m, const Rat& c = Rat(1));
  static SymElement variable(int dim, int i);

  void add_term(const Mono& m, const Rat& c);
  Rat coeff(const Mono& m) const;
  bool is_zero_elt() const { return terms.empty(); }
  int degree() const;  // max total degree, -1 when zero
};

SymElement operator+(const SymElement& a, const SymElement& b);
SymElement operator-(const SymElement& a, const SymElement& b);
SymElement operator*(const SymElement& a, const Rat& s);
SymElement sym_mul(const SymElement& a, const SymElement& b);

// Element of U(g) on the PBW basis: sorted monomials e_1^{a_1}...e_d^{a_d}.
struct UeaElement {
  int dim = 0;
  std::map<Mono, Rat> terms;

  UeaElement() = default;
  explicit UeaElement(int d) : dim(d) {}

  void add_term(const Mono& m, const Rat& c);
  Rat coeff(const Mono& m) const;
  bool is_zero_elt() const { return terms.empty(); }
  int degree() const;

  bool operator==(const UeaElement& o) const { return terms == o.terms; }
};

UeaElement operator+(const UeaElement& a, const UeaElement& b);
UeaElement operator-(const UeaElement& a, const UeaElement& b);
UeaElement operator*(const UeaElement& a, const Rat& s);

// Repeated rewriting e_j e_i -> e_i e_j + [e_j, e_i] (j > i) until sorted.
UeaElement pbw_normal_form(const std::vector<int>& word, const LieAlgebra& alg);
UeaElement uea_mul(const UeaElement& a, const UeaElement& b, const LieAlgebra& alg);

// Symmetrization beta: averages all orderings of each monomial, then PBW-
// normalizes; beta(X^n) = X^n. unsymmetrize is its two-sided inverse,
// computed by degree-descending elimination.
UeaElement symmetrize(const SymElement& p, const LieAlgebra& alg);
SymElement unsymmetrize(const UeaElement& u, const LieAlgebra& alg);

// Gutt star product w * v = beta^{-1}(beta(w) beta(v)).
SymElement gutt_star(const SymElement& w, const SymElement& v, const LieAlgebra& alg);

// The derivation ad(e_i) on S[g]: e_j -> [e_i, e_j], extended by Leibniz.
SymElement ad_derivation(int i, const SymElement& p, const LieAlgebra& alg);
bool is_invariant(const SymElement& p, const LieAlgebra& alg);

// j^{1/2} expanded as a polynomial function on g through total degree maxdeg,
// from ln j = -tr(adX)/2 + sum_{n>=1} b_{2n} tr((adX)^{2n}) / ((2n)! 2n).
// The variables of the returned element are the coordinates of X in the
// given basis, to be read as a constant-coefficient differential operator.
SymElement jhalf_polynomial(const LieAlgebra& alg, int maxdeg);

// Duflo map gamma(P) = beta(j^{1/2}(d) P); exact, only finitely many terms
// of j^{1/2} act on a polynomial.
UeaElement duflo_map(const SymElement& p, const LieAlgebra& alg);

struct DufloCheck {
  bool multiplicative = false;
  UeaElement residual;  // gamma(PQ) - gamma(P)gamma(Q), zero iff multiplicative
};

// Throws std::invalid_argument unless P and Q are invariant.
DufloCheck check_duflo_multiplicative(const SymElement& p, const SymElement& q,
                                      const LieAlgebra& alg);

std::string sym_str(const SymElement& p, const LieAlgebra& alg);
std::string uea_str(const UeaElement& u, const LieAlgebra& alg);

}  // namespace liekv

#endif
