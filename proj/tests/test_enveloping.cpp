#include "doctest.h"
#include "liekv/enveloping.hpp"
#include "test_helpers.hpp"

using namespace liekv;

namespace {

Mono mono(std::initializer_list<int> l) { return Mono(l); }

SymElement sym(const LieAlgebra& alg, std::initializer_list<std::pair<Mono, Rat>> terms) {
  SymElement p(alg.dim);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

// Casimir of sl2 in S[g], basis (h, e, f): h^2 + 4ef
SymElement sl2_casimir() {
  const LieAlgebra& alg = bundled_algebra("sl2");
  return sym(alg, {{mono({2, 0, 0}), Rat(1)}, {mono({0, 1, 1}), Rat(4)}});
}

SymElement random_sym(testing::Rng& rng, const LieAlgebra& alg, int maxdeg, int nterms) {
  SymElement p(alg.dim);
  for (int t = 0; t < nterms; ++t) {
    Mono m(alg.dim, 0);
    int deg = 1 + rng.below(maxdeg);
    for (int i = 0; i < deg; ++i) m[rng.below(alg.dim)] += 1;
    p.add_term(m, rng.small_rat());
  }
  return p;
}

}  // namespace

TEST_CASE("pbw normal form") {
  const LieAlgebra& h3 = bundled_algebra("heisenberg");  // basis (e, f, z)
  // already sorted
  UeaElement sorted = pbw_normal_form({0, 1, 2}, h3);
  CHECK(sorted.coeff(mono({1, 1, 1})) == Rat(1));
  CHECK(sorted.terms.size() == 1);
  // f e = e f - z
  UeaElement fe = pbw_normal_form({1, 0}, h3);
  CHECK(fe.coeff(mono({1, 1, 0})) == Rat(1));
  CHECK(fe.coeff(mono({0, 0, 1})) == Rat(-1));
  CHECK(fe.terms.size() == 2);
  // sl2: e h = h e - 2e
  const LieAlgebra& sl2 = bundled_algebra("sl2");
  UeaElement eh = pbw_normal_form({1, 0}, sl2);
  CHECK(eh.coeff(mono({1, 1, 0})) == Rat(1));
  CHECK(eh.coeff(mono({0, 1, 0})) == Rat(-2));
}

TEST_CASE("symmetrization") {
  const LieAlgebra& h3 = bundled_algebra("heisenberg");
  // beta(e^n) = e^n
  for (int n = 1; n <= 4; ++n) {
    SymElement p = sym(h3, {{mono({n, 0, 0}), Rat(1)}});
    UeaElement u = symmetrize(p, h3);
    CHECK(u.coeff(mono({n, 0, 0})) == Rat(1));
    CHECK(u.terms.size() == 1);
  }
  // beta(ef) = (ef + fe)/2 = ef - z/2 in PBW form
  UeaElement bef = symmetrize(sym(h3, {{mono({1, 1, 0}), Rat(1)}}), h3);
  CHECK(bef.coeff(mono({1, 1, 0})) == Rat(1));
  CHECK(bef.coeff(mono({0, 0, 1})) == rat(-1, 2));

  // unsymmetrize is a two-sided inverse on random cubics
  testing::Rng rng(606);
  for (const auto& name : {"heisenberg", "sl2"}) {
    const LieAlgebra& alg = bundled_algebra(name);
    for (int trial = 0; trial < 6; ++trial) {
      SymElement p = random_sym(rng, alg, 3, 4);
      SymElement back = unsymmetrize(symmetrize(p, alg), alg);
      CHECK((back - p).is_zero_elt());
    }
  }
}

TEST_CASE("symmetrization intertwines the adjoint derivations") {
  testing::Rng rng(7331);
  for (const auto& name : {"heisenberg", "sl2", "so3"}) {
    const LieAlgebra& alg = bundled_algebra(name);
    for (int trial = 0; trial < 4; ++trial) {
      SymElement p = random_sym(rng, alg, 3, 3);
      for (int i = 0; i < alg.dim; ++i) {
        UeaElement lhs = symmetrize(ad_derivation(i, p, alg), alg);
        UeaElement ei = pbw_normal_form({i}, alg);
        UeaElement bp = symmetrize(p, alg);
        UeaElement rhs = uea_mul(ei, bp, alg) - uea_mul(bp, ei, alg);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("gutt star product") {
  const LieAlgebra& h3 = bundled_algebra("heisenberg");
  SymElement e = SymElement::variable(3, 0);
  SymElement f = SymElement::variable(3, 1);
  SymElement one = sym(h3, {{mono({0, 0, 0}), Rat(1)}});

  // 1 * v = v ; X * X = X^2
  CHECK((gutt_star(one, f, h3) - f).is_zero_elt());
  SymElement ee = gutt_star(e, e, h3);
  CHECK(ee.coeff(mono({2, 0, 0})) == Rat(1));
  CHECK(ee.terms.size() == 1);

  // e * f = ef + z/2: the antisymmetric part of degree-1 star degree-1
  // is half the bracket
  SymElement ef = gutt_star(e, f, h3);
  CHECK(ef.coeff(mono({1, 1, 0})) == Rat(1));
  CHECK(ef.coeff(mono({0, 0, 1})) == rat(1, 2));
  SymElement anti = gutt_star(e, f, h3) - gutt_star(f, e, h3);
  CHECK(anti.coeff(mono({0, 0, 1})) == Rat(1));  // = [e,f] = z
  CHECK(anti.terms.size() == 1);
}

TEST_CASE("gutt star is associative (exact, random degree <= 3)") {
  testing::Rng rng(112358);
  for (const auto& name : {"heisenberg", "sl2"}) {
    const LieAlgebra& alg = bundled_algebra(name);
    for (int trial = 0; trial < 5; ++trial) {
      SymElement a = random_sym(rng, alg, 3, 3);
      SymElement b = random_sym(rng, alg, 3, 3);
      SymElement c = random_sym(rng, alg, 3, 3);
      SymElement lhs = gutt_star(gutt_star(a, b, alg), c, alg);
      SymElement rhs = gutt_star(a, gutt_star(b, c, alg), alg);
      CHECK((lhs - rhs).is_zero_elt());
    }
  }
}

TEST_CASE("invariance checker") {
  const LieAlgebra& sl2 = bundled_algebra("sl2");
  CHECK(is_invariant(sl2_casimir(), sl2));
  // a random non-invariant polynomial fails
  SymElement h2 = sym(sl2, {{mono({0, 2, 0}), Rat(1)}});  // e^2 is not invariant
  CHECK(!is_invariant(h2, sl2));

  const LieAlgebra& so3 = bundled_algebra("so3");
  SymElement c3 = sym(so3, {{mono({2, 0, 0}), Rat(1)},
                            {mono({0, 2, 0}), Rat(1)},
                            {mono({0, 0, 2}), Rat(1)}});
  CHECK(is_invariant(c3, so3));
}

TEST_CASE("duflo map") {
  // abelian: j = 1, gamma = beta = inclusion
  const LieAlgebra& ab = bundled_algebra("abelian2");
  SymElement p2(2);
  p2.add_term(mono({2, 1}), rat(2, 3));
  UeaElement g = duflo_map(p2, ab);
  CHECK(g.coeff(mono({2, 1})) == rat(2, 3));
  CHECK(g.terms.size() == 1);

  // degree <= 1 on a unimodular algebra: gamma = beta
  const LieAlgebra& sl2 = bundled_algebra("sl2");
  SymElement h1 = SymElement::variable(3, 0);
  CHECK(duflo_map(h1, sl2) == symmetrize(h1, sl2));

  // sl2 Casimir: gamma(C) = beta(C) + c0 with c0 the degree-2 contraction
  // of j^{1/2} against C; the pipeline gives c0 = 1 for C = h^2 + 4ef
  SymElement cas = sl2_casimir();
  UeaElement gc = duflo_map(cas, sl2);
  UeaElement bc = symmetrize(cas, sl2);
  UeaElement shift = gc - bc;
  CHECK(shift.coeff(mono({0, 0, 0})) == Rat(1));
  CHECK(shift.terms.size() == 1);

  // j^{1/2} of sl2 through degree 2 is 1 + (a^2 + bc)/6 in the coordinates
  // (a,b,c) dual to (h,e,f)
  SymElement jh = jhalf_polynomial(sl2, 2);
  CHECK(jh.coeff(mono({0, 0, 0})) == Rat(1));
  CHECK(jh.coeff(mono({2, 0, 0})) == rat(1, 6));
  CHECK(jh.coeff(mono({0, 1, 1})) == rat(1, 6));
}

TEST_CASE("duflo multiplicativity on invariants") {
  const LieAlgebra& sl2 = bundled_algebra("sl2");
  SymElement cas = sl2_casimir();

  DufloCheck c1 = check_duflo_multiplicative(cas, cas, sl2);
  CHECK(c1.multiplicative);
  DufloCheck c2 = check_duflo_multiplicative(cas, sym_mul(cas, cas), sl2);
  CHECK(c2.multiplicative);

  // control: beta alone is not an algebra morphism on sl2
  UeaElement beta_prod = symmetrize(sym_mul(cas, cas), sl2);
  UeaElement prod_beta = uea_mul(symmetrize(cas, sl2), symmetrize(cas, sl2), sl2);
  CHECK(!(beta_prod - prod_beta).is_zero_elt());

  // heisenberg: central powers are invariant and multiplicative
  const LieAlgebra& h3 = bundled_algebra("heisenberg");
  SymElement z2 = sym(h3, {{mono({0, 0, 2}), Rat(1)}});
  SymElement z3 = sym(h3, {{mono({0, 0, 3}), Rat(1)}});
  CHECK(check_duflo_multiplicative(z2, z3, h3).multiplicative);

  // so3 Casimir
  const LieAlgebra& so3 = bundled_algebra("so3");
  SymElement c3 = sym(so3, {{mono({2, 0, 0}), Rat(1)},
                            {mono({0, 2, 0}), Rat(1)},
                            {mono({0, 0, 2}), Rat(1)}});
  CHECK(check_duflo_multiplicative(c3, c3, so3).multiplicative);

  // non-invariant input is rejected
  SymElement e2 = sym(sl2, {{mono({0, 2, 0}), Rat(1)}});
  CHECK_THROWS_AS(check_duflo_multiplicative(e2, cas, sl2), std::invalid_argument);
}
