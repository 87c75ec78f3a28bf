#include "liekv/kv_equations.hpp"

#include <stdexcept>

namespace liekv {

Eq7Residual check_eq7(const KvPair& p, int maxdeg) {
  LieSeries x = LieSeries::generator(maxdeg, 0);
  LieSeries y = LieSeries::generator(maxdeg, 1);
  LieSeries z_yx = substitute(bch_cached(maxdeg), y, x, maxdeg);  // Z(Y,X)
  LieSeries res = x + y - z_yx -
                  apply_ad_series(series_one_minus_exp_neg(maxdeg), x,
                                  p.f.truncated(maxdeg), maxdeg) -
                  apply_ad_series(series_exp_minus_one(maxdeg), y,
                                  p.g.truncated(maxdeg), maxdeg);
  Eq7Residual out{std::move(res), {}};
  out.per_degree_max_numerator.assign(maxdeg, "0");
  for (const auto& [k, c] : out.residual.terms) {
    int d = static_cast<int>(Word::from_key(k).len);
    mpz_class num = abs(c.get_num());
    mpz_class cur(out.per_degree_max_numerator[d - 1]);
    if (num > cur) out.per_degree_max_numerator[d - 1] = num.get_str();
  }
  return out;
}

namespace {

// Operator word (over {x,y}) of the slotted bracketing of the Lyndon word w
// with the slot at letter position pos: the map s -> b(w)|_{letter(pos)=s},
// rewritten with the slot kept rightmost. For [A, B(s)] the operator is
// ad(A) composed after B, i.e. left concatenation by the ad expansion of A;
// a slot in the left factor is reduced by antisymmetry first.
AssocSeries slot_normal_form(const Word& w, std::uint32_t pos, int maxdeg) {
  if (w.len == 1) return AssocSeries::unit(Alphabet::ad_letters, maxdeg);
  auto [u, v] = std_factorization(w);
  if (pos >= u.len) {
    AssocSeries rest = slot_normal_form(v, pos - u.len, maxdeg);
    return assoc_mul(lyndon_expansion(u, Alphabet::ad_letters, maxdeg), rest, maxdeg);
  }
  AssocSeries rest = slot_normal_form(u, pos, maxdeg);
  return -assoc_mul(lyndon_expansion(v, Alphabet::ad_letters, maxdeg), rest, maxdeg);
}

// adL o d_L S for L the generator `letter` (0 for X, 1 for Y), as a word
// series over the ad letters: sum over occurrences of L in each monomial.
AssocSeries ad_compose_partial(const LieSeries& s, int letter, int maxdeg) {
  AssocSeries total(Alphabet::ad_letters, maxdeg);
  AssocSeries lead = AssocSeries::letter(Alphabet::ad_letters, maxdeg, letter);
  for (const auto& [k, c] : s.terms) {
    Word w = Word::from_key(k);
    if (static_cast<int>(w.len) > maxdeg) continue;
    for (std::uint32_t pos = 0; pos < w.len; ++pos) {
      if (w.at(pos) != letter) continue;
      AssocSeries n = slot_normal_form(w, pos, maxdeg);
      total = total + assoc_mul(lead, n, maxdeg) * c;
    }
  }
  return total;
}

}  // namespace

CyclicSeries divergence(const KvPair& p, int maxdeg) {
  AssocSeries total = ad_compose_partial(p.f.truncated(maxdeg), 0, maxdeg) +
                      ad_compose_partial(p.g.truncated(maxdeg), 1, maxdeg);
  return cyclic_reduce(total);
}

CyclicSeries trace_rhs(int maxdeg) {
  ScalarSeries b = series_bernoulli_gf(maxdeg);

  auto b_of = [&](const AssocSeries& a) {
    AssocSeries out = AssocSeries::unit(Alphabet::ad_letters, maxdeg) * b.c[0];
    AssocSeries cur = AssocSeries::unit(Alphabet::ad_letters, maxdeg);
    for (int n = 1; n <= maxdeg; ++n) {
      cur = assoc_mul(cur, a, maxdeg);
      if (cur.is_zero()) break;
      out = out + cur * b.c[n];
    }
    return out;
  };

  AssocSeries x = AssocSeries::letter(Alphabet::ad_letters, maxdeg, 0);
  AssocSeries y = AssocSeries::letter(Alphabet::ad_letters, maxdeg, 1);
  AssocSeries adz = lie_to_ad(bch_cached(maxdeg));

  AssocSeries total =
      b_of(x) + b_of(y) - b_of(adz) - AssocSeries::unit(Alphabet::ad_letters, maxdeg);
  if (!is_zero(total.constant_term()))
    throw std::logic_error("trace_rhs: constant terms failed to cancel");
  return cyclic_reduce(total * Rat(1, 2));
}

Eq8Residual check_eq8(const KvPair& p, int maxdeg) {
  return Eq8Residual{divergence(p, maxdeg) - trace_rhs(maxdeg)};
}

}  // namespace liekv
