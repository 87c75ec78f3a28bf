#ifndef LIEKV_LIE_SERIES_HPP
#define LIEKV_LIE_SERIES_HPP

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liekv/assoc_series.hpp"
#include "liekv/rational.hpp"
#include "liekv/scalar_series.hpp"
#include "liekv/word.hpp"

namespace liekv {

// Element of the completed free Lie algebra on {X, Y} in the Lyndon basis:
// the key w stands for the standard bracketing b(w) of the Lyndon word w.
// The coefficient ring R is Rat for ordinary series and TPoly for series
// whose coefficients are polynomials in the dilation parameter t.
template <class R>
struct LieSeriesT {
  int max_degree = 0;
  std::unordered_map<std::uint64_t, R> terms;

  LieSeriesT() = default;
  explicit LieSeriesT(int maxdeg) : max_degree(maxdeg) {}

  static LieSeriesT zero(int maxdeg) { return LieSeriesT(maxdeg); }
  static LieSeriesT generator(int maxdeg, int c) {
    LieSeriesT s(maxdeg);
    s.add_term(Word::letter(c), R(Rat(1)));
    return s;
  }
  static LieSeriesT basis_element(int maxdeg, const Word& w) {
    LieSeriesT s(maxdeg);
    s.add_term(w, R(Rat(1)));
    return s;
  }

  void add_term(const Word& w, const R& c) {
    if (is_zero(c) || static_cast<int>(w.len) > max_degree) return;
    auto [it, fresh] = terms.try_emplace(w.key(), c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }

  R coeff(const Word& w) const {
    auto it = terms.find(w.key());
    return it == terms.end() ? R() : it->second;
  }

  bool is_zero_series() const { return terms.empty(); }

  LieSeriesT degree_part(int n) const {
    LieSeriesT out(max_degree);
    for (const auto& [k, c] : terms)
      if (static_cast<int>(Word::from_key(k).len) == n) out.terms.emplace(k, c);
    return out;
  }

  LieSeriesT truncated(int maxdeg) const {
    LieSeriesT out(maxdeg);
    for (const auto& [k, c] : terms)
      if (static_cast<int>(Word::from_key(k).len) <= maxdeg) out.terms.emplace(k, c);
    return out;
  }

  std::vector<std::pair<Word, R>> sorted_terms() const {
    std::vector<std::pair<Word, R>> out;
    out.reserve(terms.size());
    for (const auto& [k, c] : terms) out.emplace_back(Word::from_key(k), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return deg_lex_less(a.first, b.first); });
    return out;
  }

  bool operator==(const LieSeriesT& o) const { return terms == o.terms; }
};

using LieSeries = LieSeriesT<Rat>;
using TLieSeries = LieSeriesT<TPoly>;

template <class R>
LieSeriesT<R> operator+(const LieSeriesT<R>& a, const LieSeriesT<R>& b) {
  LieSeriesT<R> out(std::min(a.max_degree, b.max_degree));
  for (const auto& [k, c] : a.terms) out.add_term(Word::from_key(k), c);
  for (const auto& [k, c] : b.terms) out.add_term(Word::from_key(k), c);
  return out;
}

template <class R>
LieSeriesT<R> operator*(const LieSeriesT<R>& a, const Rat& s) {
  LieSeriesT<R> out(a.max_degree);
  if (is_zero(s)) return out;
  for (const auto& [k, c] : a.terms) out.terms.emplace(k, c * s);
  return out;
}

template <class R>
LieSeriesT<R> operator-(const LieSeriesT<R>& a) {
  return a * Rat(-1);
}

template <class R>
LieSeriesT<R> operator-(const LieSeriesT<R>& a, const LieSeriesT<R>& b) {
  return a + (b * Rat(-1));
}

template <class R>
bool equal_through(const LieSeriesT<R>& a, const LieSeriesT<R>& b, int maxdeg) {
  for (const auto& [k, c] : a.terms)
    if (static_cast<int>(Word::from_key(k).len) <= maxdeg && !(b.coeff(Word::from_key(k)) == c))
      return false;
  for (const auto& [k, c] : b.terms)
    if (static_cast<int>(Word::from_key(k).len) <= maxdeg && !(a.coeff(Word::from_key(k)) == c))
      return false;
  return true;
}

// --- Lyndon rewriting engine -------------------------------------------------
//
// basis_bracket_pos(a, b) expands [b(a), b(b)] on the Lyndon basis for Lyndon
// words a < b. If (a, b) is a standard pair the result is the single basis
// element b(ab); otherwise a = a1 a2 is the standard factorization and Jacobi
// gives [b(a),b(b)] = [b(a1),[b(a2),b(b)]] - [b(a2),[b(a1),b(b)]].
// Results are memoized; returned references stay valid for the process.
const LieSeries& basis_bracket_pos(const Word& a, const Word& b);

// out += scale * [b(u), S] for a Lyndon word u and a homogeneous-or-not S.
void accumulate_word_bracket(const Word& u, const LieSeries& s, const Rat& scale,
                             int maxdeg, LieSeries& out);

template <class R>
LieSeriesT<R> lie_bracket(const LieSeriesT<R>& u, const LieSeriesT<R>& v, int maxdeg) {
  LieSeriesT<R> out(maxdeg);
  for (const auto& [ku, cu] : u.terms) {
    Word a = Word::from_key(ku);
    for (const auto& [kv, cv] : v.terms) {
      if (ku == kv) continue;
      Word b = Word::from_key(kv);
      if (static_cast<int>(a.len + b.len) > maxdeg) continue;
      R c = cu * cv;
      if (is_zero(c)) continue;
      bool flip = lex_less(b, a);
      const LieSeries& bb = flip ? basis_bracket_pos(b, a) : basis_bracket_pos(a, b);
      if (flip) c = c * Rat(-1);
      for (const auto& [kw, q] : bb.terms) out.add_term(Word::from_key(kw), c * q);
    }
  }
  return out;
}

template <class R>
LieSeriesT<R> lie_bracket(const LieSeriesT<R>& u, const LieSeriesT<R>& v) {
  return lie_bracket(u, v, std::min(u.max_degree, v.max_degree));
}

// [w_0, [w_1, ... [w_{n-2}, w_{n-1}] ...]] of an arbitrary word, on the basis.
LieSeries left_normed_bracket(const Word& w);

// sum_k phi_k ad(A)^k (v), exact through maxdeg. A has no degree-0 part by
// construction of LieSeriesT, so the sum always truncates.
template <class R>
LieSeriesT<R> apply_ad_series(const ScalarSeries& phi, const LieSeriesT<R>& a,
                              const LieSeriesT<R>& v, int maxdeg) {
  LieSeriesT<R> out(maxdeg);
  LieSeriesT<R> cur = v.truncated(maxdeg);
  for (int k = 0; k <= phi.order(); ++k) {
    if (k > 0) {
      cur = lie_bracket(a, cur, maxdeg);
      if (cur.is_zero_series()) break;
    }
    if (!is_zero(phi.c[k]))
      for (const auto& [kw, c] : cur.terms) out.add_term(Word::from_key(kw), c * phi.c[k]);
  }
  return out;
}

// --- embeddings and projections ---------------------------------------------

// Standard bracketing of a Lyndon word expanded as commutators.
AssocSeries lyndon_expansion(const Word& w, Alphabet target, int maxdeg);

// Brackets expanded as commutators; X -> X, Y -> Y.
AssocSeries lie_to_assoc(const LieSeries& u);
// The ad-letter image: X -> x, Y -> y, brackets to commutators of ad letters.
AssocSeries lie_to_ad(const LieSeries& u);

// Wordwise Dynkin map a_1...a_n -> (1/n)[a_1,[...,a_n]]; identity on Lie
// elements, expressed on the Lyndon basis. Input must have no constant term.
LieSeries dynkin_project(const AssocSeries& a);

// Lyndon coordinates of an associative series that is a Lie element, by
// triangular peeling (the least word of a homogeneous Lie element is Lyndon
// and carries its basis coefficient). Throws if the input is not Lie.
LieSeries assoc_to_lie(const AssocSeries& a);

// The unique Lie-morphism extension X -> img_x, Y -> img_y applied to u.
// Images must have no constant term (guaranteed by the representation).
LieSeries substitute(const LieSeries& u, const LieSeries& img_x, const LieSeries& img_y,
                     int maxdeg);

inline int y_degree(const Word& w) { return __builtin_popcountll(w.bits); }

// Terms whose Lyndon word contains at most max_y letters Y.
LieSeries y_degree_at_most(const LieSeries& u, int max_y);

std::string lie_str(const LieSeries& u);

// --- t-coefficient utilities -------------------------------------------------

inline TLieSeries lift_t(const LieSeries& u) {
  TLieSeries out(u.max_degree);
  for (const auto& [k, c] : u.terms) out.terms.emplace(k, TPoly(c));
  return out;
}

// Multiplies the degree-n homogeneous component by t^{n+offset}. offset = 0
// realizes u(tX, tY); offset = -1 realizes the dilation (1/t) u(tX, tY),
// which is a polynomial in t (well defined at t = 0) since u has no
// degree-0 component.
TLieSeries t_scale_by_degree(const LieSeries& u, int offset);

inline TLieSeries dilate(const LieSeries& u) { return t_scale_by_degree(u, -1); }

LieSeries t_integrate01(const TLieSeries& u);
LieSeries t_eval(const TLieSeries& u, const Rat& t);

}  // namespace liekv

#endif
