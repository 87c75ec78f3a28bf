#include "liekv/lie_series.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace liekv {

namespace {

std::uint64_t pair_key(const Word& a, const Word& b) {
  assert(a.len <= 24 && b.len <= 24);
  std::uint64_t ka = a.bits | (static_cast<std::uint64_t>(a.len) << 24);
  std::uint64_t kb = b.bits | (static_cast<std::uint64_t>(b.len) << 24);
  return (ka << 32) | kb;
}

std::unordered_map<std::uint64_t, LieSeries>& bracket_memo() {
  static std::unordered_map<std::uint64_t, LieSeries> memo;
  return memo;
}

std::recursive_mutex& bracket_mutex() {
  static std::recursive_mutex m;
  return m;
}

thread_local int rewriting_depth = 0;

LieSeries compute_basis_bracket(const Word& a, const Word& b) {
  // a, b Lyndon with a < b. Standard pair: then ab is Lyndon and
  // its standard factorization is exactly (a, b).
  if (a.len == 1 || !lex_less(std_factorization(a).second, b)) {
    LieSeries out(a.len + b.len);
    out.add_term(a.concat(b), Rat(1));
    return out;
  }
  // a = a1 a2 with a2 < b: [b(a),b(b)] = [b(a1),[b(a2),b(b)]] - [b(a2),[b(a1),b(b)]]
  auto [a1, a2] = std_factorization(a);
  LieSeries out(a.len + b.len);
  accumulate_word_bracket(a1, basis_bracket_pos(a2, b), Rat(1), out.max_degree, out);
  accumulate_word_bracket(a2, basis_bracket_pos(a1, b), Rat(-1), out.max_degree, out);
  return out;
}

}  // namespace

const LieSeries& basis_bracket_pos(const Word& a, const Word& b) {
  assert(lex_less(a, b));
  std::lock_guard<std::recursive_mutex> lock(bracket_mutex());
  auto& memo = bracket_memo();
  std::uint64_t key = pair_key(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  if (++rewriting_depth > 100000) {
    --rewriting_depth;
    throw std::logic_error("Lyndon rewriting recursion limit exceeded");
  }
  LieSeries result = compute_basis_bracket(a, b);
  --rewriting_depth;
  return memo.emplace(key, std::move(result)).first->second;
}

void accumulate_word_bracket(const Word& u, const LieSeries& s, const Rat& scale,
                             int maxdeg, LieSeries& out) {
  for (const auto& [kw, c] : s.terms) {
    Word w = Word::from_key(kw);
    if (w == u || static_cast<int>(u.len + w.len) > maxdeg) continue;
    bool flip = lex_less(w, u);
    const LieSeries& bb = flip ? basis_bracket_pos(w, u) : basis_bracket_pos(u, w);
    Rat k = scale * c;
    if (flip) k = -k;
    for (const auto& [kr, q] : bb.terms) out.add_term(Word::from_key(kr), k * q);
  }
}

LieSeries left_normed_bracket(const Word& w) {
  assert(w.len >= 1);
  LieSeries s = LieSeries::basis_element(w.len, Word::letter(w.at(w.len - 1)));
  for (std::uint32_t i = w.len - 1; i-- > 0;) {
    LieSeries next(w.len);
    accumulate_word_bracket(Word::letter(w.at(i)), s, Rat(1), w.len, next);
    s = std::move(next);
    if (s.is_zero_series()) break;
  }
  return s;
}

// --- commutator expansions ---------------------------------------------------

namespace {

using TermMap = std::unordered_map<std::uint64_t, Rat>;

void map_add(TermMap& m, std::uint64_t key, const Rat& c) {
  auto [it, fresh] = m.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) m.erase(it);
  }
}

TermMap expand_value(const Word& w);

TermMap expand_fresh(const Word& w) {
  if (w.len == 1) return {{w.key(), Rat(1)}};
  auto [u, v] = std_factorization(w);
  TermMap a = expand_value(u), b = expand_value(v);
  TermMap out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      Word wa = Word::from_key(ka), wb = Word::from_key(kb);
      Rat c = ca * cb;
      map_add(out, wa.concat(wb).key(), c);
      map_add(out, wb.concat(wa).key(), -c);
    }
  return out;
}

// Expansions up to this length are memoized; longer ones are recomputed to
// keep the cache from holding exponentially many terms.
constexpr std::uint32_t kExpandMemoMaxLen = 10;

TermMap expand_value(const Word& w) {
  if (w.len > kExpandMemoMaxLen) return expand_fresh(w);
  static std::unordered_map<std::uint64_t, TermMap> memo;
  static std::recursive_mutex mtx;
  std::lock_guard<std::recursive_mutex> lock(mtx);
  auto it = memo.find(w.key());
  if (it != memo.end()) return it->second;
  TermMap result = expand_fresh(w);
  return memo.emplace(w.key(), std::move(result)).first->second;
}

}  // namespace

AssocSeries lyndon_expansion(const Word& w, Alphabet target, int maxdeg) {
  AssocSeries out(target, maxdeg);
  if (static_cast<int>(w.len) > maxdeg) return out;
  for (const auto& [k, c] : expand_value(w)) out.terms.emplace(k, c);
  return out;
}

static AssocSeries lie_embed(const LieSeries& u, Alphabet target) {
  AssocSeries out(target, u.max_degree);
  for (const auto& [k, c] : u.terms)
    for (const auto& [kw, q] : expand_value(Word::from_key(k)))
      out.add_term(Word::from_key(kw), c * q);
  return out;
}

AssocSeries lie_to_assoc(const LieSeries& u) { return lie_embed(u, Alphabet::generators); }
AssocSeries lie_to_ad(const LieSeries& u) { return lie_embed(u, Alphabet::ad_letters); }

LieSeries dynkin_project(const AssocSeries& a) {
  if (!is_zero(a.constant_term()))
    throw std::invalid_argument("dynkin_project: nonzero constant term");
  LieSeries out(a.max_degree);
  for (const auto& [k, c] : a.terms) {
    Word w = Word::from_key(k);
    const LieSeries lnb = left_normed_bracket(w);
    Rat scale = c / Rat(static_cast<long>(w.len));
    for (const auto& [kr, q] : lnb.terms) out.add_term(Word::from_key(kr), scale * q);
  }
  return out;
}

LieSeries assoc_to_lie(const AssocSeries& a) {
  if (!is_zero(a.constant_term()))
    throw std::invalid_argument("assoc_to_lie: nonzero constant term");
  LieSeries out(a.max_degree);
  auto lex_key_less = [](std::uint64_t x, std::uint64_t y) {
    return lex_less(Word::from_key(x), Word::from_key(y));
  };
  for (int n = 1; n <= a.max_degree; ++n) {
    std::map<std::uint64_t, Rat, decltype(lex_key_less)> level(lex_key_less);
    for (const auto& [k, c] : a.terms)
      if (static_cast<int>(Word::from_key(k).len) == n) level.emplace(k, c);
    while (!level.empty()) {
      Word w = Word::from_key(level.begin()->first);
      Rat c = level.begin()->second;
      if (!is_lyndon(w))
        throw std::invalid_argument("assoc_to_lie: input is not a Lie element");
      out.add_term(w, c);
      for (const auto& [kw, q] : expand_value(w)) {
        auto [it, fresh] = level.try_emplace(kw, Rat());
        it->second -= c * q;
        if (is_zero(it->second)) level.erase(it);
      }
    }
  }
  return out;
}

LieSeries substitute(const LieSeries& u, const LieSeries& img_x, const LieSeries& img_y,
                     int maxdeg) {
  std::unordered_map<std::uint64_t, LieSeries> cache;
  auto eval = [&](auto&& self, const Word& w) -> const LieSeries& {
    auto it = cache.find(w.key());
    if (it != cache.end()) return it->second;
    LieSeries val;
    if (w.len == 1) {
      val = (w.at(0) == 0 ? img_x : img_y).truncated(maxdeg);
    } else {
      auto [p, q] = std_factorization(w);
      val = lie_bracket(self(self, p), self(self, q), maxdeg);
    }
    return cache.emplace(w.key(), std::move(val)).first->second;
  };
  LieSeries out(maxdeg);
  for (const auto& [k, c] : u.terms) {
    const LieSeries& img = eval(eval, Word::from_key(k));
    for (const auto& [kw, q] : img.terms) out.add_term(Word::from_key(kw), c * q);
  }
  return out;
}

LieSeries y_degree_at_most(const LieSeries& u, int max_y) {
  LieSeries out(u.max_degree);
  for (const auto& [k, c] : u.terms)
    if (y_degree(Word::from_key(k)) <= max_y) out.terms.emplace(k, c);
  return out;
}

std::string lie_str(const LieSeries& u) {
  if (u.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : u.sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "·" + bracket_str(w, Alphabet::generators);
  }
  return s;
}

TLieSeries t_scale_by_degree(const LieSeries& u, int offset) {
  TLieSeries out(u.max_degree);
  for (const auto& [k, c] : u.terms) {
    int n = static_cast<int>(Word::from_key(k).len) + offset;
    assert(n >= 0);
    out.terms.emplace(k, TPoly::monomial(c, n));
  }
  return out;
}

LieSeries t_integrate01(const TLieSeries& u) {
  LieSeries out(u.max_degree);
  for (const auto& [k, p] : u.terms) out.add_term(Word::from_key(k), tpoly_integrate01(p));
  return out;
}

LieSeries t_eval(const TLieSeries& u, const Rat& t) {
  LieSeries out(u.max_degree);
  for (const auto& [k, p] : u.terms) out.add_term(Word::from_key(k), tpoly_eval(p, t));
  return out;
}

}  // namespace liekv
