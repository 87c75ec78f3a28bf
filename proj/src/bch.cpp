#include "liekv/bch.hpp"

#include <stdexcept>
#include <unordered_map>

namespace liekv {

namespace {

// Enumerates block sequences ((p_1,q_1),...,(p_m,q_m)), p_i + q_i > 0, of
// total degree <= maxdeg, accumulating the Dynkin weight of each word.
struct DynkinEnumerator {
  int maxdeg;
  std::unordered_map<std::uint64_t, Rat> weights;  // word -> accumulated weight
  Word word;
  Rat factor{1};  // 1 / prod p_i! q_i!

  explicit DynkinEnumerator(int d) : maxdeg(d) {}

  void run() { extend(0); }

  // invariant: `word` holds the first m complete blocks, `factor` their
  // factorial weight; m >= 1 means the sequence so far is admissible.
  void extend(int m) {
    if (m >= 1) {
      Rat w = factor / Rat(m);
      if (m % 2 == 0) w = -w;
      // the left-normed bracketing vanishes when the last two letters agree
      if (word.len == 1 || word.at(word.len - 1) != word.at(word.len - 2)) {
        auto [it, fresh] = weights.try_emplace(word.key(), w);
        if (!fresh) {
          it->second += w;
          if (is_zero(it->second)) weights.erase(it);
        }
      }
    }
    if (static_cast<int>(word.len) >= maxdeg) return;
    Word saved = word;
    Rat saved_factor = factor;
    int room = maxdeg - static_cast<int>(word.len);
    for (int p = 0; p <= room; ++p) {
      if (p > 0) {
        word = word.concat(Word::letter(0));
        factor /= p;
      }
      Word saved_q = word;
      Rat saved_q_factor = factor;
      for (int q = (p == 0 ? 1 : 0); p + q <= room; ++q) {
        if (q > 0) {
          word = word.concat(Word::letter(1));
          factor /= q;
        }
        extend(m + 1);
      }
      word = saved_q;
      factor = saved_q_factor;
    }
    word = saved;
    factor = saved_factor;
  }
};

}  // namespace

LieSeries bch_dynkin(int maxdeg) {
  if (maxdeg < 1) throw std::invalid_argument("bch_dynkin: maxdeg >= 1 required");
  DynkinEnumerator en(maxdeg);
  en.run();
  LieSeries out(maxdeg);
  for (const auto& [k, weight] : en.weights) {
    Word w = Word::from_key(k);
    const LieSeries lnb = left_normed_bracket(w);
    Rat scale = weight / Rat(static_cast<long>(w.len));
    for (const auto& [kr, q] : lnb.terms) out.add_term(Word::from_key(kr), scale * q);
  }
  return out;
}

static AssocSeries log_exp_x_exp_y(int maxdeg) {
  AssocSeries x = AssocSeries::letter(Alphabet::generators, maxdeg, 0);
  AssocSeries y = AssocSeries::letter(Alphabet::generators, maxdeg, 1);
  return assoc_log(assoc_mul(assoc_exp(x, maxdeg), assoc_exp(y, maxdeg), maxdeg), maxdeg);
}

LieSeries bch_log(int maxdeg) {
  if (maxdeg < 1) throw std::invalid_argument("bch_log: maxdeg >= 1 required");
  return dynkin_project(log_exp_x_exp_y(maxdeg));
}

LieSeries bch_series(int maxdeg) {
  if (maxdeg < 1) throw std::invalid_argument("bch_series: maxdeg >= 1 required");
  return assoc_to_lie(log_exp_x_exp_y(maxdeg));
}

LieSeries bch_linear_in_y(int maxdeg) {
  if (maxdeg < 1) throw std::invalid_argument("bch_linear_in_y: maxdeg >= 1 required");
  LieSeries x = LieSeries::generator(maxdeg, 0);
  LieSeries y = LieSeries::generator(maxdeg, 1);
  return x + apply_ad_series(series_z_over_one_minus_emz(maxdeg), x, y, maxdeg);
}

}  // namespace liekv
