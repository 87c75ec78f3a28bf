#include "liekv/assoc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace liekv {

AssocSeries AssocSeries::unit(Alphabet a, int maxdeg) {
  AssocSeries s(a, maxdeg);
  s.add_term(Word(), Rat(1));
  return s;
}

AssocSeries AssocSeries::letter(Alphabet a, int maxdeg, int c) {
  AssocSeries s(a, maxdeg);
  s.add_term(Word::letter(c), Rat(1));
  return s;
}

void AssocSeries::add_term(const Word& w, const Rat& c) {
  if (liekv::is_zero(c) || static_cast<int>(w.len) > max_degree) return;
  auto [it, fresh] = terms.try_emplace(w.key(), c);
  if (!fresh) {
    it->second += c;
    if (liekv::is_zero(it->second)) terms.erase(it);
  }
}

Rat AssocSeries::coeff(const Word& w) const {
  auto it = terms.find(w.key());
  return it == terms.end() ? Rat() : it->second;
}

std::vector<std::pair<Word, Rat>> AssocSeries::sorted_terms() const {
  std::vector<std::pair<Word, Rat>> out;
  out.reserve(terms.size());
  for (const auto& [k, c] : terms) out.emplace_back(Word::from_key(k), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return deg_lex_less(a.first, b.first); });
  return out;
}

static void check_same_alphabet(const AssocSeries& a, const AssocSeries& b, const char* op) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

AssocSeries operator+(const AssocSeries& a, const AssocSeries& b) {
  check_same_alphabet(a, b, "assoc add");
  AssocSeries out(a.alphabet, std::min(a.max_degree, b.max_degree));
  for (const auto& [k, c] : a.terms) out.add_term(Word::from_key(k), c);
  for (const auto& [k, c] : b.terms) out.add_term(Word::from_key(k), c);
  return out;
}

AssocSeries operator-(const AssocSeries& a, const AssocSeries& b) { return a + (b * Rat(-1)); }

AssocSeries operator*(const AssocSeries& a, const Rat& s) {
  AssocSeries out(a.alphabet, a.max_degree);
  if (is_zero(s)) return out;
  for (const auto& [k, c] : a.terms) out.terms.emplace(k, c * s);
  return out;
}

AssocSeries operator-(const AssocSeries& a) { return a * Rat(-1); }

AssocSeries assoc_mul(const AssocSeries& a, const AssocSeries& b, int maxdeg) {
  check_same_alphabet(a, b, "assoc_mul");
  AssocSeries out(a.alphabet, maxdeg);
  for (const auto& [ka, ca] : a.terms) {
    Word wa = Word::from_key(ka);
    if (static_cast<int>(wa.len) > maxdeg) continue;
    for (const auto& [kb, cb] : b.terms) {
      Word wb = Word::from_key(kb);
      if (static_cast<int>(wa.len + wb.len) > maxdeg) continue;
      out.add_term(wa.concat(wb), ca * cb);
    }
  }
  return out;
}

AssocSeries assoc_exp(const AssocSeries& a, int maxdeg) {
  if (!is_zero(a.constant_term()))
    throw std::invalid_argument("assoc_exp: nonzero constant term");
  AssocSeries out = AssocSeries::unit(a.alphabet, maxdeg);
  AssocSeries cur = AssocSeries::unit(a.alphabet, maxdeg);
  for (int k = 1; k <= maxdeg; ++k) {
    cur = assoc_mul(cur, a, maxdeg) * (Rat(1) / Rat(k));
    if (cur.is_zero()) break;
    out = out + cur;
  }
  return out;
}

AssocSeries assoc_log(const AssocSeries& u, int maxdeg) {
  if (u.constant_term() != Rat(1))
    throw std::invalid_argument("assoc_log: constant term must be 1");
  AssocSeries v = u - AssocSeries::unit(u.alphabet, u.max_degree);  // min degree >= 1
  AssocSeries out = AssocSeries::zero(u.alphabet, maxdeg);
  AssocSeries cur = AssocSeries::unit(u.alphabet, maxdeg);
  Rat sign(1);
  for (int m = 1; m <= maxdeg; ++m) {
    cur = assoc_mul(cur, v, maxdeg);
    if (cur.is_zero()) break;
    out = out + cur * (sign / Rat(m));
    sign = -sign;
  }
  return out;
}

bool equal_through(const AssocSeries& a, const AssocSeries& b, int maxdeg) {
  if (a.alphabet != b.alphabet) return false;
  for (const auto& [k, c] : a.terms) {
    Word w = Word::from_key(k);
    if (static_cast<int>(w.len) <= maxdeg && b.coeff(w) != c) return false;
  }
  for (const auto& [k, c] : b.terms) {
    Word w = Word::from_key(k);
    if (static_cast<int>(w.len) <= maxdeg && a.coeff(w) != c) return false;
  }
  return true;
}

std::string assoc_str(const AssocSeries& a) {
  if (a.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : a.sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + word_str(w, a.alphabet);
  }
  return s;
}

void CyclicSeries::add_term(const Word& necklace, const Rat& c) {
  if (liekv::is_zero(c)) return;
  auto [it, fresh] = terms.try_emplace(necklace.key(), c);
  if (!fresh) {
    it->second += c;
    if (liekv::is_zero(it->second)) terms.erase(it);
  }
}

Rat CyclicSeries::coeff(const Word& w) const {
  auto it = terms.find(least_rotation(w).key());
  return it == terms.end() ? Rat() : it->second;
}

int CyclicSeries::min_nonzero_degree() const {
  int best = 0;
  for (const auto& [k, c] : terms) {
    int len = static_cast<int>(Word::from_key(k).len);
    if (best == 0 || len < best) best = len;
  }
  return best;
}

CyclicSeries CyclicSeries::degree_part(int n) const {
  CyclicSeries out;
  for (const auto& [k, c] : terms)
    if (static_cast<int>(Word::from_key(k).len) == n) out.terms.emplace(k, c);
  return out;
}

std::vector<std::pair<Word, Rat>> CyclicSeries::sorted_terms() const {
  std::vector<std::pair<Word, Rat>> out;
  out.reserve(terms.size());
  for (const auto& [k, c] : terms) out.emplace_back(Word::from_key(k), c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return deg_lex_less(a.first, b.first); });
  return out;
}

CyclicSeries operator+(const CyclicSeries& a, const CyclicSeries& b) {
  CyclicSeries out = a;
  for (const auto& [k, c] : b.terms) out.add_term(Word::from_key(k), c);
  return out;
}

CyclicSeries operator-(const CyclicSeries& a, const CyclicSeries& b) {
  CyclicSeries out = a;
  for (const auto& [k, c] : b.terms) out.add_term(Word::from_key(k), -c);
  return out;
}

CyclicSeries operator*(const CyclicSeries& a, const Rat& s) {
  CyclicSeries out;
  if (is_zero(s)) return out;
  for (const auto& [k, c] : a.terms) out.terms.emplace(k, c * s);
  return out;
}

CyclicSeries cyclic_reduce(const AssocSeries& a) {
  if (a.alphabet != Alphabet::ad_letters)
    throw std::invalid_argument("cyclic_reduce: input must be over the ad letters");
  if (!is_zero(a.constant_term()))
    throw std::invalid_argument("cyclic_reduce: constant term present");
  CyclicSeries out;
  for (const auto& [k, c] : a.terms) out.add_term(least_rotation(Word::from_key(k)), c);
  return out;
}

std::string cyclic_str(const CyclicSeries& c) {
  if (c.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, q] : c.sorted_terms()) {
    if (!s.empty()) s += " + ";
    s += rat_str(q) + "*(" + word_str(w, Alphabet::ad_letters) + ")";
  }
  return s;
}

}  // namespace liekv
