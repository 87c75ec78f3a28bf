#include "liekv/enveloping.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "liekv/scalar_series.hpp"

namespace liekv {

namespace {

template <class T>
void map_add(std::map<Mono, Rat>& terms, const Mono& m, const T& c) {
  auto [it, fresh] = terms.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

int max_degree_of(const std::map<Mono, Rat>& terms) {
  int d = -1;
  for (const auto& [m, c] : terms) d = std::max(d, mono_degree(m));
  return d;
}

std::vector<int> mono_to_word(const Mono& m) {
  std::vector<int> w;
  for (int i = 0; i < static_cast<int>(m.size()); ++i)
    for (int a = 0; a < m[i]; ++a) w.push_back(i);
  return w;
}

Mono word_to_mono(const std::vector<int>& w, int dim) {
  Mono m(dim, 0);
  for (int i : w) m[i] += 1;
  return m;
}

}  // namespace

SymElement SymElement::monomial(int dim, const Mono& m, const Rat& c) {
  SymElement p(dim);
  p.add_term(m, c);
  return p;
}

SymElement SymElement::variable(int dim, int i) {
  Mono m(dim, 0);
  m[i] = 1;
  return monomial(dim, m);
}

void SymElement::add_term(const Mono& m, const Rat& c) {
  assert(static_cast<int>(m.size()) == dim);
  if (!is_zero(c)) map_add(terms, m, c);
}

Rat SymElement::coeff(const Mono& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rat() : it->second;
}

int SymElement::degree() const { return max_degree_of(terms); }

SymElement operator+(const SymElement& a, const SymElement& b) {
  SymElement out = a;
  for (const auto& [m, c] : b.terms) map_add(out.terms, m, c);
  return out;
}

SymElement operator-(const SymElement& a, const SymElement& b) { return a + (b * Rat(-1)); }

SymElement operator*(const SymElement& a, const Rat& s) {
  SymElement out(a.dim);
  if (is_zero(s)) return out;
  for (const auto& [m, c] : a.terms) out.terms.emplace(m, c * s);
  return out;
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
  SymElement out(a.dim);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      Mono m = ma;
      for (int i = 0; i < out.dim; ++i) m[i] += mb[i];
      map_add(out.terms, m, ca * cb);
    }
  return out;
}

void UeaElement::add_term(const Mono& m, const Rat& c) {
  assert(static_cast<int>(m.size()) == dim);
  if (!is_zero(c)) map_add(terms, m, c);
}

Rat UeaElement::coeff(const Mono& m) const {
  auto it = terms.find(m);
  return it == terms.end() ? Rat() : it->second;
}

int UeaElement::degree() const { return max_degree_of(terms); }

UeaElement operator+(const UeaElement& a, const UeaElement& b) {
  UeaElement out = a;
  for (const auto& [m, c] : b.terms) map_add(out.terms, m, c);
  return out;
}

UeaElement operator-(const UeaElement& a, const UeaElement& b) { return a + (b * Rat(-1)); }

UeaElement operator*(const UeaElement& a, const Rat& s) {
  UeaElement out(a.dim);
  if (is_zero(s)) return out;
  for (const auto& [m, c] : a.terms) out.terms.emplace(m, c * s);
  return out;
}

UeaElement pbw_normal_form(const std::vector<int>& word, const LieAlgebra& alg) {
  UeaElement out(alg.dim);
  // worklist of (word, coefficient); each rewrite either removes an inversion
  // at fixed length or shortens the word, so the loop terminates
  std::vector<std::pair<std::vector<int>, Rat>> work{{word, Rat(1)}};
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      out.add_term(word_to_mono(w, alg.dim), c);
      continue;
    }
    int a = w[pos], b = w[pos + 1];  // a > b
    std::vector<int> swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(std::move(swapped), c);
    for (int k = 0; k < alg.dim; ++k) {
      const Rat& s = alg.sc(a, b, k);
      if (is_zero(s)) continue;
      std::vector<int> shorter;
      shorter.reserve(w.size() - 1);
      shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(std::move(shorter), c * s);
    }
  }
  return out;
}

UeaElement uea_mul(const UeaElement& a, const UeaElement& b, const LieAlgebra& alg) {
  UeaElement out(alg.dim);
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      std::vector<int> w = mono_to_word(ma);
      std::vector<int> wb = mono_to_word(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      UeaElement prod = pbw_normal_form(w, alg);
      for (const auto& [m, c] : prod.terms) out.add_term(m, ca * cb * c);
    }
  return out;
}

UeaElement symmetrize(const SymElement& p, const LieAlgebra& alg) {
  UeaElement out(alg.dim);
  for (const auto& [mono, c] : p.terms) {
    std::vector<int> w = mono_to_word(mono);  // sorted ascending
    std::vector<std::vector<int>> perms;
    do perms.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    Rat scale = c / Rat(static_cast<long>(perms.size()));
    for (const auto& arrangement : perms) {
      UeaElement nf = pbw_normal_form(arrangement, alg);
      for (const auto& [m, q] : nf.terms) out.add_term(m, scale * q);
    }
  }
  return out;
}

SymElement unsymmetrize(const UeaElement& u, const LieAlgebra& alg) {
  SymElement out(alg.dim);
  UeaElement rest = u;
  while (!rest.is_zero_elt()) {
    int top = rest.degree();
    SymElement head(alg.dim);
    for (const auto& [m, c] : rest.terms)
      if (mono_degree(m) == top) head.add_term(m, c);
    out = out + head;
    rest = rest - symmetrize(head, alg);  // cancels the top degree exactly
    assert(rest.degree() < top);
  }
  return out;
}

SymElement gutt_star(const SymElement& w, const SymElement& v, const LieAlgebra& alg) {
  return unsymmetrize(uea_mul(symmetrize(w, alg), symmetrize(v, alg), alg), alg);
}

SymElement ad_derivation(int i, const SymElement& p, const LieAlgebra& alg) {
  SymElement out(alg.dim);
  for (const auto& [mono, c] : p.terms)
    for (int j = 0; j < alg.dim; ++j) {
      if (mono[j] == 0) continue;
      for (int k = 0; k < alg.dim; ++k) {
        const Rat& s = alg.sc(i, j, k);
        if (is_zero(s)) continue;
        Mono m = mono;
        m[j] -= 1;
        m[k] += 1;
        out.add_term(m, c * Rat(mono[j]) * s);
      }
    }
  return out;
}

bool is_invariant(const SymElement& p, const LieAlgebra& alg) {
  for (int i = 0; i < alg.dim; ++i)
    if (!ad_derivation(i, p, alg).is_zero_elt()) return false;
  return true;
}

namespace {

// exp of a polynomial with zero constant term, truncated at total degree maxdeg
SymElement sym_exp(const SymElement& a, int maxdeg) {
  SymElement out(a.dim);
  out.add_term(Mono(a.dim, 0), Rat(1));
  SymElement cur = out;
  for (int k = 1; k <= maxdeg; ++k) {
    SymElement next(a.dim);
    for (const auto& [m, c] : sym_mul(cur, a).terms)
      if (mono_degree(m) <= maxdeg) next.add_term(m, c);
    cur = next * (Rat(1) / Rat(k));
    if (cur.is_zero_elt()) break;
    out = out + cur;
  }
  return out;
}

}  // namespace

SymElement jhalf_polynomial(const LieAlgebra& alg, int maxdeg) {
  const int d = alg.dim;
  // ad X as a matrix of linear polynomials in the coordinates of X
  std::vector<std::vector<SymElement>> ad(d, std::vector<SymElement>(d, SymElement(d)));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) {
        const Rat& s = alg.sc(i, j, k);
        if (!is_zero(s)) {
          Mono m(d, 0);
          m[i] = 1;
          ad[k][j].add_term(m, s);
        }
      }
  auto mat_mul = [&](const std::vector<std::vector<SymElement>>& a,
                     const std::vector<std::vector<SymElement>>& b) {
    std::vector<std::vector<SymElement>> out(d, std::vector<SymElement>(d, SymElement(d)));
    for (int r = 0; r < d; ++r)
      for (int cidx = 0; cidx < d; ++cidx)
        for (int m = 0; m < d; ++m) {
          for (const auto& [mono, c] : sym_mul(a[r][m], b[m][cidx]).terms)
            if (mono_degree(mono) <= maxdeg) out[r][cidx].add_term(mono, c);
        }
    return out;
  };
  auto trace = [&](const std::vector<std::vector<SymElement>>& a) {
    SymElement t(d);
    for (int r = 0; r < d; ++r) t = t + a[r][r];
    return t;
  };

  SymElement lnj = trace(ad) * Rat(-1, 2);
  std::vector<std::vector<SymElement>> pw = ad;
  for (int m = 2; m <= maxdeg; ++m) {
    pw = mat_mul(pw, ad);
    if (m % 2 == 0) {
      int n = m / 2;
      Rat coeff = bernoulli(2 * n) / (Rat(factorial(2 * n)) * Rat(2 * n));
      lnj = lnj + trace(pw) * coeff;
    }
  }
  return sym_exp(lnj * Rat(1, 2), maxdeg);
}

namespace {

// d^alpha applied to P, where alpha is the exponent vector of a monomial in
// the dual coordinates: falling-factorial contraction on each variable.
SymElement apply_partial(const Mono& alpha, const SymElement& p) {
  SymElement out(p.dim);
  for (const auto& [mono, c] : p.terms) {
    Rat factor = c;
    Mono m = mono;
    bool ok = true;
    for (int i = 0; i < p.dim && ok; ++i) {
      if (alpha[i] == 0) continue;
      if (mono[i] < alpha[i]) {
        ok = false;
        break;
      }
      for (int a = 0; a < alpha[i]; ++a) factor *= Rat(mono[i] - a);
      m[i] -= alpha[i];
    }
    if (ok) out.add_term(m, factor);
  }
  return out;
}

}  // namespace

UeaElement duflo_map(const SymElement& p, const LieAlgebra& alg) {
  int n = std::max(p.degree(), 0);
  SymElement jhalf = jhalf_polynomial(alg, n);
  SymElement acted(alg.dim);
  for (const auto& [alpha, c] : jhalf.terms) acted = acted + apply_partial(alpha, p) * c;
  return symmetrize(acted, alg);
}

DufloCheck check_duflo_multiplicative(const SymElement& p, const SymElement& q,
                                      const LieAlgebra& alg) {
  if (!is_invariant(p, alg) || !is_invariant(q, alg))
    throw std::invalid_argument("check_duflo_multiplicative: non-invariant input");
  UeaElement lhs = duflo_map(sym_mul(p, q), alg);
  UeaElement rhs = uea_mul(duflo_map(p, alg), duflo_map(q, alg), alg);
  DufloCheck out;
  out.residual = lhs - rhs;
  out.multiplicative = out.residual.is_zero_elt();
  return out;
}

namespace {

std::string mono_str(const Mono& m) {
  std::string s;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "e" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string poly_str(const std::map<Mono, Rat>& terms) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms) {
    if (!s.empty()) s += " + ";
    s += rat_str(c) + "*" + mono_str(m);
  }
  return s;
}

}  // namespace

std::string sym_str(const SymElement& p, const LieAlgebra&) { return poly_str(p.terms); }
std::string uea_str(const UeaElement& u, const LieAlgebra&) { return poly_str(u.terms); }

}  // namespace liekv
