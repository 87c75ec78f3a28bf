#ifndef LIEKV_ASSOC_SERIES_HPP
#define LIEKV_ASSOC_SERIES_HPP

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liekv/rational.hpp"
#include "liekv/word.hpp"

namespace liekv {

// Graded noncommutative power series: finitely many words with nonzero exact
// rational coefficients, exact through max_degree, everything above discarded.
// Values are immutable in spirit: all operations return new series.
struct AssocSeries {
  Alphabet alphabet = Alphabet::generators;
  int max_degree = 0;
  std::unordered_map<std::uint64_t, Rat> terms;

  AssocSeries() = default;
  AssocSeries(Alphabet a, int maxdeg) : alphabet(a), max_degree(maxdeg) {}

  static AssocSeries zero(Alphabet a, int maxdeg) { return AssocSeries(a, maxdeg); }
  static AssocSeries unit(Alphabet a, int maxdeg);
  static AssocSeries letter(Alphabet a, int maxdeg, int c);

  void add_term(const Word& w, const Rat& c);  // drops words beyond max_degree
  Rat coeff(const Word& w) const;
  Rat constant_term() const { return coeff(Word()); }
  bool is_zero() const { return terms.empty(); }

  // terms in degree-major lexicographic order, for printing and peeling
  std::vector<std::pair<Word, Rat>> sorted_terms() const;
};

AssocSeries operator+(const AssocSeries& a, const AssocSeries& b);
AssocSeries operator-(const AssocSeries& a, const AssocSeries& b);
AssocSeries operator*(const AssocSeries& a, const Rat& s);
AssocSeries operator-(const AssocSeries& a);

// Concatenation product, exact through maxdeg. Throws on alphabet mismatch.
AssocSeries assoc_mul(const AssocSeries& a, const AssocSeries& b, int maxdeg);
inline AssocSeries operator*(const AssocSeries& a, const AssocSeries& b) {
  return assoc_mul(a, b, a.max_degree < b.max_degree ? a.max_degree : b.max_degree);
}

// exp requires zero constant term; log requires constant term 1.
AssocSeries assoc_exp(const AssocSeries& a, int maxdeg);
AssocSeries assoc_log(const AssocSeries& u, int maxdeg);

bool equal_through(const AssocSeries& a, const AssocSeries& b, int maxdeg);
std::string assoc_str(const AssocSeries& a);

// Rational combinations of necklaces (cyclic words) in the ad letters x, y.
// Keys are the lexicographically least rotation of a nonempty word; this is
// the universal home of trace expressions tr(ad w_1 ... ad w_k).
struct CyclicSeries {
  std::unordered_map<std::uint64_t, Rat> terms;

  void add_term(const Word& necklace, const Rat& c);
  bool is_zero() const { return terms.empty(); }
  Rat coeff(const Word& w) const;  // w is canonicalized before lookup
  int min_nonzero_degree() const;  // 0 when empty
  // restriction to one homogeneous degree
  CyclicSeries degree_part(int n) const;
  std::vector<std::pair<Word, Rat>> sorted_terms() const;
};

CyclicSeries operator+(const CyclicSeries& a, const CyclicSeries& b);
CyclicSeries operator-(const CyclicSeries& a, const CyclicSeries& b);
CyclicSeries operator*(const CyclicSeries& a, const Rat& s);

// Projects a series over {x,y} onto necklaces: every word is replaced by its
// least rotation and rotation-equivalent words are summed, realizing the
// trace relation tr(AB) = tr(BA). The input must carry no constant term
// (tr(1) = dim g is not universal; callers cancel constants beforehand).
CyclicSeries cyclic_reduce(const AssocSeries& a);

std::string cyclic_str(const CyclicSeries& c);

}  // namespace liekv

#endif
