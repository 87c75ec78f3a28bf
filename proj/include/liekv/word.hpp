#ifndef LIEKV_WORD_HPP
#define LIEKV_WORD_HPP

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace liekv {

// Which two-letter alphabet a series lives over. Words themselves are
// alphabet-agnostic bit patterns; the tag only affects printing and guards
// against mixing generator series with ad-letter series.
enum class Alphabet { generators, ad_letters };  // {X,Y} resp. {x,y}

// A word over a two-letter alphabet, packed one bit per letter
// (letter i of the word is (bits >> i) & 1, so bit 0 is the first letter).
// The empty word is the unit of the free monoid.
struct Word {
  std::uint64_t bits = 0;
  std::uint32_t len = 0;

  static constexpr std::uint32_t max_len = 48;

  Word() = default;
  Word(std::uint64_t b, std::uint32_t l) : bits(b), len(l) { assert(l <= max_len); }

  static Word letter(int c) { return Word(static_cast<std::uint64_t>(c & 1), 1); }

  int at(std::uint32_t i) const {
    assert(i < len);
    return static_cast<int>((bits >> i) & 1u);
  }
  bool empty() const { return len == 0; }

  // Unique 64-bit key: low 48 bits the letters, high bits the length.
  std::uint64_t key() const { return bits | (static_cast<std::uint64_t>(len) << max_len); }
  static Word from_key(std::uint64_t k) {
    return Word(k & ((std::uint64_t(1) << max_len) - 1),
                static_cast<std::uint32_t>(k >> max_len));
  }

  Word concat(const Word& o) const {
    assert(len + o.len <= max_len);
    return Word(bits | (o.bits << len), len + o.len);
  }
  Word prefix(std::uint32_t n) const {
    assert(n <= len);
    return Word(bits & ((std::uint64_t(1) << n) - 1), n);
  }
  Word suffix_from(std::uint32_t i) const {
    assert(i <= len);
    return Word(bits >> i, len - i);
  }
  Word rotated(std::uint32_t r) const {  // left rotation by r
    assert(r < len || len == 0);
    if (len == 0) return *this;
    return suffix_from(r).concat(prefix(r));
  }

  bool operator==(const Word& o) const { return bits == o.bits && len == o.len; }
};

// Lexicographic order with the prefix-is-smaller convention (u < uv).
inline bool lex_less(const Word& a, const Word& b) {
  std::uint32_t n = a.len < b.len ? a.len : b.len;
  for (std::uint32_t i = 0; i < n; ++i) {
    int la = a.at(i), lb = b.at(i);
    if (la != lb) return la < lb;
  }
  return a.len < b.len;
}

inline bool lex_leq(const Word& a, const Word& b) { return !lex_less(b, a); }

// Degree-major order (shorter words first, lexicographic within a degree);
// this is the display and serialization order everywhere.
inline bool deg_lex_less(const Word& a, const Word& b) {
  if (a.len != b.len) return a.len < b.len;
  return lex_less(a, b);
}

inline bool is_lyndon(const Word& w) {
  if (w.len == 0) return false;
  for (std::uint32_t r = 1; r < w.len; ++r)
    if (!lex_less(w, w.rotated(r))) return false;
  return true;
}

// Lexicographically least rotation; canonical representative of a necklace.
inline Word least_rotation(const Word& w) {
  Word best = w;
  for (std::uint32_t r = 1; r < w.len; ++r) {
    Word c = w.rotated(r);
    if (lex_less(c, best)) best = c;
  }
  return best;
}

// w = uv with v the longest proper Lyndon suffix; defined for |w| >= 2.
// The standard bracketing of a Lyndon word is b(w) = [b(u), b(v)].
std::pair<Word, Word> std_factorization(const Word& w);

// All Lyndon words of length n over two letters, in lexicographic order
// (Duval's algorithm). Cached per n.
const std::vector<Word>& lyndon_words(int n);

// Dimension of the degree-n component of the free Lie algebra on two
// generators: (1/n) sum_{d | n} mu(d) 2^{n/d}.
long witt_dimension(int n);

std::string word_str(const Word& w, Alphabet a);
// "[X,[X,Y]]" style rendering of the standard bracketing of a Lyndon word.
std::string bracket_str(const Word& w, Alphabet a);
// Parses a string like "XXY" or "xy" into a word. Throws on foreign letters.
Word word_from_string(const std::string& s, Alphabet a);

}  // namespace liekv

#endif
