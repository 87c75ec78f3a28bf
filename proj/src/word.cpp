#include "liekv/word.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace liekv {

std::pair<Word, Word> std_factorization(const Word& w) {
  assert(w.len >= 2 && is_lyndon(w));
  for (std::uint32_t i = 1; i < w.len; ++i) {
    Word v = w.suffix_from(i);
    if (is_lyndon(v)) return {w.prefix(i), v};
  }
  throw std::logic_error("std_factorization: no Lyndon suffix");  // unreachable
}

const std::vector<Word>& lyndon_words(int n) {
  static std::map<int, std::vector<Word>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > static_cast<int>(Word::max_len))
    throw std::invalid_argument("lyndon_words: degree out of range");

  // Duval: enumerate Lyndon words of length <= n in lex order, keep length n.
  std::vector<Word> out;
  std::vector<int> w{0};
  while (true) {
    if (static_cast<int>(w.size()) == n) {
      std::uint64_t bits = 0;
      for (std::size_t i = 0; i < w.size(); ++i)
        bits |= static_cast<std::uint64_t>(w[i]) << i;
      out.emplace_back(bits, static_cast<std::uint32_t>(w.size()));
    }
    std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(n)) w.push_back(w[w.size() % m]);
    while (!w.empty() && w.back() == 1) w.pop_back();
    if (w.empty()) break;
    w.back() += 1;
  }
  return cache.emplace(n, std::move(out)).first->second;
}

long witt_dimension(int n) {
  if (n < 1) throw std::invalid_argument("witt_dimension: n >= 1 required");
  auto mobius = [](int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        mu = -mu;
      }
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  long total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long pw = 1;
    for (int i = 0; i < n / d; ++i) pw *= 2;
    total += mobius(d) * pw;
  }
  return total / n;
}

static char letter_char(int c, Alphabet a) {
  if (a == Alphabet::generators) return c == 0 ? 'X' : 'Y';
  return c == 0 ? 'x' : 'y';
}

std::string word_str(const Word& w, Alphabet a) {
  if (w.len == 0) return "1";
  std::string s;
  for (std::uint32_t i = 0; i < w.len; ++i) s += letter_char(w.at(i), a);
  return s;
}

std::string bracket_str(const Word& w, Alphabet a) {
  if (w.len == 1) return std::string(1, letter_char(w.at(0), a));
  auto [u, v] = std_factorization(w);
  return "[" + bracket_str(u, a) + "," + bracket_str(v, a) + "]";
}

Word word_from_string(const std::string& s, Alphabet a) {
  Word w;
  if (s == "1") return w;
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    int v;
    if (c == letter_char(0, a))
      v = 0;
    else if (c == letter_char(1, a))
      v = 1;
    else
      throw std::invalid_argument("word_from_string: bad letter in '" + s + "'");
    bits |= static_cast<std::uint64_t>(v) << i;
  }
  return Word(bits, static_cast<std::uint32_t>(s.size()));
}

}  // namespace liekv
