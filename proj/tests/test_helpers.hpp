#ifndef LIEKV_TEST_HELPERS_HPP
#define LIEKV_TEST_HELPERS_HPP

#include <random>

#include "liekv/assoc_series.hpp"
#include "liekv/lie_series.hpp"

namespace liekv::testing {

// Deterministic generators for property-style tests.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }

  Rat small_rat() {
    int num = below(9) - 4;           // -4..4
    int den = 1 + below(3);           // 1..3
    return rat(num, den);
  }

  Word word(int len) {
    std::uint64_t bits = 0;
    for (int i = 0; i < len; ++i) bits |= static_cast<std::uint64_t>(eng() & 1) << i;
    return Word(bits, len);
  }

  AssocSeries assoc_series(Alphabet a, int maxdeg, int nterms) {
    AssocSeries s(a, maxdeg);
    for (int t = 0; t < nterms; ++t) s.add_term(word(1 + below(maxdeg)), small_rat());
    return s;
  }

  LieSeries lie_series(int maxdeg, int nterms) {
    LieSeries s(maxdeg);
    for (int t = 0; t < nterms; ++t) {
      int deg = 1 + below(maxdeg);
      const auto& basis = lyndon_words(deg);
      s.add_term(basis[below(static_cast<int>(basis.size()))], small_rat());
    }
    return s;
  }
};

}  // namespace liekv::testing

#endif
