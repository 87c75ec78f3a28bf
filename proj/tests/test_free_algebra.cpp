#include "doctest.h"
#include "liekv/assoc_series.hpp"
#include "test_helpers.hpp"

using namespace liekv;

namespace {

AssocSeries gen(Alphabet a, int maxdeg, const std::string& w, const Rat& c = Rat(1)) {
  AssocSeries s(a, maxdeg);
  s.add_term(word_from_string(w, a), c);
  return s;
}

}  // namespace

TEST_CASE("concatenation product on words") {
  auto x = gen(Alphabet::generators, 4, "X");
  auto y = gen(Alphabet::generators, 4, "Y");
  auto xy = assoc_mul(x, y, 4);
  CHECK(xy.coeff(word_from_string("XY", Alphabet::generators)) == Rat(1));
  CHECK(xy.terms.size() == 1);

  // (1+X)(1+Y) = 1 + X + Y + XY
  auto u = AssocSeries::unit(Alphabet::generators, 4);
  auto prod = assoc_mul(u + x, u + y, 4);
  CHECK(prod.coeff(Word()) == Rat(1));
  CHECK(prod.coeff(word_from_string("X", Alphabet::generators)) == Rat(1));
  CHECK(prod.coeff(word_from_string("Y", Alphabet::generators)) == Rat(1));
  CHECK(prod.coeff(word_from_string("XY", Alphabet::generators)) == Rat(1));
  CHECK(prod.terms.size() == 4);

  // (XY - YX) X = XYX - YXX
  auto comm = gen(Alphabet::generators, 4, "XY") - gen(Alphabet::generators, 4, "YX");
  auto res = assoc_mul(comm, x, 4);
  CHECK(res.coeff(word_from_string("XYX", Alphabet::generators)) == Rat(1));
  CHECK(res.coeff(word_from_string("YXX", Alphabet::generators)) == Rat(-1));
  CHECK(res.terms.size() == 2);
}

TEST_CASE("alphabet mismatch is rejected") {
  auto x = gen(Alphabet::generators, 3, "X");
  auto a = gen(Alphabet::ad_letters, 3, "x");
  CHECK_THROWS_AS(assoc_mul(x, a, 3), std::invalid_argument);
}

TEST_CASE("truncation discards everything above maxdeg") {
  auto x = gen(Alphabet::generators, 2, "X");
  auto xx = assoc_mul(x, x, 2);
  auto xxx = assoc_mul(xx, x, 2);
  CHECK(xxx.is_zero());
}

TEST_CASE("exp and log") {
  int d = 6;
  auto x = gen(Alphabet::generators, d, "X");
  auto y = gen(Alphabet::generators, d, "Y");

  CHECK(equal_through(assoc_log(assoc_exp(x, d), d), x, d));

  auto prod = assoc_mul(assoc_exp(x, d), assoc_exp(y, d), d);
  CHECK(prod.coeff(word_from_string("XY", Alphabet::generators)) == Rat(1));
  CHECK(prod.coeff(word_from_string("XXY", Alphabet::generators)) == rat(1, 2));
  // generic coefficient of X^p Y^q is 1/(p! q!)
  CHECK(prod.coeff(word_from_string("XXYYY", Alphabet::generators)) == rat(1, 12));

  CHECK_THROWS_AS(assoc_exp(AssocSeries::unit(Alphabet::generators, d), d),
                  std::invalid_argument);
  CHECK_THROWS_AS(assoc_log(x, d), std::invalid_argument);

  // classical word coefficients of log(e^X e^Y)
  auto logprod = assoc_log(prod, d);
  CHECK(logprod.coeff(word_from_string("XXY", Alphabet::generators)) == rat(1, 12));
  CHECK(logprod.coeff(word_from_string("XYX", Alphabet::generators)) == rat(-1, 6));
  CHECK(logprod.coeff(word_from_string("YX", Alphabet::generators)) == rat(-1, 2));
}

TEST_CASE("exp(a) exp(-a) = 1 for random a") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 5;
    AssocSeries a = rng.assoc_series(Alphabet::generators, d, 4);
    auto prod = assoc_mul(assoc_exp(a, d), assoc_exp(-a, d), d);
    CHECK(equal_through(prod, AssocSeries::unit(Alphabet::generators, d), d));
  }
}

TEST_CASE("associativity of the product (random)") {
  testing::Rng rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 5;
    AssocSeries a = rng.assoc_series(Alphabet::generators, d, 4);
    AssocSeries b = rng.assoc_series(Alphabet::generators, d, 4);
    AssocSeries c = rng.assoc_series(Alphabet::generators, d, 4);
    auto left = assoc_mul(assoc_mul(a, b, d), c, d);
    auto right = assoc_mul(a, assoc_mul(b, c, d), d);
    CHECK(equal_through(left, right, d));
  }
}

TEST_CASE("cyclic reduction") {
  int d = 6;
  auto xy = gen(Alphabet::ad_letters, d, "xy");
  auto yx = gen(Alphabet::ad_letters, d, "yx");
  CHECK(cyclic_reduce(xy - yx).is_zero());

  auto xxy = gen(Alphabet::ad_letters, d, "xxy");
  auto yxx = gen(Alphabet::ad_letters, d, "yxx");
  auto r = cyclic_reduce(xxy + yxx);
  CHECK(r.coeff(word_from_string("xxy", Alphabet::ad_letters)) == Rat(2));
  CHECK(r.terms.size() == 1);

  // periodic word: a single canonical key
  auto xyxy = gen(Alphabet::ad_letters, d, "xyxy");
  auto rp = cyclic_reduce(xyxy);
  CHECK(rp.coeff(word_from_string("xyxy", Alphabet::ad_letters)) == Rat(1));
  CHECK(rp.terms.size() == 1);

  CHECK_THROWS_AS(cyclic_reduce(AssocSeries::unit(Alphabet::ad_letters, d)),
                  std::invalid_argument);
}

TEST_CASE("cyclic reduction kills commutators (random)") {
  testing::Rng rng(991);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 6;
    AssocSeries a(Alphabet::ad_letters, d), b(Alphabet::ad_letters, d);
    a.add_term(rng.word(1 + rng.below(3)), Rat(1));
    b.add_term(rng.word(1 + rng.below(3)), Rat(1));
    auto comm = assoc_mul(a, b, d) - assoc_mul(b, a, d);
    CHECK(cyclic_reduce(comm).is_zero());
  }
}
