#include <doctest.h>

#include <algorithm>
#include <random>

#include "imverma/element.hpp"

using namespace imverma;

namespace {

Element mono(std::initializer_list<int> idx, const Scalar& c = Scalar::one()) {
  return Element::monomial(PBWMonomial(FreeWord(idx)), c);
}

FreeWord random_word(std::mt19937& rng, int max_len, int lo, int hi) {
  const unsigned span = static_cast<unsigned>(hi - lo + 1);
  FreeWord w(1 + rng() % static_cast<unsigned>(max_len));
  for (auto& x : w) x = lo + static_cast<int>(rng() % span);
  return w;
}

}  // namespace

TEST_CASE("straightening base cases") {
  CHECK(straighten({0, 1}) == mono({1, 0}, Scalar::q_pow(2)));
  CHECK(straighten({0, 0}) == mono({0, 0}));
  CHECK(straighten({}) == Element::unit());
  // one mixed step: x_0 x_2 = q^2 x_2 x_0 + (q^2 - 1) x_1 x_1
  Element e = straighten({0, 2});
  CHECK(e == mono({2, 0}, Scalar::q_pow(2)) +
                 mono({1, 1}, Scalar::q_pow(2) - Scalar::one()));
}

TEST_CASE("straightening properties on random words") {
  std::mt19937 rng(400);
  for (int i = 0; i < 150; ++i) {
    FreeWord w = random_word(rng, 6, -5, 5);
    const Element lm = straighten(w, RewriteStrategy::leftmost);
    const Element rm = straighten(w, RewriteStrategy::rightmost);
    CHECK(lm == rm);  // empirical confluence of the two strategies

    FreeWord sorted = w;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    CHECK(lm.subst_v1() == Element::monomial(PBWMonomial(sorted)));

    const Grade g = grade_of(w);
    for (const auto& [m, c] : lm.terms()) {
      CHECK(m.grade() == g);
      CHECK(c.in_z_q2());
    }
  }
}

TEST_CASE("idempotence on ordered words") {
  std::mt19937 rng(77);
  for (int i = 0; i < 50; ++i) {
    FreeWord w = random_word(rng, 5, -4, 4);
    std::sort(w.begin(), w.end(), std::greater<int>());
    CHECK(straighten(w) == Element::monomial(PBWMonomial(w)));
  }
}

TEST_CASE("multiplication") {
  Element x = mono({3, -1}) + mono({2}, Scalar::q_pow(3));
  CHECK(multiply(Element::unit(), x) == x);
  CHECK(multiply(x, Element::unit()) == x);
  CHECK(multiply(mono({1}), mono({0})) == mono({1, 0}));
  CHECK(multiply(mono({0}), mono({1})) == mono({1, 0}, Scalar::q_pow(2)));

  std::mt19937 rng(12);
  for (int i = 0; i < 60; ++i) {
    FreeWord a = random_word(rng, 3, -3, 3), b = random_word(rng, 3, -3, 3);
    FreeWord ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(straighten(ab) == multiply(straighten(a), straighten(b)));
  }
  for (int i = 0; i < 25; ++i) {
    FreeWord a = random_word(rng, 2, -3, 3), b = random_word(rng, 2, -3, 3),
             c = random_word(rng, 2, -3, 3);
    Element ea = straighten(a), eb = straighten(b), ec = straighten(c);
    CHECK(multiply(multiply(ea, eb), ec) == multiply(ea, multiply(eb, ec)));
  }
}

TEST_CASE("grades") {
  CHECK(PBWMonomial(FreeWord{}).grade() == Grade{0, 0});
  CHECK(PBWMonomial({1, 0}).grade() == Grade{2, 1});
  CHECK(PBWMonomial({3, -3}).grade() == Grade{2, 0});
}

TEST_CASE("window enumeration") {
  auto w = enumerate_window(2, 0, -1, 1);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == PBWMonomial({0, 0}));
  CHECK(w[1] == PBWMonomial({1, -1}));
  CHECK(enumerate_window(1, 5, -4, 4).empty());
  auto empty_len = enumerate_window(0, 0, -4, 4);
  REQUIRE(empty_len.size() == 1);
  CHECK(empty_len[0].empty());
  CHECK_THROWS_AS(enumerate_window(1, 0, 2, -2), std::invalid_argument);

  // windows partition enumerate_pbw layer by layer
  auto all = enumerate_pbw(2, -2, 2);
  std::size_t counted = 1;  // the empty monomial
  for (int len = 1; len <= 2; ++len)
    for (long deg = -2L * len; deg <= 2L * len; ++deg)
      counted += enumerate_window(len, deg, -2, 2).size();
  CHECK(all.size() == counted);
}

TEST_CASE("monomial validation and literals") {
  CHECK_THROWS_AS(PBWMonomial({0, 1}), std::invalid_argument);
  CHECK(word_text({1, 0, -2}) == "[1,0,-2]");
  CHECK(word_text({}) == "[]");
  CHECK(parse_word("[1, 0, -2]") == FreeWord{1, 0, -2});
  CHECK(parse_word("[]") == FreeWord{});
  CHECK_THROWS_AS(parse_word("[1,,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("[1 2]"), std::invalid_argument);
}
