#include <doctest.h>

#include <random>

#include "imverma/form.hpp"

using namespace imverma;

namespace {

PBWMonomial M(std::initializer_list<int> idx) { return PBWMonomial(FreeWord(idx)); }

}  // namespace

TEST_CASE("pairing base cases") {
  CHECK(pair_form(M({}), M({})) == Scalar::one());
  for (int m = -3; m <= 3; ++m)
    for (int k = -3; k <= 3; ++k)
      CHECK(pair_form(M({m}), M({k})) ==
            (m == k ? Scalar::one() : Scalar::zero()));
  CHECK(pair_form(M({0, 0}), M({0, 0})) == Scalar::one() + Scalar::q_pow(2));
  CHECK(pair_form(M({1, -1}), M({0, 0})).is_zero());
}

TEST_CASE("length-2 closed form") {
  CHECK(pair_closed_n2(0, 0, 0, 0) == Scalar::one() + Scalar::q_pow(2));
  CHECK(pair_closed_n2(1, -1, 1, -1) == Scalar::one());
  CHECK(pair_closed_n2(1, -1, 0, 0).is_zero());
  CHECK_THROWS_AS(pair_closed_n2(0, 1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pair_closed_n2(1, 0, 0, 0), std::invalid_argument);

  for (int m1 = -4; m1 <= 4; ++m1)
    for (int m2 = -4; m2 <= m1; ++m2)
      for (int k1 = -4; k1 <= 4; ++k1)
        for (int k2 = -4; k2 <= k1; ++k2)
          if (m1 + m2 == k1 + k2)
            CHECK(pair_form(M({m1, m2}), M({k1, k2})) ==
                  pair_closed_n2(m1, m2, k1, k2));
}

TEST_CASE("symmetry on random same-grade elements") {
  std::mt19937 rng(99);
  const auto monos = enumerate_window(3, 1, -2, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Element a, b;
    for (const auto& m : monos) {
      a.add_term(m, Scalar::from_int(static_cast<int>(rng() % 5u) - 2));
      b.add_term(m, Scalar::from_int(static_cast<int>(rng() % 5u) - 2) *
                        Scalar::q_pow(static_cast<int>(rng() % 3u)));
    }
    CHECK(pair_form(a, b) == pair_form(b, a));
  }
}

TEST_CASE("cross-grade pairings vanish exactly") {
  const auto monos = enumerate_pbw(3, -2, 2);
  for (const auto& a : monos)
    for (const auto& b : monos)
      if (a.grade() != b.grade()) CHECK(pair_form(a, b).is_zero());
}

TEST_CASE("pairings land in Z[q^2]") {
  for (const auto& a : enumerate_pbw(3, -2, 2))
    for (const auto& b : enumerate_pbw(3, -2, 2))
      CHECK(pair_form(a, b).in_z_q2());
}

TEST_CASE("gram matrices") {
  const GramMatrix g1 = gram({1, 2, -3, 3});
  REQUIRE(g1.size() == 1);
  CHECK(g1.entries[0][0] == Scalar::one());

  const GramMatrix g2 = gram({2, 0, -1, 1});
  REQUIRE(g2.size() == 2);
  CHECK(g2.basis[0] == M({0, 0}));
  CHECK(g2.basis[1] == M({1, -1}));
  CHECK(g2.entries[0][0] == Scalar::one() + Scalar::q_pow(2));
  CHECK(g2.entries[1][1] == Scalar::one());
  CHECK(g2.entries[0][1].is_zero());
  CHECK(g2.entries[1][0].is_zero());

  const GramMatrix empty = gram({2, 9, -1, 1});
  CHECK(empty.size() == 0);
  CHECK(gram_det(empty) == Scalar::one());

  const GramMatrix g3 = gram({3, 0, -2, 2});
  const int n = g3.size();
  REQUIRE(n > 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(g3.entries[i][j] == g3.entries[j][i]);
      const Scalar d = i == j ? g3.entries[i][j] - Scalar::one() : g3.entries[i][j];
      if (!d.is_zero()) CHECK(d.valuation() >= 4);  // congruent to I mod q^2
    }
  const Scalar det = gram_det(g3);
  CHECK(det.valuation() == 0);
  CHECK(det.numerator().coeff(0, 0) == 1);

  const auto reduced = gram_mod_q2(g3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(reduced[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("pairing with zero and mixed grades") {
  CHECK(pair_form(Element::zero(), Element::unit()).is_zero());
  // mixed-grade elements pair grade by grade
  Element mixed = Element::monomial(M({0})) + Element::monomial(M({1, 0}));
  CHECK(pair_form(mixed, Element::monomial(M({0}))) == Scalar::one());
  CHECK(pair_form(mixed, mixed) ==
        Scalar::one() + pair_form(M({1, 0}), M({1, 0})));
}
