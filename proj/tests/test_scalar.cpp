#include <doctest.h>

#include <random>

#include "imverma/scalar.hpp"

using namespace imverma;

namespace {

Scalar S(const std::string& t) { return Scalar::parse(t); }

// small random scalar, optionally with c and a denominator
Scalar random_scalar(std::mt19937& rng, bool with_c, bool with_den) {
  Laurent num;
  const int terms = 1 + static_cast<int>(rng() % 3u);
  for (int i = 0; i < terms; ++i)
    num.add_term({static_cast<int>(rng() % 9u) - 4,
                  with_c ? 2 * (static_cast<int>(rng() % 3u) - 1) : 0},
                 Rational(static_cast<int>(rng() % 9u) - 4));
  if (num.is_zero()) num = Laurent::constant(Rational(1));
  if (!with_den) return Scalar::from_laurent(num);
  Laurent den = Laurent::constant(Rational(1 + rng() % 3u)) +
                Laurent::v_pow(1 + static_cast<int>(rng() % 4u));
  return Scalar::fraction(num, den);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == Scalar::one());
  CHECK(q_int(2) == S("v^-2 + v^2"));
  for (long n = -6; n <= 6; ++n) {
    CHECK(q_int(-n) == -q_int(n));
    CHECK(q_bracket(Rational(n)) == q_int(n));
  }
  // half-integer brackets live in the fraction field: [1/2] (v + v^-1) = 1
  Scalar half = q_bracket(Rational(1, 2));
  CHECK(half * S("v^-1 + v") == Scalar::one());
  CHECK_THROWS_AS(q_bracket(Rational(1, 3)), std::domain_error);
}

TEST_CASE("structure-constant tables") {
  CHECK(g_coeff(0) == S("v^4"));
  CHECK(g_coeff(1) == S("-1 + v^8"));
  CHECK(g_coeff(2) == S("-v^4 + v^12"));
  CHECK_THROWS_AS(g_coeff(-1), std::invalid_argument);
  CHECK(g_coeff_inverse(0) == S("v^-4"));
  CHECK(g_coeff_inverse(1) == S("-1 + v^-8"));
  // the tables are mutually inverse power series
  for (int n = 0; n <= 20; ++n) {
    Scalar conv;
    for (int r = 0; r <= n; ++r) conv += g_coeff(r) * g_coeff_inverse(n - r);
    CHECK(conv == (n == 0 ? Scalar::one() : Scalar::zero()));
  }
}

TEST_CASE("valuation") {
  CHECK(S("-1 + v^8").valuation() == 0);  // q^4 - 1
  CHECK((S("v^-1") * S("1 + v^4")).valuation() == -1);
  CHECK((Scalar::q_pow(2) / S("1 + v^4")).valuation() == 4);
  CHECK_THROWS_AS(Scalar::zero().valuation(), std::domain_error);
  CHECK_THROWS_AS(Scalar::gamma_pow(1).valuation(), std::domain_error);
  CHECK(Scalar::gamma_pow(1).subst_c1().valuation() == 0);
}

TEST_CASE("truncate windows") {
  auto t = S("1 + v^4").truncate(4);
  CHECK(!t.is_zero);
  CHECK(t.shift == 0);
  CHECK(t.coeffs == std::vector<Rational>{1, 0, 0, 0});

  auto geo = (Scalar::one() / (Scalar::one() - Scalar::q_pow(2))).truncate(8);
  CHECK(geo.coeffs == std::vector<Rational>{1, 0, 0, 0, 1, 0, 0, 0});

  auto c = S("-1 + v^8").truncate(4);
  CHECK(c.coeffs == std::vector<Rational>{-1, 0, 0, 0});

  CHECK(Scalar::zero().truncate(4).is_zero);

  auto neg = (S("v^-2") + Scalar::one()).truncate(4);
  CHECK(neg.shift == -2);
  CHECK(neg.coeffs == std::vector<Rational>{1, 0, 1, 0});
}

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Scalar a = random_scalar(rng, true, i % 2 == 0);
    Scalar b = random_scalar(rng, true, i % 3 == 0);
    Scalar c = random_scalar(rng, true, false);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == Scalar::zero());
  }
  for (int i = 0; i < 100; ++i) {
    Scalar a = random_scalar(rng, false, true);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == Scalar::one());
  }
  // c is a unit, so gamma-monomial numerators invert too
  Scalar g = Scalar::gamma_pow(2) * S("1 + v^4");
  CHECK(g * g.inverse() == Scalar::one());
  CHECK_THROWS_AS((Scalar::one() + Scalar::gamma_pow(1)).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero().inverse(), std::domain_error);
}

TEST_CASE("canonical text") {
  CHECK(S("-1 + v^8").text() == "-1 + v^8");
  CHECK(Scalar::zero().text() == "0");
  CHECK((Scalar::from_rational(Rational(1, 2)) * Scalar::v_pow(2)).text() == "1/2*v^2");
  CHECK((Scalar::gamma_pow(1) * Scalar::v_pow(-3)).text() == "v^-3*c^2");
  CHECK(S("v").text() == "v");
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng, i % 2 == 0, i % 3 == 0);
    CHECK(Scalar::parse(a.text()) == a);
  }
  CHECK_THROWS_AS(Scalar::parse("v^"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(""), std::invalid_argument);
}

TEST_CASE("substitutions") {
  Scalar a = S("-1 + v^8");
  CHECK(a.subst_v1().is_zero());
  Scalar g = Scalar::gamma_pow(3) * Scalar::q_pow(1);
  CHECK(g.subst_c1() == Scalar::q_pow(1));
  CHECK(g.subst_v1() == Scalar::gamma_pow(3));
  CHECK(Scalar::q_pow(2).subst_q_inverse() == Scalar::q_pow(-2));
  CHECK_THROWS_AS((Scalar::one() / (Scalar::one() - Scalar::q_pow(1))).subst_v1(),
                  std::domain_error);
}

TEST_CASE("Z[q^2] membership") {
  CHECK(S("-1 + v^8").in_z_q2());
  CHECK(S("1 + v^4").in_z_q2());
  CHECK(!S("v^2").in_z_q2());
  CHECK(!S("v^-4").in_z_q2());
  CHECK(!S("1/2*v^4").in_z_q2());
  CHECK(!Scalar::gamma_pow(1).in_z_q2());
}

TEST_CASE("fraction canonical form") {
  // denominator constant term is 1 and the fraction is reduced
  Scalar s = Scalar::fraction(Laurent::q_pow(2) - Laurent::q_pow(1),
                              Laurent::q_pow(1).scaled(Rational(3)));
  CHECK(s.is_laurent());  // (q^2 - q)/3q reduces to a Laurent value
  Scalar t = Scalar::fraction(Laurent::constant(Rational(2)),
                              Laurent::constant(Rational(2)) + Laurent::v_pow(2).scaled(Rational(2)));
  CHECK(t.denominator() == UPoly{Rational(1), Rational(0), Rational(1)});
  CHECK(t.text() == "(1)/(1 + v^2)");
  CHECK(Scalar::parse(t.text()) == t);
}
