#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imverma/laurent.hpp"
#include "imverma/upoly.hpp"

namespace imverma {

/// v-adic series window of a Scalar (see Scalar::truncate).
struct Truncation {
  bool is_zero = false;
  int shift = 0;                   // valuation when negative, else 0
  std::vector<Rational> coeffs;    // coefficients of v^0..v^{N-1} of v^{-shift} * s
};

/// Exact rational function in v (v^2 = q) and the central c (c^2 = gamma).
///
/// Canonical form: numerator is a Laurent polynomial in (v, c); the
/// denominator is a polynomial in v alone with constant term 1 (its
/// v-valuation and lowest coefficient are shifted into the numerator) and
/// gcd(numerator, denominator) = 1, so equality is structural. All
/// arithmetic is exact; there is no floating point anywhere.
class Scalar {
 public:
  Scalar() = default;  // zero

  static Scalar zero() { return Scalar(); }
  static Scalar one();
  static Scalar from_rational(const Rational& r);
  static Scalar from_int(long n) { return from_rational(Rational(n)); }
  static Scalar from_laurent(Laurent l);
  static Scalar v_pow(int e) { return from_laurent(Laurent::v_pow(e)); }
  static Scalar q_pow(int e) { return from_laurent(Laurent::q_pow(e)); }
  static Scalar gamma_pow(int e) { return from_laurent(Laurent::gamma_pow(e)); }
  static Scalar fraction(Laurent num, Laurent den);  // den nonzero, c-free

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return upoly_is_one(den_); }
  bool is_c_free() const { return num_.is_c_free(); }
  const Laurent& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  bool operator==(const Scalar& o) const = default;

  /// Multiplicative inverse. The numerator must be a c-monomial times a
  /// c-free Laurent polynomial (c is a unit); throws std::domain_error
  /// otherwise or on zero.
  Scalar inverse() const;

  Scalar subst_c1() const;
  /// Evaluate v -> 1; throws std::domain_error if the denominator vanishes.
  Scalar subst_v1() const;
  /// v -> v^{-1} (q -> q^{-1}); c fixed.
  Scalar subst_q_inverse() const;

  /// Order of vanishing in v at 0. Requires s != 0 and c-free.
  int valuation() const;

  /// Exact v-adic expansion window of length n (see Truncation). Requires
  /// c-free. Zero input yields {is_zero = true}.
  Truncation truncate(int n) const;

  /// True when the value lies in Z[q^2]: integer coefficients, c-free,
  /// v-exponents nonnegative multiples of 4.
  bool in_z_q2() const;

  /// Canonical text, e.g. "-1 + v^8" for q^4 - 1; a true fraction prints as
  /// "(num)/(den)". parse() accepts the same grammar.
  std::string text() const;
  static Scalar parse(const std::string& text);

 private:
  void reduce();
  Laurent num_;          // zero <=> empty
  UPoly den_{Rational(1)};  // constant term always 1
};

/// Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n].
Scalar q_int(long n);

/// Generalized bracket [x] for x in (1/2)Z (exponents of v stay integral);
/// throws std::domain_error for other rationals.
Scalar q_bracket(const Rational& x);

/// Structure constants of the lowering-operator recursions: g_coeff(0) = q^2,
/// g_coeff(r) = (q^4 - 1) q^{2(r-1)} for r > 0. Taylor coefficients at t = 0
/// of (q^-2 t - 1)/(t - q^-2). Negative r rejected.
Scalar g_coeff(long r);

/// The inverse power series' coefficients: Taylor coefficients at t = 0 of
/// (q^2 t - 1)/(t - q^2); equals g_coeff(r) with q -> q^-1. The two tables
/// convolve to the delta sequence.
Scalar g_coeff_inverse(long r);

}  // namespace imverma
