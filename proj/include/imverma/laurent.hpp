#pragma once

#include <map>
#include <optional>
#include <vector>

#include "imverma/rational.hpp"

namespace imverma {

/// Exponent pair of a Laurent term a * v^v_exp * c^c_exp, with v^2 = q and
/// c^2 = gamma. Ordered by v first so map iteration is ascending v-order.
struct Exponents {
  int v = 0;
  int c = 0;
  auto operator<=>(const Exponents&) const = default;
};

/// Laurent polynomial in (v, c) with exact rational coefficients.
/// Immutable value semantics; zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;

  static Laurent constant(const Rational& r);
  static Laurent v_pow(int e);            // v^e
  static Laurent q_pow(int e);            // q^e = v^{2e}
  static Laurent gamma_pow(int e);        // gamma^e = c^{2e}
  static Laurent term(Exponents e, const Rational& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_c_free() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of v^{ev} c^{ec} (zero if absent).
  Rational coeff(int ev, int ec = 0) const;

  /// Least v-exponent among nonzero terms; empty for the zero polynomial.
  std::optional<int> min_v() const;
  std::optional<int> max_v() const;

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
  bool operator==(const Laurent& o) const = default;

  Laurent scaled(const Rational& r) const;
  Laurent shifted(Exponents by) const;  // multiply by v^by.v c^by.c

  Laurent subst_c1() const;             // c -> 1
  Laurent subst_v1() const;             // v -> 1 (result in c only)
  Laurent subst_q_inverse() const;      // v -> v^{-1}, c fixed

  void add_term(Exponents e, const Rational& coeff);

 private:
  std::map<Exponents, Rational> terms_;
};

}  // namespace imverma
