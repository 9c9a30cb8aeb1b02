#pragma once

#include <functional>
#include <map>

#include "imverma/monomial.hpp"
#include "imverma/scalar.hpp"

namespace imverma {

/// Finite linear combination of normal-ordered monomials with Scalar
/// coefficients; zero coefficients pruned. Iteration order is the monomial
/// lexicographic order.
class Element {
 public:
  Element() = default;

  static Element zero() { return {}; }
  static Element unit() { return monomial(PBWMonomial{}); }
  static Element monomial(PBWMonomial m, Scalar coeff = Scalar::one());

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(const PBWMonomial& m) const;

  void add_term(const PBWMonomial& m, const Scalar& c);

  Element operator-() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  bool operator==(const Element& o) const = default;

  Element scaled(const Scalar& s) const;
  Element subst_c1() const;
  Element subst_v1() const;

 private:
  std::map<PBWMonomial, Scalar> terms_;
};

enum class RewriteStrategy { leftmost, rightmost };

/// Rewrite a free word into normal order with the two quadratic relations
///   x_k x_{k+1} = q^2 x_{k+1} x_k
///   x_l x_{k+1} = q^2 x_{k+1} x_l - x_k x_{l+1} + q^2 x_{l+1} x_k   (l < k).
/// Every step strictly decreases the (sum of squared indices, ascending
/// inversions) measure; a violation throws std::logic_error. The leftmost
/// strategy is the canonical evaluator and is memoized.
Element straighten(const FreeWord& w,
                   RewriteStrategy strategy = RewriteStrategy::leftmost);

/// Left multiplication by one generator, renormalized.
Element left_mul(int index, const Element& e);

/// Algebra product: concatenate words, then straighten. Bilinear and
/// grade-additive per term.
Element multiply(const Element& a, const Element& b);

}  // namespace imverma
