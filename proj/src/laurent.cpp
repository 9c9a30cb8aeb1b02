#include "imverma/laurent.hpp"

namespace imverma {

Laurent Laurent::constant(const Rational& r) { return term({0, 0}, r); }
Laurent Laurent::v_pow(int e) { return term({e, 0}, Rational(1)); }
Laurent Laurent::q_pow(int e) { return term({2 * e, 0}, Rational(1)); }
Laurent Laurent::gamma_pow(int e) { return term({0, 2 * e}, Rational(1)); }

Laurent Laurent::term(Exponents e, const Rational& coeff) {
  Laurent l;
  if (coeff != 0) l.terms_.emplace(e, coeff);
  return l;
}

bool Laurent::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

bool Laurent::is_c_free() const {
  for (const auto& [e, _] : terms_)
    if (e.c != 0) return false;
  return true;
}

Rational Laurent::coeff(int ev, int ec) const {
  auto it = terms_.find({ev, ec});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> Laurent::min_v() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.v;
}

std::optional<int> Laurent::max_v() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.v;
}

void Laurent::add_term(Exponents e, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      r.add_term({e1.v + e2.v, e1.c + e2.c}, c1 * c2);
  return r;
}

Laurent Laurent::scaled(const Rational& s) const {
  Laurent r;
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

Laurent Laurent::shifted(Exponents by) const {
  Laurent r;
  for (const auto& [e, c] : terms_)
    r.terms_.emplace(Exponents{e.v + by.v, e.c + by.c}, c);
  return r;
}

Laurent Laurent::subst_c1() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add_term({e.v, 0}, c);
  return r;
}

Laurent Laurent::subst_v1() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add_term({0, e.c}, c);
  return r;
}

Laurent Laurent::subst_q_inverse() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{-e.v, e.c}, c);
  return r;
}

}  // namespace imverma
