#include "imverma/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace imverma {

namespace {

// c-degree slices of a Laurent shifted to v-valuation base, as polynomials
std::map<int, UPoly> slices_at_base(const Laurent& l, int base_v) {
  std::map<int, UPoly> out;
  for (const auto& [e, coeff] : l.terms()) {
    UPoly& p = out[e.c];
    std::size_t idx = static_cast<std::size_t>(e.v - base_v);
    if (p.size() <= idx) p.resize(idx + 1, Rational(0));
    p[idx] = coeff;
  }
  return out;
}

Laurent laurent_from_slices(const std::map<int, UPoly>& slices, int base_v) {
  Laurent out;
  for (const auto& [ec, p] : slices)
    for (std::size_t i = 0; i < p.size(); ++i)
      out.add_term({base_v + static_cast<int>(i), ec}, p[i]);
  return out;
}

Laurent upoly_to_laurent(const UPoly& p) {
  Laurent out;
  for (std::size_t i = 0; i < p.size(); ++i)
    out.add_term({static_cast<int>(i), 0}, p[i]);
  return out;
}

}  // namespace

Scalar Scalar::one() { return from_rational(Rational(1)); }

Scalar Scalar::from_rational(const Rational& r) {
  Scalar s;
  s.num_ = Laurent::constant(r);
  return s;
}

Scalar Scalar::from_laurent(Laurent l) {
  Scalar s;
  s.num_ = std::move(l);
  return s;
}

Scalar Scalar::fraction(Laurent num, Laurent den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (!den.is_c_free())
    throw std::domain_error("denominators must be free of c");
  int dv = *den.min_v();
  Scalar s;
  s.num_ = num.shifted({-dv, 0});
  auto dslices = slices_at_base(den, dv);
  s.den_ = dslices.begin()->second;
  s.reduce();
  return s;
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = {Rational(1)};
    return;
  }
  // shift the denominator's v-valuation into the numerator
  std::size_t dval = 0;
  while (dval < den_.size() && den_[dval] == 0) ++dval;
  if (dval > 0) {
    den_.erase(den_.begin(), den_.begin() + static_cast<long>(dval));
    num_ = num_.shifted({-static_cast<int>(dval), 0});
  }
  if (upoly_deg(den_) > 0) {
    int base = *num_.min_v();
    auto slices = slices_at_base(num_, base);
    UPoly content;
    for (const auto& [_, p] : slices) {
      content = upoly_gcd(content, p);
      if (upoly_deg(content) == 0) break;
    }
    UPoly g = upoly_gcd(content, den_);
    if (upoly_deg(g) > 0) {
      UPoly q;
      for (auto& [ec, p] : slices) {
        if (!upoly_divides(g, p, q)) throw std::logic_error("gcd division failed");
        p = q;
      }
      if (!upoly_divides(g, den_, q)) throw std::logic_error("gcd division failed");
      den_ = q;
      num_ = laurent_from_slices(slices, base);
      // the quotient may have picked up a new v-valuation
      std::size_t dv2 = 0;
      while (dv2 < den_.size() && den_[dv2] == 0) ++dv2;
      if (dv2 > 0) {
        den_.erase(den_.begin(), den_.begin() + static_cast<long>(dv2));
        num_ = num_.shifted({-static_cast<int>(dv2), 0});
      }
    }
  }
  if (den_[0] != 1) {
    Rational lead = den_[0];
    for (auto& c : den_) c /= lead;
    num_ = num_.scaled(Rational(1) / lead);
  }
}

bool Scalar::is_one() const {
  return is_laurent() && num_ == Laurent::constant(Rational(1));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.num_ = -s.num_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar s;
  if (den_ == o.den_) {
    s.num_ = num_ + o.num_;
    s.den_ = den_;
    if (upoly_is_one(den_)) {
      return s;  // Laurent fast path, already canonical
    }
    s.reduce();
    return s;
  }
  s.num_ = num_ * upoly_to_laurent(o.den_) + o.num_ * upoly_to_laurent(den_);
  s.den_ = upoly_mul(den_, o.den_);
  s.reduce();
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar s;
  s.num_ = num_ * o.num_;
  if (upoly_is_one(den_) && upoly_is_one(o.den_)) return s;
  s.den_ = upoly_mul(den_, o.den_);
  s.reduce();
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  int ec0 = num_.terms().begin()->first.c;
  for (const auto& [e, _] : num_.terms())
    if (e.c != ec0)
      throw std::domain_error(
          "inverse requires a c-monomial times a c-free numerator");
  int nv = *num_.min_v();
  auto slices = slices_at_base(num_.shifted({0, -ec0}), nv);
  Laurent newnum =
      upoly_to_laurent(den_).shifted({-nv, -ec0});
  Scalar s;
  s.num_ = newnum;
  s.den_ = slices.begin()->second;
  s.reduce();
  return s;
}

Scalar Scalar::subst_c1() const {
  Scalar s;
  s.num_ = num_.subst_c1();
  s.den_ = den_;
  s.reduce();
  return s;
}

Scalar Scalar::subst_v1() const {
  Rational d = upoly_eval(den_, Rational(1));
  if (d == 0) throw std::domain_error("denominator vanishes at v = 1");
  Scalar s;
  s.num_ = num_.subst_v1().scaled(Rational(1) / d);
  return s;
}

Scalar Scalar::subst_q_inverse() const {
  Laurent den_l;
  for (std::size_t i = 0; i < den_.size(); ++i)
    den_l.add_term({-static_cast<int>(i), 0}, den_[i]);
  return fraction(num_.subst_q_inverse(), den_l);
}

int Scalar::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero is undefined");
  if (!is_c_free())
    throw std::domain_error("valuation requires c-free input (specialize c first)");
  return *num_.min_v();  // denominator has valuation 0 by canonical form
}

Truncation Scalar::truncate(int n) const {
  Truncation t;
  if (is_zero()) {
    t.is_zero = true;
    return t;
  }
  if (!is_c_free())
    throw std::domain_error("truncate requires c-free input (specialize c first)");
  if (n < 0) throw std::invalid_argument("negative window");
  int val = valuation();
  t.shift = std::min(val, 0);
  // numerator of v^{-shift} * s as a polynomial (valuation val - shift >= 0)
  UPoly numpoly;
  for (const auto& [e, c] : num_.terms()) {
    std::size_t idx = static_cast<std::size_t>(e.v - t.shift);
    if (idx >= static_cast<std::size_t>(n)) continue;
    if (numpoly.size() <= idx) numpoly.resize(idx + 1, Rational(0));
    numpoly[idx] = c;
  }
  UPoly inv = upoly_series_inverse(den_, n);
  t.coeffs.assign(static_cast<std::size_t>(n), Rational(0));
  for (int k = 0; k < n; ++k) {
    Rational acc(0);
    for (int j = 0; j <= k && j < static_cast<int>(numpoly.size()); ++j)
      acc += numpoly[static_cast<std::size_t>(j)] *
             inv[static_cast<std::size_t>(k - j)];
    t.coeffs[static_cast<std::size_t>(k)] = acc;
  }
  return t;
}

bool Scalar::in_z_q2() const {
  if (!is_laurent()) return false;
  for (const auto& [e, c] : num_.terms()) {
    if (e.c != 0 || e.v < 0 || e.v % 4 != 0) return false;
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// text form

namespace {

void append_term(std::string& out, Exponents e, const Rational& coeff,
                 bool first) {
  bool neg = coeff < 0;
  Rational a = neg ? Rational(-coeff) : coeff;
  std::string mono;
  if (e.v != 0) mono = e.v == 1 ? "v" : "v^" + std::to_string(e.v);
  if (e.c != 0) {
    if (!mono.empty()) mono += "*";
    mono += e.c == 1 ? "c" : "c^" + std::to_string(e.c);
  }
  std::string body;
  if (mono.empty())
    body = rational_text(a);
  else if (a == 1)
    body = mono;
  else
    body = rational_text(a) + "*" + mono;
  if (first)
    out += (neg ? "-" : "") + body;
  else
    out += (neg ? " - " : " + ") + body;
}

std::string laurent_text(const Laurent& l) {
  if (l.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : l.terms()) {
    append_term(out, e, c, first);
    first = false;
  }
  return out;
}

struct Lexer {
  explicit Lexer(const std::string& s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_++] : '\0';
  }
  Integer number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("digit expected");
    return Integer(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad scalar text '" + s_ + "' at position " +
                                std::to_string(pos_) + ": " + why);
  }
  const std::string& s_;
  std::size_t pos_ = 0;
};

int parse_exponent(Lexer& lx) {
  if (lx.peek() != '^') return 1;
  lx.get();
  int sign = 1;
  if (lx.peek() == '-') {
    lx.get();
    sign = -1;
  }
  Integer n = lx.number();
  return sign * static_cast<int>(n);
}

Laurent parse_laurent_body(Lexer& lx, char stop) {
  Laurent out;
  bool first = true;
  while (true) {
    char p = lx.peek();
    if (p == '\0' || p == stop) {
      if (first) lx.fail("empty expression");
      break;
    }
    int sign = 1;
    if (p == '+' || p == '-') {
      lx.get();
      sign = p == '-' ? -1 : 1;
    } else if (!first) {
      lx.fail("expected + or -");
    }
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      Integer num = lx.number();
      Integer den(1);
      if (lx.peek() == '/') {
        lx.get();
        den = lx.number();
        if (den == 0) lx.fail("zero denominator");
      }
      coeff = Rational(num, den);
      have_coeff = true;
    }
    Exponents e{0, 0};
    bool expect_var = !have_coeff;
    if (have_coeff && lx.peek() == '*') {
      lx.get();
      expect_var = true;
    }
    if (expect_var || lx.peek() == 'v' || lx.peek() == 'c') {
      char var = lx.peek();
      if (var != 'v' && var != 'c') {
        if (!have_coeff) lx.fail("term expected");
      } else {
        lx.get();
        int ex = parse_exponent(lx);
        (var == 'v' ? e.v : e.c) = ex;
        if (lx.peek() == '*') {
          lx.get();
          char var2 = lx.get();
          if (var2 != 'v' && var2 != 'c') lx.fail("v or c expected");
          if (var2 == var) lx.fail("repeated variable in term");
          int ex2 = parse_exponent(lx);
          (var2 == 'v' ? e.v : e.c) = ex2;
        }
      }
    }
    out.add_term(e, Rational(sign) * coeff);
    first = false;
  }
  return out;
}

}  // namespace

std::string Scalar::text() const {
  if (is_laurent()) return laurent_text(num_);
  Laurent den_l;
  for (std::size_t i = 0; i < den_.size(); ++i)
    den_l.add_term({static_cast<int>(i), 0}, den_[i]);
  return "(" + laurent_text(num_) + ")/(" + laurent_text(den_l) + ")";
}

Scalar Scalar::parse(const std::string& text) {
  Lexer lx(text);
  if (lx.peek() == '(') {
    lx.get();
    Laurent num = parse_laurent_body(lx, ')');
    if (lx.get() != ')') lx.fail("expected )");
    if (lx.get() != '/') lx.fail("expected /");
    if (lx.get() != '(') lx.fail("expected (");
    Laurent den = parse_laurent_body(lx, ')');
    if (lx.get() != ')') lx.fail("expected )");
    if (lx.peek() != '\0') lx.fail("trailing input");
    return fraction(num, den);
  }
  Laurent l = parse_laurent_body(lx, '\0');
  return from_laurent(l);
}

// ---------------------------------------------------------------------------
// quantum integers and structure constants

Scalar q_int(long n) {
  if (n == 0) return Scalar::zero();
  if (n < 0) return -q_int(-n);
  Laurent l;
  for (long j = 0; j < n; ++j) l.add_term({static_cast<int>(2 * (n - 1 - 2 * j)), 0}, Rational(1));
  return Scalar::from_laurent(l);
}

Scalar q_bracket(const Rational& x) {
  Rational t2 = x * 2;
  if (denominator(t2) != 1)
    throw std::domain_error("[x] needs x in (1/2)Z, got " + rational_text(x));
  long t = static_cast<long>(numerator(t2));
  if (t == 0) return Scalar::zero();
  Laurent num = Laurent::v_pow(static_cast<int>(t)) - Laurent::v_pow(static_cast<int>(-t));
  Laurent den = Laurent::v_pow(2) - Laurent::v_pow(-2);
  return Scalar::fraction(num, den);
}

Scalar g_coeff(long r) {
  if (r < 0) throw std::invalid_argument("g_coeff needs r >= 0");
  if (r == 0) return Scalar::q_pow(2);
  Laurent l = (Laurent::q_pow(4) - Laurent::constant(Rational(1))) *
              Laurent::q_pow(static_cast<int>(2 * (r - 1)));
  return Scalar::from_laurent(l);
}

Scalar g_coeff_inverse(long r) { return g_coeff(r).subst_q_inverse(); }

}  // namespace imverma
