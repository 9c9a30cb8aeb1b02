#include "imverma/verma.hpp"

#include <map>
#include <stdexcept>

#include "imverma/linsolve.hpp"

namespace imverma {

HighestWeight::HighestWeight(Rational lambda_h, Rational lambda_d, bool boundary)
    : h(std::move(lambda_h)), d(std::move(lambda_d)), boundary_study(boundary) {
  if (h == 0 && !boundary_study)
    throw std::invalid_argument(
        "lambda(h) = 0 requires boundary-study mode");
}

TermWeight term_weight(const HighestWeight& lambda, const PBWMonomial& m) {
  const Grade g = m.grade();
  return {lambda.h - 2 * g.length, lambda.d + g.degree};
}

ModuleVector act_xminus(int m, const ModuleVector& v) {
  return {left_mul(m, v.payload()), v.lambda()};
}

ModuleVector act_omega(int k, const ModuleVector& v) {
  return {omega_psi(k, v.payload(), Gamma::one), v.lambda()};
}

ModuleVector act_omega_phi(int k, const ModuleVector& v) {
  return {omega_phi(k, v.payload(), Gamma::one), v.lambda()};
}

namespace {

// q^e for a half-integral exponent e (the K-eigenvalues q^{lambda(h)-2n})
Scalar q_power(const Rational& e) {
  const Rational ve = e * 2;
  if (boost::multiprecision::denominator(ve) != 1)
    throw std::domain_error("K-eigenvalue needs lambda(h) in (1/2)Z, got exponent " +
                            rational_text(e));
  return Scalar::v_pow(static_cast<int>(boost::multiprecision::numerator(ve)));
}

Element heisenberg_element(int l, const Element& e) {
  Element out;
  const Scalar shift_coeff =
      q_int(2L * l) * Scalar::from_rational(Rational(-1) / l);
  for (const auto& [mono, c] : e.terms()) {
    if (mono.empty()) continue;  // the modes kill the generator
    const PBWMonomial rest = mono.tail();
    const Element sub = heisenberg_element(l, Element::monomial(rest));
    if (!sub.is_zero()) out += left_mul(mono.head(), sub).scaled(c);
    out += left_mul(l + mono.head(), Element::monomial(rest)).scaled(c * shift_coeff);
  }
  return out;
}

Element k_weight(const Element& e, const Rational& lambda_h, bool inverse) {
  Element out;
  for (const auto& [mono, c] : e.terms()) {
    Rational expo = lambda_h - 2 * mono.length();
    if (inverse) expo = -expo;
    out.add_term(mono, c * q_power(expo));
  }
  return out;
}

// coefficient of z^{-j} in exp(sign (q - q^-1) sum_{a>0} h_{sign a} z^{-a}),
// iteratively: F_t = (1/t) sum_{a=1}^{t} a sign (q-q^-1) h_{sign a} F_{t-a}
Element exp_tail(int j, const Element& e, int sign) {
  const Scalar qdiff = Scalar::v_pow(2) - Scalar::v_pow(-2);
  std::vector<Element> f;
  f.push_back(e);
  for (int t = 1; t <= j; ++t) {
    Element acc;
    for (int a = 1; a <= t; ++a) {
      const Element& sub = f[static_cast<std::size_t>(t - a)];
      if (sub.is_zero()) continue;
      acc += heisenberg_element(sign * a, sub)
                 .scaled(qdiff * Scalar::from_rational(Rational(sign * a, t)));
    }
    f.push_back(std::move(acc));
  }
  return f.back();
}

Element cartan_psi_element(int j, const Element& e, const Rational& lambda_h) {
  if (j < 0) return Element::zero();
  if (j == 0) return k_weight(e, lambda_h, false);
  return k_weight(exp_tail(j, e, +1), lambda_h, false);
}

Element cartan_phi_element(int j, const Element& e, const Rational& lambda_h) {
  if (j > 0) return Element::zero();
  if (j == 0) return k_weight(e, lambda_h, true);
  return k_weight(exp_tail(-j, e, -1), lambda_h, true);
}

Element xplus_element(int k, const Element& e, const Rational& lambda_h) {
  static const Scalar qdiff_inv =
      (Scalar::v_pow(2) - Scalar::v_pow(-2)).inverse();
  Element out;
  for (const auto& [mono, c] : e.terms()) {
    if (mono.empty()) continue;  // x+ annihilates the generator
    const PBWMonomial rest = mono.tail();
    const Element tail = Element::monomial(rest);
    const Element sub = xplus_element(k, tail, lambda_h);
    if (!sub.is_zero()) out += left_mul(mono.head(), sub).scaled(c);
    const int j = k + mono.head();
    Element comm =
        cartan_psi_element(j, tail, lambda_h) - cartan_phi_element(j, tail, lambda_h);
    if (!comm.is_zero()) out += comm.scaled(c * qdiff_inv);
  }
  return out;
}

}  // namespace

ModuleVector act_heisenberg(int l, const ModuleVector& v) {
  if (l == 0) throw std::invalid_argument("Heisenberg modes have l != 0");
  return {heisenberg_element(l, v.payload()), v.lambda()};
}

ModuleVector act_cartan_psi(int j, const ModuleVector& v) {
  return {cartan_psi_element(j, v.payload(), v.lambda().h), v.lambda()};
}

ModuleVector act_cartan_phi(int j, const ModuleVector& v) {
  return {cartan_phi_element(j, v.payload(), v.lambda().h), v.lambda()};
}

ModuleVector act_xplus(int k, const ModuleVector& v) {
  return {xplus_element(k, v.payload(), v.lambda().h), v.lambda()};
}

int local_nilpotency_exponent(int k, const ModuleVector& v) {
  if (v.is_zero())
    throw std::invalid_argument("nilpotency exponent of the zero vector");
  int max_len = 0;
  for (const auto& [m, _] : v.payload().terms())
    max_len = std::max(max_len, m.length());
  ModuleVector cur = v;
  int n = 0;
  while (!cur.is_zero()) {
    cur = act_xplus(k, cur);
    ++n;
    if (n > max_len + 1)
      throw std::logic_error("nilpotency bound length+1 exceeded");
  }
  return n;
}

namespace {

// lcm of denominators / primitive-content normalization over the coordinates
void normalize_primitive(std::vector<Scalar>& coords) {
  UPoly den_lcm{Rational(1)};
  for (const auto& s : coords) {
    if (s.is_zero()) continue;
    UPoly g = upoly_gcd(den_lcm, s.denominator());
    UPoly q;
    upoly_divides(g, s.denominator(), q);
    den_lcm = upoly_mul(den_lcm, q);
  }
  Scalar mult = Scalar::from_laurent([&] {
    Laurent l;
    for (std::size_t i = 0; i < den_lcm.size(); ++i)
      l.add_term({static_cast<int>(i), 0}, den_lcm[i]);
    return l;
  }());
  Integer num_gcd = 0, den_lcm_r = 1;
  UPoly poly_content;
  int min_val = 0;
  bool any = false;
  std::vector<Scalar> cleared;
  for (auto& s : coords) {
    Scalar t = s * mult;
    if (!t.is_laurent())
      throw std::logic_error("denominator clearing failed");
    cleared.push_back(t);
    if (t.is_zero()) continue;
    int val = *t.numerator().min_v();
    min_val = any ? std::min(min_val, val) : val;
    any = true;
    UPoly p(static_cast<std::size_t>(*t.numerator().max_v() - val + 1), Rational(0));
    for (const auto& [e, c] : t.numerator().terms()) {
      p[static_cast<std::size_t>(e.v - val)] = c;
      num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
      den_lcm_r = boost::multiprecision::lcm(den_lcm_r, denominator(c));
    }
    poly_content = upoly_gcd(poly_content, p);
  }
  if (!any) return;
  Laurent divisor_l;
  for (std::size_t i = 0; i < poly_content.size(); ++i)
    divisor_l.add_term({min_val + static_cast<int>(i), 0},
                       poly_content[i] * Rational(num_gcd, den_lcm_r));
  Scalar divisor = Scalar::from_laurent(divisor_l);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Scalar t = cleared[i] / divisor;
    if (!t.is_laurent()) throw std::logic_error("content division failed");
    coords[i] = t;
  }
  for (const auto& s : coords) {
    if (s.is_zero()) continue;
    auto first = s.numerator().terms().begin();
    if (first->second < 0)
      for (auto& c : coords) c = -c;
    break;
  }
}

}  // namespace

std::vector<ModuleVector> find_singular_vectors(const WeightWindow& window,
                                                const HighestWeight& lambda) {
  std::vector<ModuleVector> out;
  if (window.length <= 0) return out;
  const auto basis = enumerate_window(window);
  if (basis.empty()) return out;
  const int ncols = static_cast<int>(basis.size());

  std::vector<std::vector<Scalar>> rows;
  for (int k = -window.hi - 1; k <= -window.lo + 1; ++k) {
    std::map<PBWMonomial, std::vector<Scalar>> by_target;
    for (int j = 0; j < ncols; ++j) {
      Element img = xplus_element(
          k, Element::monomial(basis[static_cast<std::size_t>(j)]), lambda.h);
      for (const auto& [tm, c] : img.terms()) {
        auto [it, _] = by_target.try_emplace(
            tm, std::vector<Scalar>(static_cast<std::size_t>(ncols)));
        it->second[static_cast<std::size_t>(j)] = c;
      }
    }
    for (auto& [_, row] : by_target) rows.push_back(std::move(row));
  }

  for (auto& coords : nullspace(std::move(rows), ncols)) {
    normalize_primitive(coords);
    Element e;
    for (int j = 0; j < ncols; ++j)
      e.add_term(basis[static_cast<std::size_t>(j)], coords[static_cast<std::size_t>(j)]);
    out.emplace_back(std::move(e), lambda);
  }
  return out;
}

CategoryObject::CategoryObject(std::vector<HighestWeight> summands)
    : summands_(std::move(summands)) {
  for (const auto& l : summands_)
    if (l.h == 0)
      throw std::invalid_argument("category objects need lambda(h) != 0");
}

CategoryVector zero_vector(const CategoryObject& obj) {
  CategoryVector v;
  for (const auto& l : obj.summands()) v.components.emplace_back(Element::zero(), l);
  return v;
}

CategoryVector inject(const CategoryObject& obj, int summand, ModuleVector v) {
  CategoryVector out = zero_vector(obj);
  if (summand < 0 || summand >= obj.size())
    throw std::out_of_range("summand index");
  if (!(v.lambda() == obj.summands()[static_cast<std::size_t>(summand)]))
    throw std::invalid_argument("weight mismatch on injection");
  out.components[static_cast<std::size_t>(summand)] = std::move(v);
  return out;
}

ModuleVector project(const CategoryVector& v, int summand) {
  if (summand < 0 || summand >= static_cast<int>(v.components.size()))
    throw std::out_of_range("summand index");
  return v.components[static_cast<std::size_t>(summand)];
}

namespace {

template <class F>
CategoryVector map_components(const CategoryVector& v, F&& f) {
  CategoryVector out;
  for (const auto& c : v.components) out.components.push_back(f(c));
  return out;
}

}  // namespace

CategoryVector act_xminus(int m, const CategoryVector& v) {
  return map_components(v, [&](const ModuleVector& c) { return act_xminus(m, c); });
}

CategoryVector act_omega(int k, const CategoryVector& v) {
  return map_components(v, [&](const ModuleVector& c) { return act_omega(k, c); });
}

CategoryVector act_xplus(int k, const CategoryVector& v) {
  return map_components(v, [&](const ModuleVector& c) { return act_xplus(k, c); });
}

}  // namespace imverma
