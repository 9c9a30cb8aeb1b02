#include "imverma/crystal.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace imverma {

CrystalNode::CrystalNode(int sign, PBWMonomial m)
    : zero_(false), sign_(sign), mono_(std::move(m)) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
}

int CrystalNode::sign() const {
  if (zero_) throw std::logic_error("Zero carries no sign");
  return sign_;
}

const PBWMonomial& CrystalNode::monomial() const {
  if (zero_) throw std::logic_error("Zero carries no monomial");
  return mono_;
}

CrystalNode crystal_xminus(int m, const CrystalNode& b) {
  if (b.is_zero()) return CrystalNode::zero();
  const FreeWord& ii = b.monomial().indices();
  const int l = static_cast<int>(ii.size());
  for (int j = 1; j <= l; ++j)
    if (m + j == ii[static_cast<std::size_t>(j - 1)]) return CrystalNode::zero();
  // unique crossing: m+j grows, i_j weakly falls; sentinel i_{l+1} = -inf
  int jstar = l + 1;
  for (int j = 1; j <= l; ++j)
    if (m + j > ii[static_cast<std::size_t>(j - 1)]) {
      jstar = j;
      break;
    }
  FreeWord out;
  out.reserve(ii.size() + 1);
  for (int j = 0; j < jstar - 1; ++j) out.push_back(ii[static_cast<std::size_t>(j)] - 1);
  out.push_back(m + jstar - 1);
  for (int j = jstar - 1; j < l; ++j) out.push_back(ii[static_cast<std::size_t>(j)]);
  int sign = (jstar - 1) % 2 == 0 ? 1 : -1;
  return {b.sign() * sign, PBWMonomial(out)};
}

CrystalNode crystal_omega(int k, const CrystalNode& b) {
  if (b.is_zero()) return CrystalNode::zero();
  const FreeWord& ii = b.monomial().indices();
  const int l = static_cast<int>(ii.size());
  int fired = 0, jhit = 0;
  for (int j = 1; j <= l; ++j)
    if (k - j + 1 == -ii[static_cast<std::size_t>(j - 1)]) {
      ++fired;
      jhit = j;
    }
  if (fired > 1)
    throw std::logic_error("more than one firing position on " +
                           word_text(ii));
  if (fired == 0) return CrystalNode::zero();
  FreeWord out;
  out.reserve(ii.size() - 1);
  for (int j = 0; j < jhit - 1; ++j) out.push_back(ii[static_cast<std::size_t>(j)] + 1);
  for (int j = jhit; j < l; ++j) out.push_back(ii[static_cast<std::size_t>(j)]);
  int sign = (jhit - 1) % 2 == 0 ? 1 : -1;
  return {b.sign() * sign, PBWMonomial(out)};
}

Residue reduce_mod_q(const ModuleVector& v) {
  Residue out;
  for (const auto& [m, c] : v.payload().terms()) {
    Scalar s = c.is_c_free() ? c : c.subst_c1();
    int val = s.valuation();
    if (val < 0)
      throw LatticeError("term " + word_text(m.indices()) + " with coefficient " +
                         s.text() + " is not presented in the lattice (valuation " +
                         std::to_string(val) + ")");
    if (val == 0) out.terms.emplace(m, s.numerator().coeff(0, 0));
  }
  return out;
}

CrystalNode node_of_residue(const Residue& r) {
  if (r.terms.empty()) return CrystalNode::zero();
  if (r.terms.size() != 1)
    throw std::invalid_argument("residue is not a signed monomial");
  const auto& [m, c] = *r.terms.begin();
  if (c != 1 && c != -1)
    throw std::invalid_argument("residue coefficient is not +-1");
  return {c == 1 ? 1 : -1, m};
}

namespace {

Residue residue_of_node(const CrystalNode& n) {
  Residue r;
  if (!n.is_zero()) r.terms.emplace(n.monomial(), Rational(n.sign()));
  return r;
}

std::string residue_text(const Residue& r) {
  if (r.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : r.terms) {
    if (!s.empty()) s += " + ";
    s += rational_text(c) + "*" + word_text(m.indices());
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// coefficient rings

std::string verdict_text(RingVerdict v) {
  switch (v) {
    case RingVerdict::member: return "member";
    case RingVerdict::non_member: return "non-member";
    case RingVerdict::undecided: return "undecided";
  }
  throw std::logic_error("unreachable");
}

namespace {

// [n] * v^{2(n-1)} = 1 + v^4 + ... + v^{4(n-1)}
UPoly qint_poly(int n) {
  UPoly p(static_cast<std::size_t>(4 * (n - 1) + 1), Rational(0));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(4 * j)] = 1;
  return p;
}

}  // namespace

MembershipReport lattice_membership(const Scalar& s, int n_max) {
  MembershipReport rep;
  rep.bound = n_max;
  if (s.is_zero()) {
    rep.regular_at_zero = RingVerdict::member;
    rep.qint_localization = RingVerdict::member;
    return rep;
  }
  Scalar t = s.is_c_free() ? s : s.subst_c1();
  rep.regular_at_zero =
      t.valuation() >= 0 ? RingVerdict::member : RingVerdict::non_member;

  UPoly d = t.denominator();
  for (int n = 2; n <= n_max; ++n) {
    const UPoly p = qint_poly(n);
    UPoly q;
    while (upoly_deg(d) > 0 && upoly_divides(p, d, q)) d = q;
  }
  if (upoly_deg(d) == 0) {
    rep.qint_localization = RingVerdict::member;
  } else {
    // no [n] vanishes at a fourth root of unity (value n there), so these
    // leftover factors certify non-membership
    const UPoly v2p1{Rational(1), Rational(0), Rational(1)};
    UPoly q;
    if (upoly_eval(d, Rational(1)) == 0 || upoly_eval(d, Rational(-1)) == 0 ||
        upoly_divides(v2p1, d, q))
      rep.qint_localization = RingVerdict::non_member;
    else
      rep.qint_localization = RingVerdict::undecided;
  }
  return rep;
}

Scalar PresentedCoeff::value() const {
  Scalar v = Scalar::from_laurent(numer.shifted({v_shift, 0}));
  for (int n : qint_factors) {
    if (n <= 1) throw std::invalid_argument("quantum-integer factors need n > 1");
    v = v / q_int(n);
  }
  return v;
}

// ---------------------------------------------------------------------------
// sweeps

CrystalReport verify_crystal_axioms(int max_len, int lo, int hi, int label_lo,
                                    int label_hi) {
  CrystalReport rep;
  const auto basis = enumerate_pbw(max_len, lo, hi);
  for (const auto& mono : basis) {
    const CrystalNode b(1, mono);
    for (int m = label_lo; m <= label_hi; ++m) {
      // closure (iv): both images must be signed basis monomials or Zero;
      // the node constructor enforces normal order structurally.
      ++rep.checks;
      try {
        crystal_xminus(m, b);
        crystal_omega(m, b);
      } catch (const std::exception& ex) {
        rep.failures.push_back({"closure", m, mono, "signed monomial or 0", ex.what()});
        continue;
      }
      // commutation (v) on both-nonzero inputs
      const CrystalNode via_omega = crystal_omega(-m, b);
      const CrystalNode via_x = crystal_xminus(m, b);
      if (!via_omega.is_zero() && !via_x.is_zero()) {
        ++rep.checks;
        const CrystalNode lhs = crystal_xminus(m, via_omega);
        const CrystalNode rhs = crystal_omega(-m, via_x);
        if (!(lhs == rhs))
          rep.failures.push_back({"axiom-v", m, mono,
                                  residue_text(residue_of_node(rhs)),
                                  residue_text(residue_of_node(lhs))});
      }
      // partial inverse for m >= i_1
      if (!via_x.is_zero() && (mono.empty() || m >= mono.head())) {
        ++rep.checks;
        const CrystalNode back = crystal_omega(-m, via_x);
        if (!(back == b))
          rep.failures.push_back({"partial-inverse", m, mono,
                                  residue_text(residue_of_node(b)),
                                  residue_text(residue_of_node(back))});
      }
    }
  }
  return rep;
}

CrystalReport crystal_oracle_check(const HighestWeight& lambda, int max_len,
                                   int lo, int hi, int label_lo, int label_hi) {
  CrystalReport rep;
  const auto basis = enumerate_pbw(max_len, lo, hi);
  for (const auto& mono : basis) {
    const CrystalNode b(1, mono);
    const ModuleVector vb(Element::monomial(mono), lambda);
    for (int m = label_lo; m <= label_hi; ++m) {
      ++rep.checks;
      const Residue full = reduce_mod_q(act_xminus(m, vb));
      const Residue closed = residue_of_node(crystal_xminus(m, b));
      if (!(full == closed))
        rep.failures.push_back(
            {"xminus", m, mono, residue_text(closed), residue_text(full)});
    }
    for (int k = label_lo; k <= label_hi; ++k) {
      ++rep.checks;
      const Residue full = reduce_mod_q(act_omega(k, vb));
      const Residue closed = residue_of_node(crystal_omega(k, b));
      if (!(full == closed))
        rep.failures.push_back(
            {"omega", k, mono, residue_text(closed), residue_text(full)});
    }
  }
  return rep;
}

CrystalReport verify_prop91(const HighestWeight& lambda, int samples,
                            unsigned long seed, int max_len, int lo, int hi) {
  CrystalReport rep;
  std::mt19937 rng(static_cast<std::uint32_t>(seed));
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  const auto basis = enumerate_pbw(max_len, lo, hi);

  for (int s = 0; s < samples; ++s) {
    const PBWMonomial& mono = basis[static_cast<std::size_t>(pick(static_cast<int>(basis.size())))];
    PresentedCoeff pc;
    int nterms = 1 + pick(3);
    for (int t = 0; t < nterms; ++t)
      pc.numer.add_term({2 * pick(4), 0}, Rational(pick(9) - 4));
    if (pc.numer.is_zero()) pc.numer = Laurent::constant(Rational(1));
    pc.v_shift = pick(3);
    if (pick(2) == 1) pc.qint_factors.push_back(2 + pick(2));
    const Scalar coeff = pc.value();
    if (coeff.valuation() < 0) throw std::logic_error("sample generator broke its invariant");
    const Element u = Element::monomial(mono, coeff);
    const Grade g = mono.grade();
    for (const auto& partner : basis) {
      if (partner.grade() != g) continue;
      ++rep.checks;
      const Scalar p = pair_form(u, Element::monomial(partner));
      if (!p.is_zero() && p.valuation() < 0)
        rep.failures.push_back({"prop91-forward", s, mono, "valuation >= 0",
                                p.text()});
    }
  }

  // negative control: a v^{-1}-scaled monomial must escape regularity
  const PBWMonomial control = enumerate_window(1, lo, lo, hi)[0];
  const Scalar p = pair_form(Element::monomial(control, Scalar::v_pow(-1)),
                             Element::monomial(control));
  ++rep.checks;
  if (p.is_zero() || p.valuation() >= 0)
    rep.failures.push_back({"prop91-control", 0, control, "negative valuation",
                            p.is_zero() ? "0" : p.text()});
  (void)lambda;
  return rep;
}

// ---------------------------------------------------------------------------
// graph export

CrystalGraph crystal_graph(int max_len, int lo, int hi, int label_lo,
                           int label_hi, bool with_omega_edges) {
  CrystalGraph g;
  g.nodes = enumerate_pbw(max_len, lo, hi);
  std::map<PBWMonomial, int> index;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index.emplace(g.nodes[i], static_cast<int>(i));
  auto in_window = [&](const PBWMonomial& m) {
    return m.length() <= max_len &&
           (m.empty() || (m.head() <= hi && m.back() >= lo));
  };
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const CrystalNode b(1, g.nodes[i]);
    for (int m = label_lo; m <= label_hi; ++m) {
      const CrystalNode r = crystal_xminus(m, b);
      if (!r.is_zero() && in_window(r.monomial()))
        g.edges.push_back({static_cast<int>(i), index.at(r.monomial()), m, r.sign()});
      if (with_omega_edges) {
        const CrystalNode w = crystal_omega(m, b);
        if (!w.is_zero() && in_window(w.monomial()))
          g.omega_edges.push_back({static_cast<int>(i), index.at(w.monomial()), m, w.sign()});
      }
    }
  }
  return g;
}

std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << word_text(g.nodes[i].indices()) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label
       << "\", sign=\"" << (e.sign > 0 ? "+" : "-") << "\"];\n";
  for (const auto& e : g.omega_edges)
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << e.label
       << "\", sign=\"" << (e.sign > 0 ? "+" : "-")
       << "\", style=\"dashed\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace imverma
