#include <doctest.h>

#include <cctype>

#include "imverma/crystal.hpp"

using namespace imverma;

namespace {

PBWMonomial M(std::initializer_list<int> idx) { return PBWMonomial(FreeWord(idx)); }

CrystalNode N(int sign, std::initializer_list<int> idx) {
  return CrystalNode(sign, M(idx));
}

const HighestWeight LAM1{1, 0};

// just enough of the DOT grammar to re-read what graph_to_dot emits
bool dot_parses(const std::string& text) {
  std::size_t i = 0;
  auto ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto lit = [&](const std::string& s) {
    ws();
    if (text.compare(i, s.size(), s) != 0) return false;
    i += s.size();
    return true;
  };
  auto ident = [&] {
    ws();
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    return i > start;
  };
  auto quoted = [&] {
    ws();
    if (i >= text.size() || text[i] != '"') return false;
    ++i;
    while (i < text.size() && text[i] != '"') ++i;
    if (i >= text.size()) return false;
    ++i;
    return true;
  };
  auto attrs = [&] {
    if (!lit("[")) return false;
    while (true) {
      if (!ident() || !lit("=") || !quoted()) return false;
      ws();
      if (text[i] == ',') { ++i; continue; }
      break;
    }
    return lit("]");
  };
  if (!lit("digraph") || !ident() || !lit("{")) return false;
  while (true) {
    ws();
    if (i < text.size() && text[i] == '}') { ++i; break; }
    if (!ident()) return false;
    ws();
    if (text.compare(i, 2, "->") == 0) {
      i += 2;
      if (!ident()) return false;
    }
    if (!attrs() || !lit(";")) return false;
  }
  ws();
  return i == text.size();
}

}  // namespace

TEST_CASE("closed-form lowering") {
  CHECK(crystal_xminus(2, N(1, {1, 0})) == N(1, {2, 1, 0}));
  CHECK(crystal_xminus(0, N(1, {1, 0})).is_zero());
  CHECK(crystal_xminus(-5, N(1, {0})) == N(-1, {-1, -4}));
  CHECK(crystal_xminus(3, CrystalNode::zero()).is_zero());
  // sign composes through the node's own sign
  CHECK(crystal_xminus(-5, N(-1, {0})) == N(1, {-1, -4}));
}

TEST_CASE("closed-form derivative") {
  CHECK(crystal_omega(-1, N(1, {1, 0})) == N(1, {0}));
  CHECK(crystal_omega(1, N(1, {1, 0})) == N(-1, {2}));
  CHECK(crystal_omega(5, N(1, {1, 0})).is_zero());
  CHECK(crystal_omega(2, CrystalNode::zero()).is_zero());
}

TEST_CASE("residue reduction") {
  const ModuleVector a(Element::monomial(M({1, 0, 0}), Scalar::q_pow(2)), LAM1);
  CHECK(reduce_mod_q(a).terms.empty());

  const ModuleVector b(Element::monomial(M({2}), Scalar::q_pow(4) - Scalar::one()), LAM1);
  const Residue rb = reduce_mod_q(b);
  REQUIRE(rb.terms.size() == 1);
  CHECK(rb.terms.at(M({2})) == -1);
  CHECK(node_of_residue(rb) == N(-1, {2}));

  const ModuleVector c(Element::monomial(M({0}), Scalar::v_pow(-1)), LAM1);
  CHECK_THROWS_AS(reduce_mod_q(c), LatticeError);

  CHECK(node_of_residue(Residue{}).is_zero());
}

TEST_CASE("closed forms equal the module action mod q") {
  for (const auto& mono : enumerate_pbw(3, -2, 2)) {
    const CrystalNode b(1, mono);
    const ModuleVector vb(Element::monomial(mono), LAM1);
    for (int m = -4; m <= 4; ++m) {
      const Residue full = reduce_mod_q(act_xminus(m, vb));
      const CrystalNode closed = crystal_xminus(m, b);
      if (closed.is_zero()) {
        CHECK(full.terms.empty());
      } else {
        CHECK(node_of_residue(full) == closed);
      }
      const Residue fullo = reduce_mod_q(act_omega(m, vb));
      const CrystalNode closedo = crystal_omega(m, b);
      if (closedo.is_zero()) {
        CHECK(fullo.terms.empty());
      } else {
        CHECK(node_of_residue(fullo) == closedo);
      }
    }
  }
}

TEST_CASE("axioms and oracle sweeps on a small window") {
  const CrystalReport ax = verify_crystal_axioms(3, -2, 2, -4, 4);
  CHECK(ax.pass());
  CHECK(ax.checks > 0);
  const CrystalReport orc = crystal_oracle_check(LAM1, 3, -2, 2, -4, 4);
  CHECK(orc.pass());
}

TEST_CASE("length-1 commutation cases") {
  for (int i1 = -2; i1 <= 2; ++i1) {
    const CrystalNode b = N(1, {i1});
    for (int m = -4; m <= 4; ++m) {
      const CrystalNode bx = crystal_xminus(m, b);
      const CrystalNode bo = crystal_omega(-m, b);
      if (!bx.is_zero() && !bo.is_zero())
        CHECK(crystal_xminus(m, bo) == crystal_omega(-m, bx));
      if (!bx.is_zero() && m >= i1) CHECK(crystal_omega(-m, bx) == b);
    }
  }
}

TEST_CASE("ring memberships") {
  const Scalar a = Scalar::one() / (Scalar::one() + Scalar::q_pow(2));
  const MembershipReport ra = lattice_membership(a, 6);
  CHECK(ra.regular_at_zero == RingVerdict::member);
  CHECK(ra.qint_localization == RingVerdict::member);  // 1 + q^2 is [2] v^2

  const Scalar b = Scalar::one() / q_int(2);
  const MembershipReport rb = lattice_membership(b, 6);
  CHECK(rb.regular_at_zero == RingVerdict::member);  // valuation +2
  CHECK(b.valuation() == 2);
  CHECK(rb.qint_localization == RingVerdict::member);

  // 1/(q-1) is regular at 0 but (v^2 - 1) never divides quantum integers
  const Scalar c = Scalar::one() / (Scalar::q_pow(1) - Scalar::one());
  const MembershipReport rc = lattice_membership(c, 8);
  CHECK(c.valuation() == 0);
  CHECK(rc.regular_at_zero == RingVerdict::member);
  CHECK(rc.qint_localization == RingVerdict::non_member);

  // a denominator needing [5] stays undecided at bound 3
  const Scalar d = Scalar::one() / q_int(5);
  CHECK(lattice_membership(d, 3).qint_localization == RingVerdict::undecided);
  CHECK(lattice_membership(d, 5).qint_localization == RingVerdict::member);

  const Scalar neg = Scalar::v_pow(-3);
  CHECK(lattice_membership(neg, 2).regular_at_zero == RingVerdict::non_member);
  CHECK(lattice_membership(neg, 2).qint_localization == RingVerdict::member);
}

TEST_CASE("presented coefficients") {
  PresentedCoeff pc;
  pc.numer = Laurent::constant(Rational(1)) + Laurent::q_pow(1);
  pc.v_shift = 2;
  pc.qint_factors = {2};
  CHECK(pc.value() == (Scalar::one() + Scalar::q_pow(1)) * Scalar::v_pow(2) / q_int(2));
  PresentedCoeff bad;
  bad.numer = Laurent::constant(Rational(1));
  bad.qint_factors = {1};
  CHECK_THROWS_AS(bad.value(), std::invalid_argument);
}

TEST_CASE("lattice pairing sweep") {
  const CrystalReport r = verify_prop91(LAM1, 25, 4242, 2, -2, 2);
  CHECK(r.pass());
  CHECK(r.checks > 25);
}

TEST_CASE("graph export") {
  const CrystalGraph star = crystal_graph(1, -2, 2, -2, 2, false);
  REQUIRE(star.nodes.size() == 6);  // [] and the five length-1 nodes
  for (const auto& e : star.edges) {
    CHECK(star.nodes[static_cast<std::size_t>(e.src)].empty());
    CHECK(e.sign == 1);  // free action on the generator
  }
  CHECK(star.edges.size() == 5);

  const CrystalGraph g = crystal_graph(3, -2, 2, -3, 3, true);
  for (const auto& e : g.edges)
    CHECK(g.nodes[static_cast<std::size_t>(e.src)].length() + 1 ==
          g.nodes[static_cast<std::size_t>(e.dst)].length());
  // the edge labelled 0 out of [1,0] is absent: it maps to 0
  const auto it10 = std::find(g.nodes.begin(), g.nodes.end(), M({1, 0}));
  REQUIRE(it10 != g.nodes.end());
  const int idx10 = static_cast<int>(it10 - g.nodes.begin());
  for (const auto& e : g.edges)
    CHECK(!(e.src == idx10 && e.label == 0));

  const std::string dot = graph_to_dot(g);
  CHECK(dot_parses(dot));
  CHECK(dot == graph_to_dot(crystal_graph(3, -2, 2, -3, 3, true)));
}
