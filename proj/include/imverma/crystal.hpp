#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "imverma/verma.hpp"

namespace imverma {

/// Signed basis monomial of the residue basis, or the distinguished Zero.
class CrystalNode {
 public:
  CrystalNode() : zero_(true) {}  // Zero
  CrystalNode(int sign, PBWMonomial m);

  static CrystalNode zero() { return {}; }

  bool is_zero() const { return zero_; }
  int sign() const;
  const PBWMonomial& monomial() const;

  bool operator==(const CrystalNode&) const = default;

 private:
  bool zero_ = false;
  int sign_ = 1;
  PBWMonomial mono_;
};

/// Closed-form residue action of the lowering generator x_m: Zero when
/// m + j = i_j for some j; otherwise insert at the unique crossing position j
/// (sentinels i_0 = +inf, i_{l+1} = -inf), decrementing the first j-1 indices
/// and flipping the sign by (-1)^{j-1}. Grade (l, d) -> (l+1, d+m).
CrystalNode crystal_xminus(int m, const CrystalNode& b);

/// Closed-form residue action of the derivative operator: the single firing
/// term of sum_j (-1)^{j-1} delta_{k-j+1, -i_j} [i_1+1,...,i_{j-1}+1,
/// i_{j+1},...,i_l]; at most one j can fire (asserted). Grade (l, d) ->
/// (l-1, d+k).
CrystalNode crystal_omega(int k, const CrystalNode& b);

/// Residue of a module vector in the lattice quotient at v = 0: monomials
/// whose coefficient has v-valuation 0 survive with their constant term.
struct Residue {
  std::map<PBWMonomial, Rational> terms;
  bool operator==(const Residue&) const = default;
};

/// Throws LatticeError when some coefficient has negative valuation.
struct LatticeError : std::runtime_error {
  explicit LatticeError(const std::string& what) : std::runtime_error(what) {}
};

Residue reduce_mod_q(const ModuleVector& v);

/// Residue of a signed single monomial, when it is one (or Zero).
CrystalNode node_of_residue(const Residue& r);

// ---------------------------------------------------------------------------
// coefficient rings of the lattice

enum class RingVerdict { member, non_member, undecided };

std::string verdict_text(RingVerdict v);

struct MembershipReport {
  RingVerdict regular_at_zero = RingVerdict::undecided;  // valuation >= 0
  RingVerdict qint_localization = RingVerdict::undecided;
  int bound = 0;  // largest [n] tried
};

/// Decide membership of a reduced fraction in the two coefficient rings:
/// regular at v = 0 (exact, by valuation) and the Laurent ring localized at
/// the quantum integers [2..n_max] (bounded trial division; a leftover factor
/// vanishing at v in {1,-1} or divisible by v^2+1 is a proven non-member
/// since every [n] is nonzero at fourth roots of unity).
MembershipReport lattice_membership(const Scalar& s, int n_max);

/// Coefficient presented constructively as
///   numer * v^{v_shift} / prod_i [qint_factors_i],   qint factors > 1,
/// the shape in which lattice elements are generated and tracked.
struct PresentedCoeff {
  Laurent numer;
  int v_shift = 0;
  std::vector<int> qint_factors;

  Scalar value() const;
};

// ---------------------------------------------------------------------------
// verification sweeps

struct CrystalMismatch {
  std::string op;  // "xminus" | "omega"
  int label = 0;
  PBWMonomial basis;
  std::string expected;  // closed form
  std::string got;       // full computation mod q
};

struct CrystalReport {
  long checks = 0;
  std::vector<CrystalMismatch> failures;
  bool pass() const { return failures.empty(); }
};

/// Axiom checks for the closed-form operators over all basis monomials with
/// length <= max_len and indices in [lo, hi]: structural closure of both
/// operators (weak decrease of every image, at most one firing position) and
/// the commutation x_m omega(-m) b = omega(-m) x_m b whenever both b-images
/// are nonzero, plus the partial inverse omega(-m) x_m b = b for m >= i_1.
CrystalReport verify_crystal_axioms(int max_len, int lo, int hi, int label_lo,
                                    int label_hi);

/// The theorem-level oracle: closed forms equal the module operators reduced
/// mod q (signs included) on the exhaustive sweep.
CrystalReport crystal_oracle_check(const HighestWeight& lambda, int max_len,
                                   int lo, int hi, int label_lo, int label_hi);

/// Forward inclusion of the lattice pairing property plus one engineered
/// negative control: seeded presentations with valuation >= 0 pair into
/// valuation >= 0; the v^{-1}-scaled control pairs to negative valuation.
CrystalReport verify_prop91(const HighestWeight& lambda, int samples,
                            unsigned long seed, int max_len, int lo, int hi);

// ---------------------------------------------------------------------------
// graph export

struct CrystalEdge {
  int src = 0;
  int dst = 0;
  int label = 0;  // the generator index m
  int sign = 1;
};

struct CrystalGraph {
  std::vector<PBWMonomial> nodes;  // sorted by (length, lex)
  std::vector<CrystalEdge> edges;  // lowering edges
  std::vector<CrystalEdge> omega_edges;  // optional dual edges
};

/// Nodes are the basis monomials with length <= max_len and indices in
/// [lo, hi]; edges b -> b' for crystal_xminus(m, b) = +-b' with b' inside the
/// window (edges leaving the window are trimmed), m in [label_lo, label_hi].
CrystalGraph crystal_graph(int max_len, int lo, int hi, int label_lo,
                           int label_hi, bool with_omega_edges);

std::string graph_to_dot(const CrystalGraph& g);

}  // namespace imverma
