#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imverma/element.hpp"

namespace imverma {

/// Whether the central gamma stays symbolic (as c^2) or is specialized to 1.
enum class Gamma { symbolic, one };

/// Which of the two lowering-derivative families an operator belongs to.
enum class OmegaKind { psi, phi };

struct OmegaOp {
  OmegaKind kind = OmegaKind::psi;
  int index = 0;
  Gamma gamma = Gamma::one;
};

/// Support bound for the operator family on a basis monomial m:
/// psi: omega_psi(j)(m) = 0 for all j < bound; phi: omega_phi(j)(m) = 0 for
/// all j > bound. Empty optional for the empty monomial (empty support).
std::optional<int> support_bound(OmegaKind kind, const PBWMonomial& m);

/// omega_psi(k) via the component recursion
///   omega_psi(k) x_m = delta_{k,-m} gamma^k
///                      + sum_{r>=0} g_coeff(r) gamma^r x_{m+r} omega_psi(k-r),
/// with omega_psi(k)(1) = 0. Linear; a term of grade (n, d) maps to grade
/// (n-1, d+k). Results are normal ordered and memoized per (k, monomial,
/// gamma mode).
Element omega_psi(int k, const Element& e, Gamma gamma);

/// Mirror recursion
///   omega_phi(k) x_m = delta_{k,-m} gamma^{-k}
///                      + sum_{r>=0} g_coeff_inverse(r) gamma^r x_{m-r} omega_phi(k+r),
/// the coefficient-wise extraction of the phi exchange relation; its table is
/// the inverse power series of g_coeff, which the psi/phi exchange identity
/// forces (see verify_relation id c).
Element omega_phi(int k, const Element& e, Gamma gamma);

Element apply_omega(const OmegaOp& op, const Element& e);

/// Component extraction of the generating-function definition of
/// omega_psi(k) on a short monomial (length <= 3), at gamma = 1. Experimental
/// oracle: compared against the recursion, which stays authoritative.
Element omega_psi_defining_oracle(int k, const PBWMonomial& m);

// ---------------------------------------------------------------------------
// operator-relation verification

enum class RelationId { a, b, c, d, e };

RelationId relation_from_name(const std::string& name);
std::string relation_name(RelationId id);

struct RelationMismatch {
  RelationId id;
  int label1 = 0;
  int label2 = 0;
  PBWMonomial element;
  Element lhs;
  Element rhs;
};

struct RelationReport {
  long cells = 0;
  std::vector<RelationMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
};

/// Apply both sides of the identified relation, with symbolic gamma, to every
/// test monomial for every label pair in [label_lo, label_hi]^2 and record
/// exact mismatches. The relation forms are:
///   a: q^2 g O_psi(m) x_{n+1} - O_psi(m+1) x_n
///        = (q^2-1) g^{m+1} d_{m,-n-1} + g x_{n+1} O_psi(m) - q^2 x_n O_psi(m+1)
///   b: q^2 O_psi(k+1) O_psi(l) - O_psi(l) O_psi(k+1)
///        = O_psi(k) O_psi(l+1) - q^2 O_psi(l+1) O_psi(k)
///   c: O_psi(k) O_phi(m) = sum_{r>=0} g_coeff_inverse(r) g^{2r} O_phi(m+r) O_psi(k-r)
///   d: x_l x_{k+1} - q^2 x_{k+1} x_l = q^2 x_{l+1} x_k - x_k x_{l+1}
///   e: q^2 O_phi(m) x_{n+1} - g O_phi(m+1) x_n
///        = (q^2-1) g^{-m} d_{m,-n-1} + x_{n+1} O_phi(m) - q^2 g x_n O_phi(m+1)
/// (g = gamma). The delta prefactors in a and e are the coefficient-exact
/// extractions; they specialize to the familiar (q^2-1) at gamma = 1.
RelationReport verify_relation(RelationId id, int label_lo, int label_hi,
                               const std::vector<PBWMonomial>& test_elements);

/// Evaluate one relation cell; exposed for reporting and tests.
void relation_sides(RelationId id, int label1, int label2, const PBWMonomial& m,
                    Element& lhs, Element& rhs);

}  // namespace imverma
