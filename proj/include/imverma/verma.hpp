#pragma once

#include <vector>

#include "imverma/form.hpp"
#include "imverma/omega.hpp"

namespace imverma {

/// Highest-weight data of a reduced module: lambda(h) and lambda(d);
/// lambda(c) = 0 implicitly and non-configurably. lambda(h) = 0 is allowed
/// only when boundary_study is set; category constructors always reject it.
struct HighestWeight {
  Rational h;
  Rational d;
  bool boundary_study = false;

  HighestWeight(Rational lambda_h, Rational lambda_d, bool boundary = false);
  bool operator==(const HighestWeight&) const = default;
};

/// Derived eigendata of a basis term: K acts by q^{k_exponent} and D by
/// q^{d_exponent} (never stored per term).
struct TermWeight {
  Rational k_exponent;
  Rational d_exponent;
};

TermWeight term_weight(const HighestWeight& lambda, const PBWMonomial& m);

/// Element of the reduced module: payload acting on the highest-weight
/// generator. The generator itself is payload = 1.
class ModuleVector {
 public:
  ModuleVector(Element payload, HighestWeight lambda)
      : payload_(std::move(payload)), lambda_(std::move(lambda)) {}

  static ModuleVector generator(HighestWeight lambda) {
    return {Element::unit(), std::move(lambda)};
  }

  const Element& payload() const { return payload_; }
  const HighestWeight& lambda() const { return lambda_; }
  bool is_zero() const { return payload_.is_zero(); }
  bool operator==(const ModuleVector&) const = default;

 private:
  Element payload_;
  HighestWeight lambda_;
};

/// Free left multiplication, renormalized; grade (n,d) -> (n+1, d+m).
ModuleVector act_xminus(int m, const ModuleVector& v);

/// Lift of omega_psi at gamma = 1; annihilates the generator.
ModuleVector act_omega(int k, const ModuleVector& v);

/// Lift of omega_phi at gamma = 1.
ModuleVector act_omega_phi(int k, const ModuleVector& v);

/// Heisenberg mode h_l (l != 0) at gamma = 1: kills the generator and peels by
///   h_l (x_m w) = x_m (h_l w) - ([2l]/l) x_{l+m} w.
/// Length-preserving, degree-shifting by l; bijective off the top line.
ModuleVector act_heisenberg(int l, const ModuleVector& v);

/// Components of the Cartan fields on the reduced module: psi(j) vanishes for
/// j < 0, is K at j = 0 (eigenvalue q^{lambda(h)-2n} per term) and
/// K * exp-tail in the positive Heisenberg modes for j > 0; phi mirrors with
/// K^{-1} and the negative modes. Needs lambda(h) in (1/2)Z for exact
/// K-eigenvalues; throws std::domain_error otherwise.
ModuleVector act_cartan_psi(int j, const ModuleVector& v);
ModuleVector act_cartan_phi(int j, const ModuleVector& v);

/// Raising action on the reduced module, by peeling with the exact
/// commutator: x+_k v_lambda = 0 and
///   x+_k (x_l w) = x_l (x+_k w) + (psi(k+l) - phi(k+l))/(q - q^-1) w.
/// At k+l = 0 the commutator term is the familiar [lambda(h) - 2 len(w)] w;
/// for k+l != 0 the Cartan tails act through the Heisenberg modes (they do
/// not vanish off the top line). Every term's length drops by exactly one.
/// Needs lambda(h) in (1/2)Z; throws std::domain_error otherwise.
ModuleVector act_xplus(int k, const ModuleVector& v);

/// Least N with (x+_k)^N v = 0; at most (max term length) + 1 since each
/// application strictly shortens every term. Rejects the zero vector.
int local_nilpotency_exponent(int k, const ModuleVector& v);

/// Basis of { u in window span : x+_k u = 0 for every probed k }. The probe
/// set [-hi-1, -lo+1] covers every delta the window can fire plus one label
/// on each side to engage the Cartan tails; on length-1 windows this is the
/// exact kernel (all other raising modes vanish there), on longer windows it
/// is a certified superset of the true kernel, so emptiness is conclusive.
/// Vectors are normalized to primitive Laurent coefficients (denominators
/// cleared, content 1, lowest coefficient of the first nonzero coordinate
/// positive), in free-column order of the reduced system.
std::vector<ModuleVector> find_singular_vectors(const WeightWindow& window,
                                                const HighestWeight& lambda);

/// Finite direct sum of reduced modules; every summand needs lambda(h) != 0.
class CategoryObject {
 public:
  explicit CategoryObject(std::vector<HighestWeight> summands);
  const std::vector<HighestWeight>& summands() const { return summands_; }
  int size() const { return static_cast<int>(summands_.size()); }

 private:
  std::vector<HighestWeight> summands_;
};

/// Vector of a direct-sum object, one component per summand.
struct CategoryVector {
  std::vector<ModuleVector> components;
  bool operator==(const CategoryVector&) const = default;
};

CategoryVector zero_vector(const CategoryObject& obj);
CategoryVector inject(const CategoryObject& obj, int summand, ModuleVector v);
ModuleVector project(const CategoryVector& v, int summand);

CategoryVector act_xminus(int m, const CategoryVector& v);
CategoryVector act_omega(int k, const CategoryVector& v);
CategoryVector act_xplus(int k, const CategoryVector& v);

}  // namespace imverma
