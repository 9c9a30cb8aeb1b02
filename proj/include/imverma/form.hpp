#pragma once

#include <vector>

#include "imverma/omega.hpp"

namespace imverma {

/// The contravariant bilinear form on the lowering subalgebra, evaluated at
/// gamma = 1, defined by (1,1) = 1 and the adjunction
/// (x_m a, b) = (a, omega_psi(-m) b). Symmetric; vanishes across distinct
/// grades. Values on basis monomials lie in Z[q^2] (asserted).
Scalar pair_form(const Element& a, const Element& b);
Scalar pair_form(const PBWMonomial& a, const PBWMonomial& b);

/// Exact length-2 closed form
///   delta_{(m1,m2),(k1,k2)} + H(k2-m1) g_coeff(k2-m1) delta_{m2-k1, k2-m1}
/// with H the Heaviside function; an independent oracle for pair_form.
/// Requires m1 >= m2, k1 >= k2 and m1+m2 = k1+k2.
Scalar pair_closed_n2(int m1, int m2, int k1, int k2);

struct GramMatrix {
  WeightWindow window;
  std::vector<PBWMonomial> basis;
  std::vector<std::vector<Scalar>> entries;  // square, symmetric

  int size() const { return static_cast<int>(basis.size()); }
};

/// Gram matrix of pair_form over the window's basis. Every entry is computed
/// independently (symmetry is a checkable property, not an assumption).
GramMatrix gram(const WeightWindow& window);

/// Determinant by exact fraction-free elimination.
Scalar gram_det(const GramMatrix& g);

/// Constant coefficients (the mod-q^2 reduction of Z[q^2] entries).
std::vector<std::vector<Rational>> gram_mod_q2(const GramMatrix& g);

}  // namespace imverma
