#include "imverma/form.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace imverma {

namespace {

std::mutex g_pair_mutex;
std::map<std::pair<FreeWord, FreeWord>, Scalar> g_pair_memo;

Scalar pair_mono(const PBWMonomial& a, const PBWMonomial& b) {
  if (a.empty()) return b.empty() ? Scalar::one() : Scalar::zero();
  const auto key = std::pair{a.indices(), b.indices()};
  {
    std::lock_guard lock(g_pair_mutex);
    auto it = g_pair_memo.find(key);
    if (it != g_pair_memo.end()) return it->second;
  }
  // peel the leftmost factor of the first argument through the adjunction
  Element rhs = omega_psi(-a.head(), Element::monomial(b), Gamma::one);
  const PBWMonomial rest = a.tail();
  Scalar out;
  for (const auto& [m, c] : rhs.terms()) out += c * pair_mono(rest, m);
  if (!out.in_z_q2())
    throw std::logic_error("pairing left Z[q^2] on " + word_text(a.indices()) +
                           ", " + word_text(b.indices()));
  std::lock_guard lock(g_pair_mutex);
  return g_pair_memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

Scalar pair_form(const PBWMonomial& a, const PBWMonomial& b) {
  return pair_mono(a, b);
}

Scalar pair_form(const Element& a, const Element& b) {
  Scalar out;
  for (const auto& [ma, ca] : a.terms()) {
    const Grade ga = ma.grade();
    for (const auto& [mb, cb] : b.terms()) {
      if (mb.grade() != ga) continue;  // mixed grades pair grade-by-grade
      out += ca * cb * pair_mono(ma, mb);
    }
  }
  return out;
}

Scalar pair_closed_n2(int m1, int m2, int k1, int k2) {
  if (m1 < m2 || k1 < k2)
    throw std::invalid_argument("pair_closed_n2 needs weakly decreasing pairs");
  if (static_cast<long>(m1) + m2 != static_cast<long>(k1) + k2)
    throw std::invalid_argument("pair_closed_n2 needs equal degree sums");
  Scalar out;
  if (m1 == k1 && m2 == k2) out += Scalar::one();
  if (k2 - m1 >= 0 && m2 - k1 == k2 - m1) out += g_coeff(k2 - m1);
  return out;
}

GramMatrix gram(const WeightWindow& window) {
  GramMatrix g;
  g.window = window;
  g.basis = enumerate_window(window);
  const int n = g.size();
  g.entries.assign(static_cast<std::size_t>(n),
                   std::vector<Scalar>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          pair_mono(g.basis[static_cast<std::size_t>(i)],
                    g.basis[static_cast<std::size_t>(j)]);
  return g;
}

Scalar gram_det(const GramMatrix& g) {
  const int n = g.size();
  if (n == 0) return Scalar::one();
  auto a = g.entries;
  Scalar det = Scalar::one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Scalar::zero();
    if (piv != col) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Scalar& p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= p;
    const Scalar pinv = p.inverse();
    for (int r = col + 1; r < n; ++r) {
      Scalar f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * pinv;
      if (f.is_zero()) continue;
      for (int c2 = col; c2 < n; ++c2)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -=
            f * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
    }
  }
  return det;
}

std::vector<std::vector<Rational>> gram_mod_q2(const GramMatrix& g) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : g.entries) {
    std::vector<Rational> r;
    for (const auto& s : row) r.push_back(s.numerator().coeff(0, 0));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace imverma
