#include "imverma/omega.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace imverma {

namespace {

Scalar gamma_pow_in(int e, Gamma gamma) {
  return gamma == Gamma::symbolic ? Scalar::gamma_pow(e) : Scalar::one();
}

std::mutex g_omega_mutex;
std::map<std::tuple<int, FreeWord, Gamma>, Element> g_psi_memo;
std::map<std::tuple<int, FreeWord, Gamma>, Element> g_phi_memo;

void assert_grade_law(const Element& out, const PBWMonomial& in, int k,
                      const char* what) {
  Grade expect{in.length() - 1, in.grade().degree + k};
  for (const auto& [m, _] : out.terms())
    if (m.grade() != expect)
      throw std::logic_error(std::string(what) + " grade law violated on " +
                             word_text(in.indices()));
}

Element omega_psi_mono(int k, const PBWMonomial& m, Gamma gamma) {
  if (m.empty()) return Element::zero();
  const auto key = std::tuple{k, m.indices(), gamma};
  {
    std::lock_guard lock(g_omega_mutex);
    auto it = g_psi_memo.find(key);
    if (it != g_psi_memo.end()) return it->second;
  }
  const PBWMonomial rest = m.tail();
  Element out;
  if (k == -m.head())
    out += Element::monomial(rest, gamma_pow_in(k, gamma));
  if (auto b = support_bound(OmegaKind::psi, rest)) {
    for (int r = 0; k - r >= *b; ++r) {
      Element sub = omega_psi_mono(k - r, rest, gamma);
      if (!sub.is_zero())
        out += left_mul(m.head() + r, sub).scaled(g_coeff(r) * gamma_pow_in(r, gamma));
    }
  }
  // Eventual-vanishing guard: nothing may survive below the support bound.
  if (k < -m.head() && !out.is_zero())
    throw std::logic_error("psi support bound violated on " + word_text(m.indices()));
  assert_grade_law(out, m, k, "omega_psi");
  std::lock_guard lock(g_omega_mutex);
  return g_psi_memo.emplace(key, std::move(out)).first->second;
}

Element omega_phi_mono(int k, const PBWMonomial& m, Gamma gamma) {
  if (m.empty()) return Element::zero();
  const auto key = std::tuple{k, m.indices(), gamma};
  {
    std::lock_guard lock(g_omega_mutex);
    auto it = g_phi_memo.find(key);
    if (it != g_phi_memo.end()) return it->second;
  }
  const PBWMonomial rest = m.tail();
  Element out;
  if (k == -m.head())
    out += Element::monomial(rest, gamma_pow_in(-k, gamma));
  if (auto b = support_bound(OmegaKind::phi, rest)) {
    for (int r = 0; k + r <= *b; ++r) {
      Element sub = omega_phi_mono(k + r, rest, gamma);
      if (!sub.is_zero())
        out += left_mul(m.head() - r, sub).scaled(g_coeff_inverse(r) * gamma_pow_in(r, gamma));
    }
  }
  if (k > -m.back() && !out.is_zero())
    throw std::logic_error("phi support bound violated on " + word_text(m.indices()));
  assert_grade_law(out, m, k, "omega_phi");
  std::lock_guard lock(g_omega_mutex);
  return g_phi_memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::optional<int> support_bound(OmegaKind kind, const PBWMonomial& m) {
  if (m.empty()) return std::nullopt;
  return kind == OmegaKind::psi ? -m.head() : -m.back();
}

Element omega_psi(int k, const Element& e, Gamma gamma) {
  Element r;
  for (const auto& [m, c] : e.terms()) r += omega_psi_mono(k, m, gamma).scaled(c);
  return r;
}

Element omega_phi(int k, const Element& e, Gamma gamma) {
  Element r;
  for (const auto& [m, c] : e.terms()) r += omega_phi_mono(k, m, gamma).scaled(c);
  return r;
}

Element apply_omega(const OmegaOp& op, const Element& e) {
  return op.kind == OmegaKind::psi ? omega_psi(op.index, e, op.gamma)
                                   : omega_phi(op.index, e, op.gamma);
}

// ---------------------------------------------------------------------------
// generating-function oracle, gamma = 1

namespace {

void compositions_rec(int total, int parts, FreeWord& acc,
                      const std::function<void(const FreeWord&)>& emit) {
  if (parts == 0) {
    if (total == 0) emit(acc);
    return;
  }
  for (int first = 0; first <= total; ++first) {
    acc.push_back(first);
    compositions_rec(total - first, parts - 1, acc, emit);
    acc.pop_back();
  }
}

}  // namespace

Element omega_psi_defining_oracle(int k, const PBWMonomial& m) {
  if (m.length() > 3)
    throw std::invalid_argument("defining oracle restricted to length <= 3");
  const FreeWord& n = m.indices();
  Element out;
  for (int l = 1; l <= m.length(); ++l) {
    int total = n[static_cast<std::size_t>(l - 1)] + k;
    if (total < 0) continue;
    FreeWord acc;
    compositions_rec(total, l - 1, acc, [&](const FreeWord& rs) {
      Scalar coeff = Scalar::one();
      for (int r : rs) coeff *= g_coeff(r);
      FreeWord word;
      for (int j = 0; j < l - 1; ++j)
        word.push_back(n[static_cast<std::size_t>(j)] + rs[static_cast<std::size_t>(j)]);
      for (std::size_t j = static_cast<std::size_t>(l); j < n.size(); ++j)
        word.push_back(n[j]);
      out += straighten(word).scaled(coeff);
    });
  }
  return out;
}

// ---------------------------------------------------------------------------
// relations

RelationId relation_from_name(const std::string& name) {
  if (name == "a") return RelationId::a;
  if (name == "b") return RelationId::b;
  if (name == "c") return RelationId::c;
  if (name == "d") return RelationId::d;
  if (name == "e") return RelationId::e;
  throw std::invalid_argument("unknown relation id '" + name + "'");
}

std::string relation_name(RelationId id) {
  switch (id) {
    case RelationId::a: return "a";
    case RelationId::b: return "b";
    case RelationId::c: return "c";
    case RelationId::d: return "d";
    case RelationId::e: return "e";
  }
  throw std::logic_error("unreachable");
}

void relation_sides(RelationId id, int label1, int label2, const PBWMonomial& mono,
                    Element& lhs, Element& rhs) {
  const Gamma G = Gamma::symbolic;
  const Element e = Element::monomial(mono);
  const Scalar q2 = Scalar::q_pow(2);
  const Scalar g1 = Scalar::gamma_pow(1);
  switch (id) {
    case RelationId::a: {
      const int m = label1, n = label2;
      lhs = omega_psi(m, left_mul(n + 1, e), G).scaled(q2 * g1) -
            omega_psi(m + 1, left_mul(n, e), G);
      rhs = Element::zero();
      if (m == -n - 1)
        rhs += e.scaled((q2 - Scalar::one()) * Scalar::gamma_pow(m + 1));
      rhs += left_mul(n + 1, omega_psi(m, e, G)).scaled(g1);
      rhs -= left_mul(n, omega_psi(m + 1, e, G)).scaled(q2);
      break;
    }
    case RelationId::b: {
      const int k = label1, l = label2;
      lhs = omega_psi(k + 1, omega_psi(l, e, G), G).scaled(q2) -
            omega_psi(l, omega_psi(k + 1, e, G), G);
      rhs = omega_psi(k, omega_psi(l + 1, e, G), G) -
            omega_psi(l + 1, omega_psi(k, e, G), G).scaled(q2);
      break;
    }
    case RelationId::c: {
      const int k = label1, m = label2;
      lhs = omega_psi(k, omega_phi(m, e, G), G);
      rhs = Element::zero();
      if (auto b = support_bound(OmegaKind::psi, mono)) {
        for (int r = 0; k - r >= *b; ++r) {
          Element sub = omega_psi(k - r, e, G);
          if (!sub.is_zero())
            rhs += omega_phi(m + r, sub, G)
                       .scaled(g_coeff_inverse(r) * Scalar::gamma_pow(2 * r));
        }
      }
      break;
    }
    case RelationId::d: {
      const int k = label1, l = label2;
      lhs = left_mul(l, left_mul(k + 1, e)) - left_mul(k + 1, left_mul(l, e)).scaled(q2);
      rhs = left_mul(l + 1, left_mul(k, e)).scaled(q2) - left_mul(k, left_mul(l + 1, e));
      break;
    }
    case RelationId::e: {
      const int m = label1, n = label2;
      lhs = omega_phi(m, left_mul(n + 1, e), G).scaled(q2) -
            omega_phi(m + 1, left_mul(n, e), G).scaled(g1);
      rhs = Element::zero();
      if (m == -n - 1)
        rhs += e.scaled((q2 - Scalar::one()) * Scalar::gamma_pow(-m));
      rhs += left_mul(n + 1, omega_phi(m, e, G));
      rhs -= left_mul(n, omega_phi(m + 1, e, G)).scaled(q2 * g1);
      break;
    }
  }
}

RelationReport verify_relation(RelationId id, int label_lo, int label_hi,
                               const std::vector<PBWMonomial>& test_elements) {
  RelationReport report;
  for (const auto& mono : test_elements)
    for (int l1 = label_lo; l1 <= label_hi; ++l1)
      for (int l2 = label_lo; l2 <= label_hi; ++l2) {
        Element lhs, rhs;
        relation_sides(id, l1, l2, mono, lhs, rhs);
        ++report.cells;
        if (!(lhs == rhs))
          report.mismatches.push_back({id, l1, l2, mono, lhs, rhs});
      }
  return report;
}

}  // namespace imverma
