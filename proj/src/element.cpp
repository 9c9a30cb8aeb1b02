#include "imverma/element.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace imverma {

Element Element::monomial(PBWMonomial m, Scalar coeff) {
  Element e;
  e.add_term(m, coeff);
  return e;
}

Scalar Element::coeff(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void Element::add_term(const PBWMonomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element Element::operator-() const {
  Element r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Element Element::scaled(const Scalar& s) const {
  Element r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.add_term(m, c * s);
  return r;
}

Element Element::subst_c1() const {
  Element r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.subst_c1());
  return r;
}

Element Element::subst_v1() const {
  Element r;
  for (const auto& [m, c] : terms_) r.add_term(m, c.subst_v1());
  return r;
}

// ---------------------------------------------------------------------------
// straightening

namespace {

struct Measure {
  long long squares = 0;
  long long inversions = 0;
  auto operator<=>(const Measure&) const = default;
};

Measure measure_of(const FreeWord& w) {
  Measure m;
  for (std::size_t i = 0; i < w.size(); ++i) {
    m.squares += static_cast<long long>(w[i]) * w[i];
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] < w[j]) ++m.inversions;
  }
  return m;
}

std::mutex g_straighten_mutex;
std::map<std::pair<FreeWord, RewriteStrategy>, Element> g_straighten_memo;

FreeWord with_pair(const FreeWord& w, std::size_t i, int a, int b) {
  FreeWord r = w;
  r[i] = a;
  r[i + 1] = b;
  return r;
}

Element straighten_impl(const FreeWord& w, RewriteStrategy strategy) {
  {
    std::lock_guard lock(g_straighten_mutex);
    auto it = g_straighten_memo.find({w, strategy});
    if (it != g_straighten_memo.end()) return it->second;
  }

  std::size_t pos = w.size();  // sentinel: no ascending pair
  if (strategy == RewriteStrategy::leftmost) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] < w[i + 1]) {
        pos = i;
        break;
      }
  } else {
    for (std::size_t i = w.size(); i-- > 1;)
      if (w[i - 1] < w[i]) {
        pos = i - 1;
        break;
      }
  }

  Element result;
  if (pos == w.size()) {
    result = Element::monomial(PBWMonomial(w));
  } else {  // rewrite the pair; coefficients stay in Z[q^2] throughout
    const Measure mu = measure_of(w);
    auto step = [&](int a, int b) {
      FreeWord next = with_pair(w, pos, a, b);
      if (!(measure_of(next) < mu))
        throw std::logic_error("straightening measure failed to decrease at " +
                               word_text(w) + " -> " + word_text(next));
      return next;
    };
    const int l = w[pos];
    const int k1 = w[pos + 1];  // = k + 1
    if (k1 == l + 1) {
      result = straighten_impl(step(k1, l), strategy).scaled(Scalar::q_pow(2));
    } else {
      result = straighten_impl(step(k1, l), strategy).scaled(Scalar::q_pow(2));
      result -= straighten_impl(step(k1 - 1, l + 1), strategy);
      result += straighten_impl(step(l + 1, k1 - 1), strategy).scaled(Scalar::q_pow(2));
    }
    for (const auto& [m, c] : result.terms())
      if (!c.in_z_q2())
        throw std::logic_error("straightening coefficient left Z[q^2] at " +
                               word_text(w));
  }

  std::lock_guard lock(g_straighten_mutex);
  return g_straighten_memo.emplace(std::pair{w, strategy}, std::move(result))
      .first->second;
}

}  // namespace

Element straighten(const FreeWord& w, RewriteStrategy strategy) {
  return straighten_impl(w, strategy);
}

Element left_mul(int index, const Element& e) {
  Element r;
  for (const auto& [m, c] : e.terms()) {
    FreeWord w;
    w.reserve(m.indices().size() + 1);
    w.push_back(index);
    w.insert(w.end(), m.indices().begin(), m.indices().end());
    r += straighten(w).scaled(c);
  }
  return r;
}

Element multiply(const Element& a, const Element& b) {
  Element r;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      FreeWord w = ma.indices();
      w.insert(w.end(), mb.indices().begin(), mb.indices().end());
      r += straighten(w).scaled(ca * cb);
    }
  return r;
}

}  // namespace imverma
