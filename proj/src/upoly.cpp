#include "imverma/upoly.hpp"

#include <stdexcept>

namespace imverma {

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool upoly_is_zero(const UPoly& p) { return p.empty(); }

bool upoly_is_one(const UPoly& p) { return p.size() == 1 && p[0] == 1; }

int upoly_deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly upoly_add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  upoly_trim(r);
  return r;
}

UPoly upoly_sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  upoly_trim(r);
  return r;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  upoly_trim(r);
  return r;
}

UPoly upoly_scale(const UPoly& a, const Rational& s) {
  if (s == 0) return {};
  UPoly r = a;
  for (auto& c : r) c *= s;
  return r;
}

void upoly_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rational f = r.back() / b.back();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    upoly_trim(r);
    if (!r.empty() && r.size() > shift + b.size() - 1) {
      // cannot happen: leading term was cancelled
      throw std::logic_error("divmod failed to reduce degree");
    }
  }
  upoly_trim(q);
}

bool upoly_divides(const UPoly& b, const UPoly& a, UPoly& q) {
  if (a.empty()) {
    q.clear();
    return true;
  }
  if (b.empty() || a.size() < b.size()) return false;
  UPoly r;
  upoly_divmod(a, b, q, r);
  return r.empty();
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly q, r;
    upoly_divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

UPoly upoly_series_inverse(const UPoly& p, int n) {
  if (p.empty() || p[0] == 0)
    throw std::domain_error("series inverse needs a unit constant term");
  UPoly inv(static_cast<std::size_t>(n), Rational(0));
  if (n <= 0) return {};
  inv[0] = Rational(1) / p[0];
  for (int k = 1; k < n; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k && j < static_cast<int>(p.size()); ++j)
      acc += p[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -acc / p[0];
  }
  return inv;
}

Rational upoly_eval(const UPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace imverma
