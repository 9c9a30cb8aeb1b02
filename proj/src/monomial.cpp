#include "imverma/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace imverma {

Grade grade_of(const FreeWord& w) {
  Grade g;
  g.length = static_cast<int>(w.size());
  for (int i : w) g.degree += i;
  return g;
}

PBWMonomial::PBWMonomial(FreeWord indices) : idx_(std::move(indices)) {
  if (!is_normal_ordered(idx_))
    throw std::invalid_argument("indices not weakly decreasing: " + word_text(idx_));
}

bool PBWMonomial::is_normal_ordered(const FreeWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

PBWMonomial PBWMonomial::tail() const {
  PBWMonomial m;
  m.idx_.assign(idx_.begin() + 1, idx_.end());
  return m;
}

PBWMonomial PBWMonomial::without(int pos) const {
  PBWMonomial m;
  m.idx_ = idx_;
  m.idx_.erase(m.idx_.begin() + pos);
  return m;
}

std::strong_ordering PBWMonomial::operator<=>(const PBWMonomial& o) const {
  return std::lexicographical_compare_three_way(idx_.begin(), idx_.end(),
                                                o.idx_.begin(), o.idx_.end());
}

namespace {

void enumerate_rec(int remaining, long target, int lo, int cap, FreeWord& acc,
                   std::vector<PBWMonomial>& out) {
  if (remaining == 0) {
    if (target == 0) out.emplace_back(acc);
    return;
  }
  // feasibility: remaining entries in [lo, min(cap, hi)] must reach target
  for (int v = lo; v <= cap; ++v) {
    long rest = target - v;
    if (rest < static_cast<long>(remaining - 1) * lo) continue;
    if (rest > static_cast<long>(remaining - 1) * v) continue;
    acc.push_back(v);
    enumerate_rec(remaining - 1, rest, lo, v, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<PBWMonomial> enumerate_window(const WeightWindow& w) {
  std::vector<PBWMonomial> out;
  if (w.lo > w.hi) throw std::invalid_argument("window needs lo <= hi");
  if (w.length < 0) throw std::invalid_argument("window needs length >= 0");
  if (w.length == 0) {
    if (w.degree == 0) out.emplace_back();
    return out;
  }
  FreeWord acc;
  enumerate_rec(w.length, w.degree, w.lo, w.hi, acc, out);
  return out;
}

std::vector<PBWMonomial> enumerate_window(int length, long degree, int lo, int hi) {
  return enumerate_window(WeightWindow{length, degree, lo, hi});
}

std::vector<PBWMonomial> enumerate_pbw(int max_len, int lo, int hi) {
  std::vector<PBWMonomial> out;
  out.emplace_back();
  FreeWord acc;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<PBWMonomial> layer;
    for (long m = static_cast<long>(len) * lo; m <= static_cast<long>(len) * hi; ++m) {
      auto ws = enumerate_window(len, m, lo, hi);
      layer.insert(layer.end(), ws.begin(), ws.end());
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string word_text(const FreeWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

FreeWord parse_word(const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("bad word literal '" + text + "': " + why);
  };
  skip();
  if (i >= text.size() || text[i] != '[') fail("expected [");
  ++i;
  FreeWord out;
  skip();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        fail("integer expected");
      out.push_back(std::stoi(text.substr(start, i - start)));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') {
        ++i;
        break;
      }
      fail("expected , or ]");
    }
  }
  skip();
  if (i != text.size()) fail("trailing input");
  return out;
}

}  // namespace imverma
