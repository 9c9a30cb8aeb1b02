#pragma once

#include <compare>
#include <string>
#include <vector>

namespace imverma {

/// Free word in the lowering-generator indices, left-to-right product order.
using FreeWord = std::vector<int>;

/// Length and delta-degree of a word: (number of factors, sum of indices).
struct Grade {
  int length = 0;
  long degree = 0;
  auto operator<=>(const Grade&) const = default;
};

Grade grade_of(const FreeWord& w);

/// Normal-ordered basis monomial: weakly decreasing index word.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  /// Throws std::invalid_argument unless indices are weakly decreasing.
  explicit PBWMonomial(FreeWord indices);

  static bool is_normal_ordered(const FreeWord& w);

  const FreeWord& indices() const { return idx_; }
  bool empty() const { return idx_.empty(); }
  int length() const { return static_cast<int>(idx_.size()); }
  Grade grade() const { return grade_of(idx_); }
  int head() const { return idx_.front(); }  // the maximum index
  int back() const { return idx_.back(); }   // the minimum index
  PBWMonomial tail() const;                  // drop the leading factor
  PBWMonomial without(int pos) const;        // drop factor at position pos

  /// Lexicographic order on index words (shorter prefixes first).
  std::strong_ordering operator<=>(const PBWMonomial& o) const;
  bool operator==(const PBWMonomial& o) const = default;

 private:
  FreeWord idx_;
};

/// Truncation descriptor generating a finite weight-space basis: the
/// weakly decreasing `length`-tuples with entries in [lo, hi] summing to
/// `degree`.
struct WeightWindow {
  int length = 0;
  long degree = 0;
  int lo = 0;
  int hi = 0;
};

/// All monomials of the window in ascending lexicographic order.
std::vector<PBWMonomial> enumerate_window(const WeightWindow& w);
std::vector<PBWMonomial> enumerate_window(int length, long degree, int lo, int hi);

/// All normal-ordered monomials with length <= max_len, indices in [lo, hi],
/// sorted by (length, lex). The empty monomial is included.
std::vector<PBWMonomial> enumerate_pbw(int max_len, int lo, int hi);

/// Literal form "[i1,i2,...,ik]"; parse throws std::invalid_argument.
std::string word_text(const FreeWord& w);
FreeWord parse_word(const std::string& text);

}  // namespace imverma
