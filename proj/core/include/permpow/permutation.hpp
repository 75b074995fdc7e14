#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permpow {

/// A permutation of [n] in one-line notation. Immutable after construction.
///
/// The default-constructed value is the empty permutation (n = 0), which by
/// convention has order 1 and is the identity of both block sums.
class Permutation {
public:
  Permutation() = default;

  /// Builds from a one-line word; every value 1..n must appear exactly once.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  /// The decreasing permutation n (n-1) ... 1.
  static Permutation descending(int n);

  /// Accepts either the compact digit form ("53827614", n <= 9) or the
  /// comma-separated form ("10,1,2,..."). The empty string is the empty
  /// permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// Image of i under the permutation, 1-based.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& word() const { return word_; }

  /// Compact digit form for n <= 9, comma-separated otherwise.
  std::string str() const;

  bool operator==(const Permutation& rhs) const = default;
  bool operator<(const Permutation& rhs) const { return word_ < rhs.word_; }

private:
  std::vector<int> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Orbits of a permutation. Nontrivial cycles are listed min-first and sorted
/// by their minimum; length-1 orbits are collected in fixed_points.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  std::vector<int> fixed_points;
};

/// Group product, apply-right-first: compose(s, m)(i) = s(m(i)).
Permutation compose(const Permutation& s, const Permutation& m);

/// k-th group power; k = 0 gives the identity, negative k inverse powers.
Permutation power(const Permutation& p, long long k);

/// Least k >= 1 with p^k = id; the lcm of the cycle lengths.
long long order(const Permutation& p);

Permutation inverse(const Permutation& p);
Permutation reverse(const Permutation& p);
Permutation complement(const Permutation& p);

/// Plot rotation by 90 degrees counterclockwise: reverse(inverse(p)).
Permutation rotate(const Permutation& p);
Permutation reverse_complement(const Permutation& p);

/// Direct sum: plot of m placed above and to the right of the plot of s.
Permutation sum(const Permutation& s, const Permutation& m);

/// Skew sum: plot of m placed below and to the right of the plot of s.
Permutation skew_sum(const Permutation& s, const Permutation& m);

CycleDecomposition cycle_decomposition(const Permutation& p);

/// True iff some subsequence of p is order-isomorphic to t.
bool contains(const Permutation& p, const Permutation& t);
bool avoids(const Permutation& p, const Permutation& t);

/// True iff p is a sum of decreasing blocks d_{a1} + ... + d_{at}.
bool is_layered(const Permutation& p);

/// True iff no proper prefix maps onto an initial segment {1..l}.
/// The empty permutation is rejected as invalid input.
bool is_sum_indecomposable(const Permutation& p);

/// Longest increasing / decreasing subsequence lengths.
int lis(const Permutation& p);
int lds(const Permutation& p);

/// Pattern containment over an arbitrary word of distinct values (prefixes of
/// a permutation under construction are such words).
bool contains_pattern(std::span<const int> word, std::span<const int> pattern);

/// Containment restricted to occurrences that use the last letter of `word`.
/// Lets enumeration re-test only the new letter after a prefix extension.
bool contains_pattern_at_back(std::span<const int> word, std::span<const int> pattern);

int lis_word(std::span<const int> word);

} // namespace permpow
