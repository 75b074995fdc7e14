#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permpow/bigint.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is allowed and denotes the shape with no boxes.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// The p x q rectangle (q repeated p times); empty when p or q is 0.
  static Partition rectangle(int p, int q);

  /// Comma-separated parts, e.g. "3,3,1". Empty string is the empty shape.
  static Partition parse(std::string_view text);

  int rows() const { return static_cast<int>(parts_.size()); }
  int size() const; // number of boxes
  const std::vector<int>& parts() const { return parts_; }

  std::string str() const;
  bool operator==(const Partition& rhs) const = default;
  bool operator<(const Partition& rhs) const { return parts_ < rhs.parts_; }

private:
  std::vector<int> parts_;
};

/// A standard Young tableau: the boxes of a shape filled with 1..n,
/// strictly increasing along rows and down columns.
class StandardTableau {
public:
  StandardTableau() = default;
  explicit StandardTableau(std::vector<std::vector<int>> rows);

  /// Rows separated by '/', entries comma-separated, e.g. "1,3/2".
  static StandardTableau parse(std::string_view text);

  Partition shape() const;
  int size() const;
  int at(int row, int col) const { return rows_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::string str() const;
  bool operator==(const StandardTableau& rhs) const = default;
  bool operator<(const StandardTableau& rhs) const { return rows_ < rhs.rows_; }

private:
  std::vector<std::vector<int>> rows_;
};

std::ostream& operator<<(std::ostream& os, const StandardTableau& t);

/// Southeast-perimeter profile of a shape over the alphabet {v, h}, read
/// from the bottom-left corner to the top-right one.
struct ProfileWord {
  std::string letters;
  bool operator==(const ProfileWord& rhs) const = default;
};

ProfileWord profile_word(const Partition& shape);

/// Strips leading v's and trailing h's; a word with only one letter kind
/// normalizes to the empty word.
ProfileWord normalize_profile(ProfileWord word);

/// Shape whose profile equals the given word after normalization.
Partition partition_from_profile(const ProfileWord& word);

/// Row-insertion RSK: p -> (P, Q) of equal shape, Q recording the order in
/// which boxes are created.
std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p);

/// Inverse of rsk: unique p with rsk(p) == (P, Q).
Permutation rsk_inverse(const StandardTableau& P, const StandardTableau& Q);

StandardTableau transpose(const StandardTableau& t);

/// Schuetzenberger evacuation: repeatedly delete the (1,1) entry, slide the
/// hole to a corner by moving in the smaller of its right/below neighbors,
/// and record n+1-t in the vacated corner.
StandardTableau evacuate(const StandardTableau& t);

bool is_self_evacuating(const StandardTableau& t);

/// All standard tableaux of the shape, ordered by row-reading word.
/// Shapes above the bound are refused (the count grows too fast).
std::vector<StandardTableau> enumerate_syt(const Partition& shape, int max_boxes = 12);

/// All partitions of n in reverse-lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Hook-length formula count f^shape.
BigInt hook_length_count(const Partition& shape);

/// Barnes G-function on integers: G(n) = prod_{j=1}^{n-2} j!, n >= 2.
BigInt barnes_g(long long n);

/// Rectangle tableau count via the Barnes-G identity
/// f^{p x q} = (pq)! G(p+1) G(q+1) / G(p+q+1). Agrees with the hook formula.
BigInt rect_count_via_barnes(int p, int q);

/// Splits a shape along its profile word into the odd- and even-position
/// quotient shapes (lambda^o, lambda^e).
std::pair<Partition, Partition> partition_quotient(const Partition& shape);

/// Number of self-evacuating k x k standard tableaux,
/// binom(floor(k^2/2), floor(k^2/4)) * (f^{floor(k/2) x ceil(k/2)})^2.
BigInt count_self_evacuating_rect(int k);

/// (lower, upper) bounds for the number of strong id_{k+1}-avoiders of
/// length k^3: lower = count_self_evacuating_rect(k)^k, upper = (f^{k^2 x k})^2.
std::pair<BigInt, BigInt> sav_bounds(int k);

} // namespace permpow
