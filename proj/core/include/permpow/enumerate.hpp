#pragma once

#include <optional>
#include <set>
#include <vector>

#include "permpow/bigint.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

enum class AvoidanceMode {
  plain,    ///< p avoids the patterns
  strong,   ///< p and p^2 avoid the patterns
  powerful, ///< every power of p avoids the patterns
};

/// One counting question over S_n.
struct AvoidanceQuery {
  int n = 0;
  std::vector<Permutation> patterns; // nonempty, each of length >= 2
  AvoidanceMode mode = AvoidanceMode::plain;
  std::optional<std::set<long long>> order_set; // keep p only when order(p) is in the set
};

struct EnumerationResult {
  AvoidanceQuery query;
  BigInt count;
  /// Present only when requested and within the retention bound;
  /// lexicographically sorted, one entry per counted permutation.
  std::optional<std::vector<Permutation>> witnesses;
  long long elapsed_millis = 0;
};

struct EnumerationLimits {
  int max_n = 11;        ///< refuse queries beyond this length
  int threads = 1;       ///< subtree parallelism; results independent of the value
  int witness_cap_n = 9; ///< witness retention cutoff
};

/// Counts permutations of length q.n satisfying the query. Permutations are
/// generated by prefix extension; a prefix containing a pattern is pruned
/// (sound for every mode since p itself must avoid the patterns). Strong,
/// powerful and order conditions are checked at the leaves.
EnumerationResult enumerate(const AvoidanceQuery& q, bool keep_witnesses = false,
                            const EnumerationLimits& limits = {});

/// Exact count of strong id_{k+1}-avoiders of length k^3 (k^3 must fit the
/// enumeration bound).
BigInt sav_exact_small(int k, const EnumerationLimits& limits = {});

/// Lexicographically first permutation of order exactly r and length <= n_max
/// whose powers all avoid t; absent if the bounded search exhausts. Exhaustion
/// proves nothing about larger lengths.
std::optional<Permutation> xi_witness(const Permutation& t, long long r, int n_max,
                                      const EnumerationLimits& limits = {});

} // namespace permpow
