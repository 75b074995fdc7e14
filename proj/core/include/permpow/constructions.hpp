#pragma once

#include <cstddef>
#include <filesystem>
#include <limits>
#include <vector>

#include "permpow/enumerate.hpp"
#include "permpow/permutation.hpp"

namespace permpow {

/// A strong id_{k+1}-avoider of length k^3 assembled from k blocks of
/// length k^2, with blocks = (mu_1, ..., mu_k) and
/// assembled = mu_1 (-) mu_2 (-) ... (-) mu_k.
struct Theorem1Witness {
  int k = 0;
  std::vector<Permutation> blocks;
  Permutation assembled;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// All members of Av_{k^2}(id_{k+1}, delta_{k+1}) fixed by reverse-complement
/// (or, with self_rotation, by the quarter rotation), in lexicographic order.
std::vector<Permutation> self_rc_block_candidates(int k, bool self_rotation = false,
                                                  const EnumerationLimits& limits = {});

/// Reads candidate blocks from a file (one permutation per line, produced by
/// an earlier run) and validates every entry against the same membership and
/// symmetry conditions. Spares the S_{k^2} scan for larger k.
std::vector<Permutation> load_block_candidates(const std::filesystem::path& file, int k,
                                               bool self_rotation = false);

/// Witnesses built by choosing the first half of the blocks among the
/// self-reverse-complement candidates (plus a self-rotation middle block for
/// odd k) and mirroring the rest by rotation. Every witness is verified
/// before it is returned.
std::vector<Theorem1Witness> theorem1_witnesses(int k, std::size_t limit = kNoLimit,
                                                const EnumerationLimits& limits = {});

/// As above, with candidate lists supplied by the caller (e.g. from a cache
/// file). rot_candidates may be empty when k is even.
std::vector<Theorem1Witness> theorem1_witnesses_from(
    int k, const std::vector<Permutation>& rc_candidates,
    const std::vector<Permutation>& rot_candidates, std::size_t limit = kNoLimit);

/// Checks the block identities, the square block structure, and strong
/// id_{k+1}-avoidance; throws VerificationError on any failure.
void verify_theorem1_witness(const Theorem1Witness& w);

/// Order-3 member of Av_{k^3}(id_{k+1}): the concatenation of the words
/// zeta_{k,j} = (k^2-j)(2k^2-j)...(k^3-j) for j = 0..k^2-1.
Permutation zeta(int k);

/// The square of zeta_k: concatenation of eta_{k,j} for j = k-1..0 with
/// eta_{k,j} = (k^3-j)(k^3-j-k)...(k^3-j-(k^2-1)k).
Permutation eta(int k);

/// Checks zeta^2 = eta, zeta o eta = id, both avoid id_{k+1}, and (k >= 2)
/// that the order is 3.
void verify_zeta(int k);

/// The r-cycle 2 3 ... r 1; its non-identity powers are skew sums of two
/// identity permutations.
Permutation cyclic_witness(int r);

/// Checks order r and the skew-of-identities power structure, plus powerful
/// avoidance of the supplied sample patterns.
void verify_cyclic_witness(int r, const std::vector<Permutation>& sample_patterns = {});

/// Cyclic permutation (m+1) 1 2 .. (m-1) (m+2) .. n m with m = floor(n/2);
/// has order n and powerfully avoids 3412.
Permutation witness_3412(int n);

void verify_witness_3412(int n);

/// The order-12 member 53827614 of SAv_8(123).
Permutation example_order12();

void verify_example_order12();

} // namespace permpow
