#include "permpow/constructions.hpp"

#include <fstream>
#include <stdexcept>

#include "permpow/errors.hpp"

namespace permpow {

namespace {

void check(bool condition, const std::string& message) {
  if (!condition) throw VerificationError(message);
}

bool is_skew_of_two_identities(const Permutation& p) {
  const int n = p.size();
  for (int a = 1; a < n; ++a) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const int expected = i <= a ? n - a + i : i - a;
      ok = p(i) == expected;
    }
    if (ok) return true;
  }
  return false;
}

} // namespace

std::vector<Permutation> self_rc_block_candidates(int k, bool self_rotation,
                                                  const EnumerationLimits& limits) {
  if (k < 1) throw std::invalid_argument("self_rc_block_candidates: need k >= 1");
  AvoidanceQuery q;
  q.n = k * k;
  q.patterns = {Permutation::identity(k + 1), Permutation::descending(k + 1)};
  EnumerationLimits relaxed = limits;
  relaxed.witness_cap_n = std::max(relaxed.witness_cap_n, q.n);
  const auto all = enumerate(q, true, relaxed);
  std::vector<Permutation> out;
  for (const auto& p : *all.witnesses) {
    const Permutation image = self_rotation ? rotate(p) : reverse_complement(p);
    if (p == image) out.push_back(p);
  }
  return out;
}

std::vector<Permutation> load_block_candidates(const std::filesystem::path& file, int k,
                                               bool self_rotation) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open candidate file: " + file.string());
  const Permutation rising = Permutation::identity(k + 1);
  const Permutation falling = Permutation::descending(k + 1);
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Permutation p = Permutation::parse(line);
    check(p.size() == k * k, "candidate '" + line + "' has wrong length");
    check(avoids(p, rising) && avoids(p, falling),
          "candidate '" + line + "' fails the avoidance conditions");
    const Permutation image = self_rotation ? rotate(p) : reverse_complement(p);
    check(p == image, "candidate '" + line + "' lacks the required symmetry");
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Theorem1Witness> theorem1_witnesses_from(
    int k, const std::vector<Permutation>& rc_candidates,
    const std::vector<Permutation>& rot_candidates, std::size_t limit) {
  if (k < 1) throw std::invalid_argument("theorem1_witnesses: need k >= 1");
  const int half = k / 2;
  const bool odd = k % 2 == 1;
  if (odd && rot_candidates.empty())
    throw std::invalid_argument("theorem1_witnesses: odd k needs self-rotation candidates");
  if (half > 0 && rc_candidates.empty())
    throw std::invalid_argument("theorem1_witnesses: no self-rc candidates");

  std::vector<Theorem1Witness> out;
  // odometer over the free choices, first slot slowest, all lists lexicographic
  std::vector<std::size_t> pick(static_cast<std::size_t>(half) + (odd ? 1 : 0), 0);
  for (;;) {
    if (out.size() >= limit) break;
    Theorem1Witness w;
    w.k = k;
    w.blocks.assign(static_cast<std::size_t>(k), Permutation());
    for (int i = 0; i < half; ++i) {
      const Permutation& mu = rc_candidates[pick[static_cast<std::size_t>(i)]];
      w.blocks[static_cast<std::size_t>(i)] = mu;
      w.blocks[static_cast<std::size_t>(k - 1 - i)] = rotate(mu);
    }
    if (odd) w.blocks[static_cast<std::size_t>(half)] = rot_candidates[pick.back()];
    w.assembled = w.blocks.front();
    for (std::size_t i = 1; i < w.blocks.size(); ++i)
      w.assembled = skew_sum(w.assembled, w.blocks[i]);
    verify_theorem1_witness(w);
    out.push_back(std::move(w));

    // advance odometer, last slot fastest
    std::size_t slot = pick.size();
    for (; slot-- > 0;) {
      const std::size_t base =
          (odd && slot + 1 == pick.size()) ? rot_candidates.size() : rc_candidates.size();
      if (++pick[slot] < base) break;
      pick[slot] = 0;
    }
    if (slot == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<Theorem1Witness> theorem1_witnesses(int k, std::size_t limit,
                                                const EnumerationLimits& limits) {
  const auto rc = self_rc_block_candidates(k, false, limits);
  std::vector<Permutation> rot_list;
  if (k % 2 == 1) rot_list = self_rc_block_candidates(k, true, limits);
  return theorem1_witnesses_from(k, rc, rot_list, limit);
}

void verify_theorem1_witness(const Theorem1Witness& w) {
  const int k = w.k;
  check(k >= 1, "theorem1: k must be positive");
  check(static_cast<int>(w.blocks.size()) == k, "theorem1: expected k blocks");
  const Permutation rising = Permutation::identity(k + 1);
  const Permutation falling = Permutation::descending(k + 1);
  Permutation assembled;
  for (int i = 0; i < k; ++i) {
    const auto& mu = w.blocks[static_cast<std::size_t>(i)];
    check(mu.size() == k * k, "theorem1: block length must be k^2");
    check(avoids(mu, rising) && avoids(mu, falling), "theorem1: block fails avoidance");
    check(mu == rotate(w.blocks[static_cast<std::size_t>(k - 1 - i)]),
          "theorem1: mirrored block identity fails");
    assembled = i == 0 ? mu : skew_sum(assembled, mu);
  }
  check(assembled == w.assembled, "theorem1: assembled word mismatch");

  const Permutation square = compose(w.assembled, w.assembled);
  Permutation delta_blocks;
  for (int i = 0; i < k; ++i) {
    const Permutation delta = Permutation::descending(k * k);
    delta_blocks = i == 0 ? delta : sum(delta_blocks, delta);
  }
  check(square == delta_blocks, "theorem1: square is not the sum of descents");
  check(lis(w.assembled) <= k && lis(square) <= k,
        "theorem1: assembled or square contains id_{k+1}");
}

Permutation zeta(int k) {
  if (k < 1) throw std::invalid_argument("zeta: need k >= 1");
  const int k2 = k * k;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(k2) * static_cast<std::size_t>(k));
  for (int j = 0; j < k2; ++j)
    for (int i = 1; i <= k; ++i) word.push_back(i * k2 - j);
  return Permutation(std::move(word));
}

Permutation eta(int k) {
  if (k < 1) throw std::invalid_argument("eta: need k >= 1");
  const int k2 = k * k;
  const int k3 = k2 * k;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(k3));
  for (int j = k - 1; j >= 0; --j)
    for (int t = 0; t < k2; ++t) word.push_back(k3 - j - t * k);
  return Permutation(std::move(word));
}

void verify_zeta(int k) {
  const Permutation z = zeta(k);
  const Permutation e = eta(k);
  check(power(z, 2) == e, "zeta: square does not equal eta");
  check(compose(z, e) == Permutation::identity(k * k * k), "zeta: zeta o eta is not the identity");
  check(lis(z) <= k && lis(e) <= k, "zeta: id_{k+1} not avoided");
  if (k >= 2) check(order(z) == 3, "zeta: order is not 3");
}

Permutation cyclic_witness(int r) {
  if (r < 1) throw std::invalid_argument("cyclic_witness: need r >= 1");
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(r));
  for (int i = 2; i <= r; ++i) word.push_back(i);
  word.push_back(1);
  return Permutation(std::move(word));
}

void verify_cyclic_witness(int r, const std::vector<Permutation>& sample_patterns) {
  const Permutation c = cyclic_witness(r);
  check(order(c) == r, "cyclic witness: wrong order");
  Permutation pw = c;
  for (int j = 1; j < r; ++j) {
    if (j > 1) pw = compose(pw, c);
    check(is_skew_of_two_identities(pw),
          "cyclic witness: power is not a skew sum of identities");
    for (const auto& t : sample_patterns)
      check(avoids(pw, t), "cyclic witness: power contains " + t.str());
  }
}

Permutation witness_3412(int n) {
  if (n < 2) throw std::invalid_argument("witness_3412: need n >= 2");
  const int m = n / 2;
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(n));
  word.push_back(m + 1);
  for (int i = 1; i <= m - 1; ++i) word.push_back(i);
  for (int i = m + 2; i <= n; ++i) word.push_back(i);
  word.push_back(m);
  return Permutation(std::move(word));
}

void verify_witness_3412(int n) {
  const Permutation p = witness_3412(n);
  check(order(p) == n, "witness_3412: order is not n");
  const Permutation pattern = Permutation::parse("3412");
  Permutation pw = p;
  for (int j = 1; j <= n; ++j) {
    if (j > 1) pw = compose(pw, p);
    check(avoids(pw, pattern), "witness_3412: power " + std::to_string(j) + " contains 3412");
  }
}

Permutation example_order12() { return Permutation::parse("53827614"); }

void verify_example_order12() {
  const Permutation p = example_order12();
  const Permutation rising = Permutation::identity(3);
  check(order(p) == 12, "example_order12: order is not 12");
  check(avoids(p, rising) && avoids(power(p, 2), rising),
        "example_order12: not a strong 123-avoider");
}

} // namespace permpow
