#include "permpow/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>
#include <stdexcept>

#include "permpow/errors.hpp"

namespace permpow {

namespace {

void validate(const AvoidanceQuery& q, const EnumerationLimits& limits) {
  if (q.n < 0) throw std::invalid_argument("enumerate: negative length");
  if (q.n > limits.max_n)
    throw ResourceLimitError("enumerate: n = " + std::to_string(q.n) +
                             " exceeds bound " + std::to_string(limits.max_n));
  if (q.patterns.empty())
    throw std::invalid_argument("enumerate: pattern set must be nonempty");
  for (const auto& t : q.patterns)
    if (t.size() < 2)
      throw std::invalid_argument("enumerate: patterns must have length >= 2");
  if (q.order_set && q.order_set->empty())
    throw std::invalid_argument("enumerate: order set must be nonempty when present");
}

long long order_of_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  long long result = 1;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long long len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = word[static_cast<std::size_t>(j) - 1])
      seen[static_cast<std::size_t>(j)] = 1, ++len;
    result = std::lcm(result, len);
  }
  return result;
}

struct LeafFilter {
  const AvoidanceQuery& q;

  bool accept(const std::vector<int>& word) const {
    long long ord = 0; // computed lazily; >= 1 once known
    if (q.order_set) {
      ord = order_of_word(word);
      if (!q.order_set->count(ord)) return false;
    }
    if (q.mode == AvoidanceMode::plain) return true;

    const Permutation p{std::vector<int>(word)};
    if (q.mode == AvoidanceMode::strong) {
      const Permutation square = compose(p, p);
      for (const auto& t : q.patterns)
        if (contains(square, t)) return false;
      return true;
    }
    // powerful: the prefix pruning already certified p^1
    if (ord == 0) ord = order_of_word(word);
    Permutation pw = p;
    for (long long j = 2; j <= ord; ++j) {
      pw = compose(pw, p);
      for (const auto& t : q.patterns)
        if (contains(pw, t)) return false;
    }
    return true;
  }
};

struct SubtreeResult {
  BigInt count = 0;
  std::vector<Permutation> witnesses;
};

void dfs(const AvoidanceQuery& q, const LeafFilter& filter, bool keep,
         std::vector<int>& prefix, std::vector<char>& used, SubtreeResult& out) {
  if (static_cast<int>(prefix.size()) == q.n) {
    if (filter.accept(prefix)) {
      ++out.count;
      if (keep) out.witnesses.emplace_back(std::vector<int>(prefix));
    }
    return;
  }
  for (int v = 1; v <= q.n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    prefix.push_back(v);
    bool pruned = false;
    for (const auto& t : q.patterns)
      if (contains_pattern_at_back(prefix, t.word())) {
        pruned = true;
        break;
      }
    if (!pruned) {
      used[static_cast<std::size_t>(v)] = 1;
      dfs(q, filter, keep, prefix, used, out);
      used[static_cast<std::size_t>(v)] = 0;
    }
    prefix.pop_back();
  }
}

SubtreeResult search_from(const AvoidanceQuery& q, const LeafFilter& filter, bool keep,
                          int first_value) {
  SubtreeResult out;
  std::vector<int> prefix;
  std::vector<char> used(static_cast<std::size_t>(q.n) + 1, 0);
  prefix.reserve(static_cast<std::size_t>(q.n));
  // patterns have length >= 2, so a single-letter prefix needs no check
  prefix.push_back(first_value);
  used[static_cast<std::size_t>(first_value)] = 1;
  dfs(q, filter, keep, prefix, used, out);
  return out;
}

} // namespace

EnumerationResult enumerate(const AvoidanceQuery& q, bool keep_witnesses,
                            const EnumerationLimits& limits) {
  validate(q, limits);
  const auto start = std::chrono::steady_clock::now();

  const bool keep = keep_witnesses && q.n <= limits.witness_cap_n;
  const LeafFilter filter{q};
  EnumerationResult result;
  result.query = q;
  if (keep) result.witnesses.emplace();

  if (q.n == 0) {
    // S_0 = { empty permutation }: avoids everything, order 1
    const bool ok = !q.order_set || q.order_set->count(1) > 0;
    result.count = ok ? 1 : 0;
    if (keep && ok) result.witnesses->push_back(Permutation());
  } else if (limits.threads <= 1 || q.n == 1) {
    SubtreeResult total;
    for (int v = 1; v <= q.n; ++v) {
      SubtreeResult part = search_from(q, filter, keep, v);
      total.count += part.count;
      if (keep)
        total.witnesses.insert(total.witnesses.end(), part.witnesses.begin(),
                               part.witnesses.end());
    }
    result.count = total.count;
    if (keep) *result.witnesses = std::move(total.witnesses);
  } else {
    // one task per first entry; merging in entry order keeps the result
    // identical to the sequential run
    std::vector<std::future<SubtreeResult>> tasks;
    tasks.reserve(static_cast<std::size_t>(q.n));
    for (int v = 1; v <= q.n; ++v)
      tasks.push_back(std::async(std::launch::async, search_from, std::cref(q),
                                 std::cref(filter), keep, v));
    for (auto& task : tasks) {
      SubtreeResult part = task.get();
      result.count += part.count;
      if (keep)
        result.witnesses->insert(result.witnesses->end(), part.witnesses.begin(),
                                 part.witnesses.end());
    }
  }

  const auto stop = std::chrono::steady_clock::now();
  result.elapsed_millis =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  return result;
}

BigInt sav_exact_small(int k, const EnumerationLimits& limits) {
  if (k < 1) throw std::invalid_argument("sav_exact_small: need k >= 1");
  const long long n = static_cast<long long>(k) * k * k;
  if (n > limits.max_n)
    throw ResourceLimitError("sav_exact_small: k^3 = " + std::to_string(n) +
                             " exceeds bound " + std::to_string(limits.max_n));
  AvoidanceQuery q;
  q.n = static_cast<int>(n);
  q.patterns = {Permutation::identity(k + 1)};
  q.mode = AvoidanceMode::strong;
  return enumerate(q, false, limits).count;
}

namespace {

bool powers_avoid(const Permutation& p, const Permutation& t, long long ord) {
  Permutation pw = p;
  if (contains(pw, t)) return false;
  for (long long j = 2; j <= ord; ++j) {
    pw = compose(pw, p);
    if (contains(pw, t)) return false;
  }
  return true;
}

bool xi_dfs(const Permutation& t, long long r, int n, std::vector<int>& prefix,
            std::vector<char>& used, std::optional<Permutation>& found) {
  if (static_cast<int>(prefix.size()) == n) {
    const long long ord = order_of_word(prefix);
    if (ord != r) return false;
    Permutation p{std::vector<int>(prefix)};
    if (powers_avoid(p, t, ord)) {
      found = std::move(p);
      return true;
    }
    return false;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    prefix.push_back(v);
    if (!contains_pattern_at_back(prefix, t.word())) {
      used[static_cast<std::size_t>(v)] = 1;
      if (xi_dfs(t, r, n, prefix, used, found)) return true;
      used[static_cast<std::size_t>(v)] = 0;
    }
    prefix.pop_back();
  }
  return false;
}

} // namespace

std::optional<Permutation> xi_witness(const Permutation& t, long long r, int n_max,
                                      const EnumerationLimits& limits) {
  if (r < 1) throw std::invalid_argument("xi_witness: order must be >= 1");
  if (n_max > limits.max_n)
    throw ResourceLimitError("xi_witness: n_max = " + std::to_string(n_max) +
                             " exceeds bound " + std::to_string(limits.max_n));
  std::optional<Permutation> found;
  for (int n = 1; n <= n_max && !found; ++n) {
    std::vector<int> prefix;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    xi_dfs(t, r, n, prefix, used, found);
  }
  return found;
}

} // namespace permpow
