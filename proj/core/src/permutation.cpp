#include "permpow/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace permpow {

namespace {

void validate_word(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation word is not a bijection on [n]");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer in permutation text: '" + std::string(s) + "'");
  return value;
}

} // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  validate_word(word_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::descending(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.empty()) return Permutation();
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      w.push_back(parse_int(text.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw std::invalid_argument("compact permutation form allows digits 1-9 only");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::str() const {
  std::string out;
  if (size() <= 9) {
    for (int v : word_) out.push_back(static_cast<char>('0' + v));
  } else {
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += std::to_string(word_[i]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.str(); }

Permutation compose(const Permutation& s, const Permutation& m) {
  if (s.size() != m.size())
    throw std::invalid_argument("compose: length mismatch");
  const int n = s.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i) - 1] = s(m(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(p(i)) - 1] = i;
  return Permutation(std::move(w));
}

Permutation power(const Permutation& p, long long k) {
  if (k < 0) return power(inverse(p), -k);
  Permutation base = p;
  Permutation result = Permutation::identity(p.size());
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

long long order(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  long long result = 1;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    long long len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation reverse(const Permutation& p) {
  std::vector<int> w(p.word().rbegin(), p.word().rend());
  return Permutation(std::move(w));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int v : p.word()) w.push_back(n + 1 - v);
  return Permutation(std::move(w));
}

Permutation rotate(const Permutation& p) { return reverse(inverse(p)); }

Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

Permutation sum(const Permutation& s, const Permutation& m) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(s.size() + m.size()));
  for (int v : s.word()) w.push_back(v);
  for (int v : m.word()) w.push_back(v + s.size());
  return Permutation(std::move(w));
}

Permutation skew_sum(const Permutation& s, const Permutation& m) {
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(s.size() + m.size()));
  for (int v : s.word()) w.push_back(v + m.size());
  for (int v : m.word()) w.push_back(v);
  return Permutation(std::move(w));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> orbit;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      orbit.push_back(j);
    }
    if (orbit.size() == 1)
      out.fixed_points.push_back(orbit.front());
    else
      out.cycles.push_back(std::move(orbit));
  }
  // scanning i ascending already yields min-first cycles sorted by minimum
  return out;
}

namespace {

// Backtracking occurrence search. A candidate letter is kept only if it
// agrees with every already-chosen letter on the pattern's relative order,
// and branches without room for the remaining letters are cut.
bool match(std::span<const int> word, std::span<const int> pattern,
           std::size_t word_from, std::size_t next, std::vector<int>& chosen,
           std::size_t pinned_suffix) {
  const std::size_t m = pattern.size();
  if (next + pinned_suffix == m) return true;
  const std::size_t remaining = m - pinned_suffix - next;
  const std::size_t limit = word.size() - pinned_suffix;
  for (std::size_t i = word_from; i + remaining <= limit; ++i) {
    const int v = word[i];
    bool ok = true;
    for (std::size_t j = 0; ok && j < m; ++j) {
      if (j < next || j >= m - pinned_suffix) {
        const int u = chosen[j];
        ok = (pattern[j] < pattern[next]) == (u < v);
      }
    }
    if (!ok) continue;
    chosen[next] = v;
    if (match(word, pattern, i + 1, next + 1, chosen, pinned_suffix)) return true;
  }
  return false;
}

} // namespace

bool contains_pattern(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() > word.size()) return false;
  std::vector<int> chosen(pattern.size());
  return match(word, pattern, 0, 0, chosen, 0);
}

bool contains_pattern_at_back(std::span<const int> word, std::span<const int> pattern) {
  if (pattern.empty()) return true;
  if (pattern.size() > word.size()) return false;
  std::vector<int> chosen(pattern.size());
  chosen[pattern.size() - 1] = word.back();
  return match(word, pattern, 0, 0, chosen, 1);
}

bool contains(const Permutation& p, const Permutation& t) {
  // Monotone patterns reduce to subsequence-length checks.
  if (t == Permutation::identity(t.size())) return lis(p) >= t.size();
  if (t == Permutation::descending(t.size())) return lds(p) >= t.size();
  return contains_pattern(p.word(), t.word());
}

bool avoids(const Permutation& p, const Permutation& t) { return !contains(p, t); }

bool is_layered(const Permutation& p) {
  const int n = p.size();
  int i = 0;
  while (i < n) {
    const int top = p(i + 1);
    const int len = top - i;
    if (len < 1 || i + len > n) return false;
    for (int j = 0; j < len; ++j)
      if (p(i + 1 + j) != top - j) return false;
    i += len;
  }
  return true;
}

bool is_sum_indecomposable(const Permutation& p) {
  if (p.empty())
    throw std::invalid_argument("is_sum_indecomposable: empty permutation");
  int running_max = 0;
  for (int i = 1; i < p.size(); ++i) {
    running_max = std::max(running_max, p(i));
    if (running_max == i) return false;
  }
  return true;
}

int lis_word(std::span<const int> word) {
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

int lis(const Permutation& p) { return lis_word(p.word()); }

int lds(const Permutation& p) {
  std::vector<int> rev_word(p.word().rbegin(), p.word().rend());
  return lis_word(rev_word);
}

} // namespace permpow
