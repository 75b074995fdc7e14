#include "permpow/tableaux.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "permpow/errors.hpp"

namespace permpow {

namespace {

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("bad integer: '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) next = text.size();
    out.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::rectangle(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("rectangle: negative side");
  if (p == 0 || q == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(p), q));
}

Partition Partition::parse(std::string_view text) {
  if (text.empty()) return Partition();
  std::vector<int> parts;
  for (auto piece : split(text, ',')) parts.push_back(parse_int(piece));
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(parts_[i]);
  }
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& row = rows_[r];
    if (row.empty())
      throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && row.size() > rows_[r - 1].size())
      throw std::invalid_argument("tableau shape must be a partition");
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int v = row[c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("tableau entries must be exactly 1..n");
      seen[static_cast<std::size_t>(v)] = 1;
      if (c > 0 && row[c - 1] >= v)
        throw std::invalid_argument("tableau rows must strictly increase");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau columns must strictly increase");
    }
  }
}

StandardTableau StandardTableau::parse(std::string_view text) {
  if (text.empty()) return StandardTableau();
  std::vector<std::vector<int>> rows;
  for (auto row_text : split(text, '/')) {
    std::vector<int> row;
    for (auto piece : split(row_text, ',')) row.push_back(parse_int(piece));
    rows.push_back(std::move(row));
  }
  return StandardTableau(std::move(rows));
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int StandardTableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::string StandardTableau::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out.push_back('/');
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out.push_back(',');
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const StandardTableau& t) { return os << t.str(); }

ProfileWord profile_word(const Partition& shape) {
  ProfileWord w;
  const auto& parts = shape.parts();
  const int r = shape.rows();
  for (int i = r - 1; i >= 0; --i) {
    const int below = (i + 1 < r) ? parts[static_cast<std::size_t>(i) + 1] : 0;
    w.letters.append(static_cast<std::size_t>(parts[static_cast<std::size_t>(i)] - below), 'h');
    w.letters.push_back('v');
  }
  return w;
}

ProfileWord normalize_profile(ProfileWord word) {
  auto& s = word.letters;
  const auto first_h = s.find('h');
  if (first_h == std::string::npos) {
    s.clear();
    return word;
  }
  s.erase(0, first_h);
  const auto last_v = s.rfind('v');
  if (last_v == std::string::npos) {
    s.clear();
    return word;
  }
  s.erase(last_v + 1);
  return word;
}

Partition partition_from_profile(const ProfileWord& word) {
  const ProfileWord w = normalize_profile(word);
  std::vector<int> parts_bottom_up;
  int h_count = 0;
  for (char c : w.letters) {
    if (c == 'h')
      ++h_count;
    else if (c == 'v')
      parts_bottom_up.push_back(h_count);
    else
      throw std::invalid_argument("profile word letters must be 'v' or 'h'");
  }
  std::vector<int> parts(parts_bottom_up.rbegin(), parts_bottom_up.rend());
  return Partition(std::move(parts));
}

std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p) {
  std::vector<std::vector<int>> prows, qrows;
  for (int i = 1; i <= p.size(); ++i) {
    int v = p(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == prows.size()) {
        prows.emplace_back();
        qrows.emplace_back();
      }
      auto& row = prows[r];
      auto it = std::upper_bound(row.begin(), row.end(), v);
      if (it == row.end()) {
        row.push_back(v);
        qrows[r].push_back(i);
        break;
      }
      std::swap(*it, v); // bump the displaced entry into the next row
    }
  }
  return {StandardTableau(std::move(prows)), StandardTableau(std::move(qrows))};
}

Permutation rsk_inverse(const StandardTableau& P, const StandardTableau& Q) {
  if (P.shape() != Q.shape())
    throw std::invalid_argument("rsk_inverse: shape mismatch");
  const int n = P.size();
  auto prows = P.rows();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int t = n; t >= 1; --t) {
    // locate t in Q; standardness puts it in a removable corner
    std::size_t r = 0, c = 0;
    bool found = false;
    for (std::size_t i = 0; i < Q.rows().size() && !found; ++i)
      for (std::size_t j = 0; j < Q.rows()[i].size() && !found; ++j)
        if (Q.rows()[i][j] == t) {
          r = i;
          c = j;
          found = true;
        }
    int v = prows[r][c];
    prows[r].pop_back();
    if (prows[r].empty()) prows.pop_back();
    for (std::size_t i = r; i-- > 0;) {
      auto& row = prows[i];
      auto it = std::lower_bound(row.begin(), row.end(), v);
      --it; // rightmost entry smaller than v; exists since the bump came from here
      std::swap(*it, v);
    }
    word[static_cast<std::size_t>(t) - 1] = v;
  }
  return Permutation(std::move(word));
}

StandardTableau transpose(const StandardTableau& t) {
  const auto& rows = t.rows();
  if (rows.empty()) return StandardTableau();
  std::vector<std::vector<int>> cols(rows[0].size());
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return StandardTableau(std::move(cols));
}

StandardTableau evacuate(const StandardTableau& t) {
  auto work = t.rows();
  const int n = t.size();
  std::vector<std::vector<int>> out = t.rows(); // same shape; entries overwritten
  for (int step = 1; step <= n; ++step) {
    std::size_t i = 0, j = 0;
    for (;;) {
      const bool has_right = j + 1 < work[i].size();
      const bool has_below = i + 1 < work.size() && j < work[i + 1].size();
      if (!has_right && !has_below) break;
      if (!has_below || (has_right && work[i][j + 1] < work[i + 1][j])) {
        work[i][j] = work[i][j + 1];
        ++j;
      } else {
        work[i][j] = work[i + 1][j];
        ++i;
      }
    }
    out[i][j] = n + 1 - step;
    work[i].pop_back();
    if (work[i].empty()) work.pop_back();
  }
  return StandardTableau(std::move(out));
}

bool is_self_evacuating(const StandardTableau& t) { return evacuate(t) == t; }

std::vector<StandardTableau> enumerate_syt(const Partition& shape, int max_boxes) {
  const int n = shape.size();
  if (n > max_boxes)
    throw ResourceLimitError("enumerate_syt: shape has " + std::to_string(n) +
                             " boxes, bound is " + std::to_string(max_boxes));
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  const auto& parts = shape.parts();

  auto rec = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.emplace_back(rows);
      return;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const bool row_open = static_cast<int>(rows[r].size()) < parts[r];
      const bool above_longer = r == 0 || rows[r - 1].size() > rows[r].size();
      if (row_open && above_longer) {
        rows[r].push_back(v);
        self(self, v + 1);
        rows[r].pop_back();
      }
    }
  };
  rec(rec, 1);

  auto reading_word = [](const StandardTableau& t) {
    std::vector<int> w;
    for (const auto& row : t.rows()) w.insert(w.end(), row.begin(), row.end());
    return w;
  };
  std::sort(out.begin(), out.end(), [&](const StandardTableau& a, const StandardTableau& b) {
    return reading_word(a) < reading_word(b);
  });
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt hook_length_count(const Partition& shape) {
  const auto& parts = shape.parts();
  const int n = shape.size();
  std::vector<int> col_heights(parts.empty() ? 0 : static_cast<std::size_t>(parts[0]), 0);
  for (int part : parts)
    for (int j = 0; j < part; ++j) ++col_heights[static_cast<std::size_t>(j)];
  BigInt result = big_factorial(n);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int j = 0; j < parts[i]; ++j) {
      const int arm = parts[i] - j - 1;
      const int leg = col_heights[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      result /= arm + leg + 1; // hook lengths divide n! exactly
    }
  return result;
}

BigInt barnes_g(long long n) {
  if (n < 2) throw std::invalid_argument("barnes_g: defined for n >= 2");
  BigInt result = 1;
  for (long long j = 1; j <= n - 2; ++j) result *= big_factorial(j);
  return result;
}

BigInt rect_count_via_barnes(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("rect_count_via_barnes: need p, q >= 1");
  return big_factorial(static_cast<long long>(p) * q) * barnes_g(p + 1) * barnes_g(q + 1) /
         barnes_g(static_cast<long long>(p) + q + 1);
}

std::pair<Partition, Partition> partition_quotient(const Partition& shape) {
  const ProfileWord w = profile_word(shape);
  ProfileWord odd, even;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i % 2 == 0)
      odd.letters.push_back(w.letters[i]); // 1-based odd positions
    else
      even.letters.push_back(w.letters[i]);
  }
  return {partition_from_profile(odd), partition_from_profile(even)};
}

BigInt count_self_evacuating_rect(int k) {
  if (k < 1) throw std::invalid_argument("count_self_evacuating_rect: need k >= 1");
  const long long half = static_cast<long long>(k) * k / 2;
  const long long quarter = static_cast<long long>(k) * k / 4;
  const BigInt f = hook_length_count(Partition::rectangle(k / 2, (k + 1) / 2));
  return big_binomial(half, quarter) * f * f;
}

std::pair<BigInt, BigInt> sav_bounds(int k) {
  if (k < 1) throw std::invalid_argument("sav_bounds: need k >= 1");
  const BigInt lower = big_pow(count_self_evacuating_rect(k), static_cast<unsigned long long>(k));
  const BigInt f_tall = hook_length_count(Partition::rectangle(k * k, k));
  return {lower, f_tall * f_tall};
}

} // namespace permpow
