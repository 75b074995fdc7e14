// Acceptance campaign: every enumerative claim the library makes is checked
// here against brute-force oracles at desk scale, one PASS/FAIL line per
// criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <vector>

#include "permpow/constructions.hpp"
#include "permpow/enumerate.hpp"
#include "permpow/series.hpp"
#include "permpow/tableaux.hpp"

using namespace permpow;

namespace {

int g_failures = 0;

struct Criterion {
  int number;
  std::string title;
  long long budget_millis; // 0 = no explicit budget
};

void run_criterion(const Criterion& c, const std::function<bool(std::ostream&)>& body) {
  std::ostringstream detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << " exception: " << e.what();
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (c.budget_millis > 0 && elapsed > c.budget_millis) {
    ok = false;
    detail << " (budget " << c.budget_millis << " ms exceeded)";
  }
  if (!ok) ++g_failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " ["
            << elapsed << " ms]" << detail.str() << '\n';
}

BigInt count_query(int n, std::vector<Permutation> patterns, AvoidanceMode mode,
                   std::optional<std::set<long long>> orders = {}) {
  AvoidanceQuery q;
  q.n = n;
  q.patterns = std::move(patterns);
  q.mode = mode;
  q.order_set = std::move(orders);
  return enumerate(q).count;
}

Permutation pp(const char* text) { return Permutation::parse(text); }

} // namespace

int main() {
  const Permutation p132 = pp("132"), p231 = pp("231"), p312 = pp("312"), p321 = pp("321");
  const Permutation p123 = pp("123"), p3421 = pp("3421"), p3412 = pp("3412");
  const Permutation p1342 = pp("1342"), p2413 = pp("2413");

  run_criterion({1, "|SAv_n(132,231)| = n for 1 <= n <= 10", 120'000}, [&](std::ostream& why) {
    for (int n = 1; n <= 10; ++n) {
      const BigInt got = count_query(n, {p132, p231}, AvoidanceMode::strong);
      if (got != n) {
        why << " n=" << n << " got " << got;
        return false;
      }
    }
    return true;
  });

  run_criterion({2, "|SAv_n(132,3421)| = 2n^2-7n+8 and increments 4n-9", 0},
                [&](std::ostream& why) {
                  BigInt previous = 0;
                  for (int n = 2; n <= 10; ++n) {
                    const BigInt got = count_query(n, {p132, p3421}, AvoidanceMode::strong);
                    if (got != theorem3_formula(n)) {
                      why << " n=" << n << " got " << got;
                      return false;
                    }
                    if (n >= 4 && got - previous != BigInt(4) * n - 9) {
                      why << " increment at n=" << n << " got " << (got - previous);
                      return false;
                    }
                    previous = got;
                  }
                  return true;
                });

  run_criterion({3, "|SAv_n(321,3412)| matches 1/(1-x-x^2-2x^3) for 1 <= n <= 10", 0},
                [&](std::ostream& why) {
                  const auto coeffs = expand(theorem4_gf(), 10);
                  for (int n = 1; n <= 10; ++n) {
                    const BigInt got = count_query(n, {p321, p3412}, AvoidanceMode::strong);
                    if (got != coeffs[static_cast<std::size_t>(n)]) {
                      why << " n=" << n << " got " << got;
                      return false;
                    }
                  }
                  return true;
                });

  run_criterion(
      {4, "order-{1,3} avoider counts match (x+x^3+x^5)/(1-x-3x^3-x^5); B/(1-B) to N=20", 0},
      [&](std::ostream& why) {
        const auto coeffs = expand(theorem2_gf(), 20);
        const std::set<long long> orders{1, 3};
        for (int n = 1; n <= 10; ++n) {
          const BigInt a = count_query(n, {p312}, AvoidanceMode::plain, orders);
          const BigInt b = count_query(n, {p231}, AvoidanceMode::plain, orders);
          if (a != coeffs[static_cast<std::size_t>(n)] || b != coeffs[static_cast<std::size_t>(n)]) {
            why << " n=" << n << " got 312:" << a << " 231:" << b;
            return false;
          }
        }
        const RationalGF B = theorem2_block_gf();
        const RationalGF quotient{B.numerator, B.denominator - B.numerator};
        if (expand(quotient, 20) != coeffs) {
          why << " B/(1-B) differs from the stated series";
          return false;
        }
        return true;
      });

  run_criterion({5, "k=2 bounds bracket the exact count; theorem1 witnesses verify; "
                    "|SAv_9(123)| = 0",
                 60'000},
                [&](std::ostream& why) {
                  const auto [lower, upper] = sav_bounds(2);
                  if (lower != 4 || upper != 196) {
                    why << " bounds (" << lower << "," << upper << ")";
                    return false;
                  }
                  const BigInt exact = sav_exact_small(2);
                  if (exact < lower || exact > upper) {
                    why << " exact " << exact << " outside [4,196]";
                    return false;
                  }
                  why << " exact |SAv_8(123)| = " << exact << ";";
                  const auto witnesses = theorem1_witnesses(2);
                  if (witnesses.size() != 4) {
                    why << " expected 4 witnesses, got " << witnesses.size();
                    return false;
                  }
                  for (const auto& w : witnesses) verify_theorem1_witness(w);
                  if (count_query(9, {p123}, AvoidanceMode::strong) != 0) {
                    why << " |SAv_9(123)| nonzero";
                    return false;
                  }
                  return true;
                });

  run_criterion({6, "self-evacuating rectangle counts 1, 2, 6 match brute evacuation", 0},
                [&](std::ostream& why) {
                  const long long expected[] = {0, 1, 2, 6};
                  for (int k = 1; k <= 3; ++k) {
                    const auto all = enumerate_syt(Partition::rectangle(k, k));
                    if (k == 3 && all.size() != 42) {
                      why << " 3x3 shape has " << all.size() << " tableaux";
                      return false;
                    }
                    BigInt brute = 0;
                    for (const auto& t : all)
                      if (is_self_evacuating(t)) ++brute;
                    if (brute != expected[k] || count_self_evacuating_rect(k) != expected[k]) {
                      why << " k=" << k << " brute " << brute << " formula "
                          << count_self_evacuating_rect(k);
                      return false;
                    }
                  }
                  return true;
                });

  run_criterion({7, "RSK identity suite over S_n (n <= 6); evacuation involution to 8 boxes",
                 60'000},
                [&](std::ostream& why) {
                  for (int n = 0; n <= 6; ++n) {
                    std::vector<int> word(static_cast<std::size_t>(n));
                    std::iota(word.begin(), word.end(), 1);
                    do {
                      const Permutation p{std::vector<int>(word)};
                      const auto [P, Q] = rsk(p);
                      const auto [Pi, Qi] = rsk(inverse(p));
                      const auto [Pr, Qr] = rsk(reverse(p));
                      const auto [Po, Qo] = rsk(rotate(p));
                      const bool ok =
                          P.shape() == Q.shape() &&
                          (n == 0 || (static_cast<int>(P.rows()[0].size()) == lis(p) &&
                                      static_cast<int>(P.rows().size()) == lds(p))) &&
                          Pi == Q && Qi == P && Pr == transpose(P) &&
                          Qr == evacuate(transpose(Q)) && Po == transpose(Q) &&
                          Qo == evacuate(transpose(P)) &&
                          ((p == rotate(p)) == (P == transpose(Q) && is_self_evacuating(Q))) &&
                          ((p == reverse_complement(p)) ==
                           (is_self_evacuating(P) && is_self_evacuating(Q)));
                      if (!ok) {
                        why << " counterexample " << p.str();
                        return false;
                      }
                    } while (std::next_permutation(word.begin(), word.end()));
                  }
                  for (int n = 0; n <= 8; ++n)
                    for (const auto& shape : partitions_of(n))
                      for (const auto& t : enumerate_syt(shape))
                        if (evacuate(evacuate(t)) != t ||
                            evacuate(transpose(t)) != transpose(evacuate(t))) {
                          why << " evacuation failure on " << t.str();
                          return false;
                        }
                  return true;
                });

  run_criterion({8, "hook-length formula = enumeration (<= 10 boxes), = Barnes-G on rectangles",
                 0},
                [&](std::ostream& why) {
                  for (int n = 0; n <= 10; ++n)
                    for (const auto& shape : partitions_of(n))
                      if (hook_length_count(shape) !=
                          static_cast<long long>(enumerate_syt(shape, 10).size())) {
                        why << " shape " << shape.str();
                        return false;
                      }
                  for (int p = 1; p <= 10; ++p)
                    for (int q = 1; p * q <= 10; ++q)
                      if (rect_count_via_barnes(p, q) !=
                          hook_length_count(Partition::rectangle(p, q))) {
                        why << " rectangle " << p << "x" << q;
                        return false;
                      }
                  return true;
                });

  run_criterion(
      {9, "Xi(231) searches, cyclic and 3412 witnesses, |PAv_n(231)| = 2^(n-1)",
       0},
      [&](std::ostream& why) {
        for (long long r = 3; r <= 7; ++r)
          if (xi_witness(p231, r, 7)) {
            why << " unexpected witness for order " << r;
            return false;
          }
        for (int r = 1; r <= 8; ++r) {
          const Permutation c = cyclic_witness(r);
          if (order(c) != r) {
            why << " cyclic order " << r;
            return false;
          }
          Permutation pw = Permutation::identity(r);
          for (int j = 1; j <= r; ++j) {
            pw = compose(pw, c);
            if (contains(pw, p2413)) {
              why << " power " << j << " of cyclic r=" << r << " contains 2413";
              return false;
            }
          }
        }
        for (int n = 2; n <= 10; ++n) {
          const Permutation w = witness_3412(n);
          if (order(w) != n) {
            why << " witness_3412(" << n << ") order";
            return false;
          }
          Permutation pw = Permutation::identity(n);
          for (int j = 1; j <= n; ++j) {
            pw = compose(pw, w);
            if (contains(pw, p3412)) {
              why << " power " << j << " of witness_3412(" << n << ") contains 3412";
              return false;
            }
          }
        }
        for (int n = 1; n <= 10; ++n)
          if (count_query(n, {p231}, AvoidanceMode::powerful) !=
              big_pow(2, static_cast<unsigned long long>(n - 1))) {
            why << " |PAv_" << n << "(231)|";
            return false;
          }
        return true;
      });

  run_criterion({10, "zeta/eta constructions for k in {2,3,4}; 53827614 strongly avoids 123 "
                     "with order 12",
                 0},
                [&](std::ostream& why) {
                  for (int k = 2; k <= 4; ++k) {
                    const Permutation z = zeta(k), e = eta(k);
                    if (order(z) != 3 || power(z, 2) != e ||
                        compose(z, e) != Permutation::identity(k * k * k) || lis(z) > k ||
                        lis(e) > k) {
                      why << " k=" << k;
                      return false;
                    }
                  }
                  const Permutation p = example_order12();
                  if (order(p) != 12 || contains(p, p123) || contains(power(p, 2), p123)) {
                    why << " order-12 example";
                    return false;
                  }
                  return true;
                });

  run_criterion(
      {11, "conjecture report: |SAv_n(321,1342)| vs 2F(n+2)-n-2 for n <= 10 (status only)", 0},
      [&](std::ostream& why) {
        int mismatches = 0;
        for (int n = 1; n <= 10; ++n) {
          const BigInt got = count_query(n, {p321, p1342}, AvoidanceMode::strong);
          const BigInt predicted = conjecture_321_1342(n);
          if (got != predicted) {
            ++mismatches;
            std::cout << "WARN conjecture mismatch at n=" << n << ": counted " << got
                      << ", predicted " << predicted << '\n';
          }
        }
        why << (mismatches == 0 ? " all values match"
                                : " " + std::to_string(mismatches) + " mismatches surfaced");
        return true; // a mismatch is surfaced, not a build failure
      });

  std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
            << (11 - g_failures) << "/11 criteria)\n";
  return g_failures;
}
