#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "permpow/bigint.hpp"

namespace permpow {

struct EnumerationLimits;

/// Dense integer polynomial; index = degree, trailing zeros normalized away.
class IntPolynomial {
public:
  IntPolynomial() = default; // zero polynomial
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int d) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  bool operator==(const IntPolynomial& rhs) const = default;

private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Rational generating function numerator/denominator. Expandable as a power
/// series whenever the denominator has a nonzero constant term.
struct RationalGF {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// Coefficients 0..N of the power-series expansion, exact integers.
std::vector<BigInt> expand(const RationalGF& gf, int N);

/// (x + x^3 + x^5) / (1 - x - 3x^3 - x^5): 312- and 231-avoiders of order 1 or 3.
RationalGF theorem2_gf();

/// B(x) = x + x^3 (1+x)^2 / (1 - 2x^3), the subseries counting such
/// permutations that end in the entry 1. Cleared form: (x+x^3+x^5)/(1-2x^3).
RationalGF theorem2_block_gf();

/// Coefficients b(0)..b(N) of B(x).
std::vector<BigInt> theorem2_B(int N);

/// 1 / (1 - x - x^2 - 2x^3): strong {321, 3412}-avoiders (constant term 1).
RationalGF theorem4_gf();

/// 2n^2 - 7n + 8 for n >= 2: strong {132, 3421}-avoiders.
BigInt theorem3_formula(long long n);

/// Strong {132, 231}-avoiders of length n: exactly n.
BigInt corollary1_formula(long long n);

/// Fibonacci numbers with F_1 = F_2 = 1.
BigInt fibonacci(long long n);

/// Conjectured count of strong {321, 1342}-avoiders: 2 F_{n+2} - n - 2.
BigInt conjecture_321_1342(long long n);

enum class FormulaStatus { theorem, conjecture };

struct VerifyRow {
  std::string label;
  BigInt expected;
  BigInt actual;
  bool ok;
};

/// One formula-vs-oracle campaign. For theorem-status formulas the campaign
/// stops at the first mismatch and reports failure; conjecture-status
/// mismatches are recorded without failing.
struct VerifyReport {
  std::string formula;
  FormulaStatus status = FormulaStatus::theorem;
  std::vector<VerifyRow> rows;
  bool passed = true;     // gate: false only for theorem-status mismatches
  bool all_match = true;  // data: every row matched
};

/// Registered formula identifiers accepted by verify_formula.
std::vector<std::string> formula_ids();

/// Checks one closed form / generating function against the brute-force
/// enumeration oracle over n_lo..n_hi.
VerifyReport verify_formula(const std::string& kind, int n_lo, int n_hi,
                            const EnumerationLimits& limits);
VerifyReport verify_formula(const std::string& kind, int n_lo, int n_hi);

/// One row of the 132-avoider comparison table: permutations of order at
/// most 3, powerful avoiders, and strong avoiders one length shorter. Data
/// only; no formula is asserted for these sequences.
struct OmegaComparisonRow {
  int n;
  BigInt order_at_most_3;
  BigInt powerful;
  BigInt strong_shorter;
};

std::vector<OmegaComparisonRow> omega132_comparison(int n_hi, const EnumerationLimits& limits);
std::vector<OmegaComparisonRow> omega132_comparison(int n_hi);

} // namespace permpow
