#pragma once

// Exact Laurent polynomials in one variable v over arbitrary-precision
// integers, plus the quantum integers, factorials and binomials built on them.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lindeg {

using BigInt = boost::multiprecision::cpp_int;

/// Degree reported for the zero polynomial; compares below every real degree.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

/// Sparse Laurent polynomial sum_e c_e v^e.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// two polynomials are equal exactly when their term lists are identical.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT

  /// c * v^e.
  static LaurentPoly monomial(BigInt c, int e);
  /// The variable v itself.
  static LaurentPoly v() { return monomial(1, 1); }
  /// Builds from arbitrary (possibly unsorted, repeated, zero) terms.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Dense coefficients c[0], c[1], ... for exponents low, low+1, ...
  static LaurentPoly from_dense(int low, const std::vector<BigInt>& coeffs);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(int exponent) const;

  /// Largest exponent, or kDegreeOfZero.
  int degree() const { return terms_.empty() ? kDegreeOfZero : terms_.back().first; }
  /// Smallest exponent; requires a nonzero polynomial.
  int low_degree() const { return terms_.front().first; }

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  /// Terms with strictly negative exponent.
  LaurentPoly negative_part() const;
  /// Multiplies by v^e.
  LaurentPoly shifted(int e) const;
  /// Sum of coefficients, i.e. the value at v = 1.
  BigInt eval_at_one() const;
  bool is_bar_symmetric() const { return bar() == *this; }

  /// Quotient when `divisor` divides *this exactly in Z[v, v^{-1}].
  std::optional<LaurentPoly> exact_div(const LaurentPoly& divisor) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// this += a * b without materialising the product twice.
  LaurentPoly& add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

  std::vector<Term> terms_;
};

// Free-function spellings of the ring operations.
inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }
inline LaurentPoly negative_part(const LaurentPoly& a) { return a.negative_part(); }
inline int degree(const LaurentPoly& a) { return a.degree(); }

/// Multiplication that never takes the int64 kernel path; used as an oracle.
LaurentPoly mul_bigint_reference(const LaurentPoly& a, const LaurentPoly& b);

/// p^k for k >= 0.
LaurentPoly pow(const LaurentPoly& p, int k);

/// [k]_v = v^{k-1} + v^{k-3} + ... + v^{1-k}; [0]_v = 0. Requires k >= 0.
LaurentPoly qint(int k);
/// [k]_v! with [0]_v! = 1. Requires k >= 0.
LaurentPoly qfact(int k);
/// Gaussian binomial [k choose m]_v; 0 when m < 0 or m > k (including k < 0).
LaurentPoly qbinom(int k, int m);

/// Human-readable expanded form, descending exponents: "v^3 + 2v + 2v^-1 + v^-3".
std::string to_string(const LaurentPoly& p, char var = 'v');

}  // namespace lindeg
