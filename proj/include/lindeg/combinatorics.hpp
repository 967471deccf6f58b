#pragma once

// Lattice-path parameters, multisegments and rank tuples for the
// equioriented type A_n quiver, with the conversions between them.

#include "lindeg/laurent.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace lindeg {

/// t0_k = min(k, n - k), the componentwise maximum of the parameter set.
int t0_entry(int n, int k);
std::vector<int> t0_tuple(int n);

/// A tuple y = (y_1, ..., y_{n-1}) with 0 <= y_k <= min(k, n-k).
///
/// Indexing with operator[] covers the implicit endpoints y_0 = y_n = 0.
class PTuple {
 public:
  /// Throws std::invalid_argument if the tuple is out of range.
  PTuple(int n, std::vector<int> coords);

  int n() const { return n_; }
  int operator[](int k) const { return (k <= 0 || k >= n_) ? 0 : coords_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& coords() const { return coords_; }
  int total() const;

  /// "(1,2,1)"; the empty tuple prints as "()".
  std::string to_string() const;

  friend auto operator<=>(const PTuple&, const PTuple&) = default;

 private:
  int n_;
  std::vector<int> coords_;
};

/// A Motzkin path from (0,0) to (n,0): x_k >= 0 and |x_k - x_{k-1}| <= 1.
class MotzkinPath {
 public:
  /// Throws std::invalid_argument if `coords` is not a Motzkin path.
  MotzkinPath(int n, std::vector<int> coords);

  static bool is_motzkin(int n, std::span<const int> coords);

  int n() const { return path_.n(); }
  int operator[](int k) const { return path_[k]; }
  const std::vector<int>& coords() const { return path_.coords(); }
  const PTuple& as_ptuple() const { return path_; }
  operator const PTuple&() const { return path_; }  // NOLINT(google-explicit-constructor)
  std::string to_string() const { return path_.to_string(); }

  friend auto operator<=>(const MotzkinPath&, const MotzkinPath&) = default;

 private:
  PTuple path_;
};

namespace detail {

// Values on 1 <= i <= j <= n, stored row-major.
class UpperTriangle {
 public:
  explicit UpperTriangle(int n);

  int n() const { return n_; }
  int at(int i, int j) const { return values_[index(i, j)]; }
  void set(int i, int j, int value) { values_[index(i, j)] = value; }
  /// at(i, j) inside the triangle, 0 outside.
  int get_or_zero(int i, int j) const;
  const std::vector<int>& flat() const { return values_; }

  friend bool operator==(const UpperTriangle&, const UpperTriangle&) = default;
  friend auto operator<=>(const UpperTriangle&, const UpperTriangle&) = default;

 private:
  std::size_t index(int i, int j) const;

  int n_;
  std::vector<int> values_;
};

}  // namespace detail

/// Multiplicities m_{i,j} of the intervals [i, j].
class Multisegment : public detail::UpperTriangle {
 public:
  explicit Multisegment(int n) : UpperTriangle(n) {}

  /// Only intervals of length one and two occur.
  bool is_near_simple() const;
  /// "1,1=2;1,2=1;2,2=2", nonzero entries only, (i,j) ascending.
  std::string to_string() const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
};

/// Rank tuple (r_{i,j}), diagonal included.
class RankTuple : public detail::UpperTriangle {
 public:
  explicit RankTuple(int n) : UpperTriangle(n) {}

  /// Builds a tuple with diagonal n+1 from the off-diagonal order
  /// (r_{1,2}, r_{1,3}, ..., r_{1,n}, r_{2,3}, ..., r_{n-1,n}).
  static RankTuple from_off_diagonal(int n, std::span<const int> values);

  std::vector<int> off_diagonal() const;
  /// "(3,2,3)" in off-diagonal order.
  std::string to_string() const;

  friend bool operator==(const RankTuple&, const RankTuple&) = default;
  friend auto operator<=>(const RankTuple& a, const RankTuple& b) {
    return static_cast<const UpperTriangle&>(a) <=> static_cast<const UpperTriangle&>(b);
  }
};

std::vector<MotzkinPath> enumerate_motzkin(int n);
std::vector<PTuple> enumerate_ptuples(int n);

/// Componentwise a <= b. Throws std::invalid_argument on mismatched n.
bool ptuple_leq(const PTuple& a, const PTuple& b);

/// The near-simple multisegment (a(x), x) with a_l = n+1 - x_l - x_{l-1}.
/// Throws std::invalid_argument when a diagonal entry or x_k would be negative.
Multisegment near_simple_multisegment(int n, std::span<const int> x);
Multisegment path_to_multisegment(const PTuple& x);

RankTuple multisegment_to_rank(const Multisegment& m);
/// Inclusion-exclusion inverse; throws std::invalid_argument on a negative multiplicity.
Multisegment rank_to_multisegment(const RankTuple& r);

RankTuple r1_tuple(int n);
RankTuple rank_from_motzkin(const MotzkinPath& x);
RankTuple hat(const RankTuple& r);
bool geq_r1(const RankTuple& r);

std::vector<MotzkinPath> enumerate_single_peak(int n);
bool has_single_peak(const MotzkinPath& x);
std::vector<RankTuple> pbw_locus_ranks(int n);

BigInt motzkin_number(int n);
BigInt bell_number(int n);

}  // namespace lindeg
