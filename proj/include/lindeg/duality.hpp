#pragma once

// Rank tuples of the Knight-Zelevinsky dual of a multisegment.
//
// kz_rank_general evaluates the min-formula over all monotone maps
//   nu : [1,i] x [j,n] -> [i,j],  nu nondecreasing in both arguments,
//   r_{i,j}(dual(m)) = min_nu sum_{(k,l)} m_{nu(k,l)+k-i, nu(k,l)+l-j},
// with m read as 0 outside 1 <= a <= b <= n. It is exponential in the grid
// size and exists as the oracle for the near-simple closed forms.

#include "lindeg/combinatorics.hpp"

#include <cstdint>
#include <functional>

namespace lindeg {

/// A monotone map on the grid [1,i] x [j,n] with values in [i,j].
class MonotoneMap {
 public:
  MonotoneMap(int i, int j, int n);

  int rows() const { return i_; }
  int cols() const { return n_ - j_ + 1; }
  /// nu(k, l) for 1 <= k <= i, j <= l <= n.
  int operator()(int k, int l) const { return values_[cell(k, l)]; }
  void set(int k, int l, int value) { values_[cell(k, l)] = value; }
  bool is_monotone() const;

 private:
  std::size_t cell(int k, int l) const {
    return static_cast<std::size_t>((k - 1) * cols() + (l - j_));
  }

  int i_;
  int j_;
  int n_;
  std::vector<int> values_;
};

/// Visits every monotone map for (i, j, n) in row-major lexicographic order.
void for_each_monotone_map(int i, int j, int n, const std::function<void(const MonotoneMap&)>& visit);
std::uint64_t count_monotone_maps(int i, int j, int n);

/// r_{i,j} of the dual multisegment via the general min-formula.
int kz_rank_general(const Multisegment& m, int i, int j);
RankTuple kz_dual_rank_general(const Multisegment& m);

/// Same quantity for a near-simple m, via min_{i<=p<=q<=r<=j}(m_{p-1,p} + m_{q,q} + m_{r,r+1}).
/// Throws std::invalid_argument if m is not near-simple.
int kz_rank_near_simple(const Multisegment& m, int i, int j);
RankTuple kz_dual_rank_near_simple(const Multisegment& m);

/// Closed form on x' for x in the parameter set:
///   n + 1 - max_{i<=k<=l<=m<=j}(x_{l-1} + x_l - x_{k-1} - x_m).
int kz_rank_simple(const PTuple& x, int i, int j);
RankTuple kz_dual_rank_simple(const PTuple& x);

/// n + 1 - max(0, x_i - x_{i+1}, x_i - x_{i-1}), for 1 <= i <= n-1.
int next_neighbor_rank(const PTuple& x, int i);

/// The x with m = x', if m has that shape.
std::optional<PTuple> as_path_multisegment(const Multisegment& m);

}  // namespace lindeg
