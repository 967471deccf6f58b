#include "lindeg/duality.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace lindeg;

namespace {

RankTuple R(int n, std::vector<int> off) { return RankTuple::from_off_diagonal(n, off); }

std::uint64_t binomial_u64(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST_CASE("monotone maps") {
  std::set<std::vector<int>> seen;
  std::uint64_t visits = 0;
  for_each_monotone_map(2, 3, 4, [&](const MonotoneMap& nu) {
    ++visits;
    CHECK(nu.is_monotone());
    std::vector<int> flat;
    for (int k = 1; k <= 2; ++k)
      for (int l = 3; l <= 4; ++l) flat.push_back(nu(k, l));
    seen.insert(flat);
  });
  CHECK(visits == seen.size());
  CHECK(visits == count_monotone_maps(2, 3, 4));

  // (1, n) gives a 1x1 grid with n possible values.
  for (int n = 1; n <= 6; ++n) CHECK(count_monotone_maps(1, n, n) == static_cast<std::uint64_t>(n));

  // One row: nondecreasing sequences of length c over j-i+1 values.
  CHECK(count_monotone_maps(1, 2, 5) == binomial_u64(4 + 2 - 1, 4));
  // Diagonal: i x (n-i+1) grid with the single value i.
  CHECK(count_monotone_maps(3, 3, 5) == 1);

  MonotoneMap bad(2, 2, 3);
  bad.set(1, 2, 2);
  bad.set(1, 3, 2);
  bad.set(2, 2, 2);
  bad.set(2, 3, 2);
  CHECK(bad.is_monotone());
  MonotoneMap out_of_range(1, 2, 2);
  out_of_range.set(1, 2, 3);
  CHECK_FALSE(out_of_range.is_monotone());
  MonotoneMap decreasing(1, 2, 3);
  decreasing.set(1, 2, 2);
  decreasing.set(1, 3, 1);
  CHECK_FALSE(decreasing.is_monotone());
  CHECK_THROWS_AS(MonotoneMap(3, 2, 4), std::invalid_argument);
}

TEST_CASE("kz_rank_general") {
  const Multisegment zero(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) CHECK(kz_rank_general(zero, i, j) == 0);

  // n = 2, x = (1): the dual rank tuple is (3,2,3) with the diagonal.
  const Multisegment m = path_to_multisegment(PTuple(2, {1}));
  CHECK(kz_rank_general(m, 1, 1) == 3);
  CHECK(kz_rank_general(m, 1, 2) == 2);
  CHECK(kz_rank_general(m, 2, 2) == 3);
  CHECK(kz_dual_rank_general(m) == R(2, {2}));
  CHECK(kz_dual_rank_general(path_to_multisegment(PTuple(2, {0}))) == R(2, {3}));
}

TEST_CASE("duality on a single segment") {
  // The dual of one segment [a, b] is the simple multisegment sum of [k, k], a <= k <= b.
  for (int n = 1; n <= 5; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = a; b <= n; ++b) {
        Multisegment seg(n);
        seg.set(a, b, 1);
        Multisegment simple(n);
        for (int k = a; k <= b; ++k) simple.set(k, k, 1);
        CHECK(kz_dual_rank_general(seg) == multisegment_to_rank(simple));
        CHECK(kz_dual_rank_general(simple) == multisegment_to_rank(seg));
      }
    }
  }
}

TEST_CASE("kz_rank_simple") {
  CHECK(kz_rank_simple(PTuple(3, {1, 0}), 2, 3) == 4);
  CHECK(kz_rank_simple(PTuple(3, {1, 1}), 1, 3) == 2);
  for (int n = 1; n <= 6; ++n)
    for (const auto& x : enumerate_ptuples(n))
      for (int i = 1; i <= n; ++i) CHECK(kz_rank_simple(x, i, i) == n + 1);
}

TEST_CASE("general, near-simple and closed forms agree on every x', n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& x : enumerate_ptuples(n)) {
      const Multisegment m = path_to_multisegment(x);
      for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
          const int general = kz_rank_general(m, i, j);
          CHECK(general == kz_rank_simple(x, i, j));
          CHECK(general == kz_rank_near_simple(m, i, j));
        }
      }
      CHECK(kz_dual_rank_general(m) == kz_dual_rank_simple(x));
    }
  }
}

TEST_CASE("near-simple form on random near-simple multisegments") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> mult(0, 3);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      Multisegment m(n);
      for (int k = 1; k <= n; ++k) m.set(k, k, mult(rng));
      for (int k = 1; k < n; ++k) m.set(k, k + 1, mult(rng));
      CHECK(kz_dual_rank_near_simple(m) == kz_dual_rank_general(m));
    }
  }
  Multisegment long_seg(3);
  long_seg.set(1, 3, 1);
  CHECK_THROWS_AS(kz_rank_near_simple(long_seg, 1, 2), std::invalid_argument);
}

TEST_CASE("closed form extends the Motzkin rank formula") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& x : enumerate_motzkin(n)) CHECK(kz_dual_rank_simple(x) == rank_from_motzkin(x));
}

TEST_CASE("Motzkin dichotomy") {
  // r >= r1 on the dual of x' exactly when x is a Motzkin path.
  for (int n = 1; n <= 8; ++n) {
    std::set<PTuple> motzkin;
    for (const auto& x : enumerate_motzkin(n)) motzkin.insert(x.as_ptuple());
    for (const auto& x : enumerate_ptuples(n)) CHECK(geq_r1(kz_dual_rank_simple(x)) == motzkin.contains(x));
  }
}

TEST_CASE("next_neighbor_rank") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& x : enumerate_ptuples(n))
      for (int i = 1; i < n; ++i) CHECK(next_neighbor_rank(x, i) == kz_rank_simple(x, i, i + 1));
}

TEST_CASE("hat commutes with reversal") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& x : enumerate_ptuples(n)) {
      std::vector<int> rev(x.coords().rbegin(), x.coords().rend());
      CHECK(hat(kz_dual_rank_simple(x)) == kz_dual_rank_simple(PTuple(n, rev)));
    }
  }
}

TEST_CASE("as_path_multisegment") {
  const PTuple x(4, {1, 2, 1});
  CHECK(as_path_multisegment(path_to_multisegment(x)) == x);
  Multisegment m = path_to_multisegment(x);
  m.set(1, 1, 3);
  CHECK_FALSE(as_path_multisegment(m).has_value());
  Multisegment long_seg(3);
  long_seg.set(1, 3, 1);
  CHECK_FALSE(as_path_multisegment(long_seg).has_value());
}
