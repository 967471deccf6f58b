#include "lindeg/combinatorics.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

using namespace lindeg;

namespace {

RankTuple R(int n, std::vector<int> off) { return RankTuple::from_off_diagonal(n, off); }

std::vector<std::vector<int>> coords_of(const std::vector<MotzkinPath>& paths) {
  std::vector<std::vector<int>> out;
  for (const auto& p : paths) out.push_back(p.coords());
  return out;
}

// Set partitions of {0..n-1} by restricted growth strings.
int count_set_partitions(int n) {
  int count = 0;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int max_used) {
    if (pos == n) {
      ++count;
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      a[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(max_used, b));
    }
  };
  if (n == 0) return 1;
  rec(1, 0);
  return count;
}

// Every multisegment on n with entries in [0, cap].
void for_each_multisegment(int n, int cap, const std::function<void(const Multisegment&)>& visit) {
  Multisegment m(n);
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(m);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      m.set(cells[k].first, cells[k].second, v);
      rec(k + 1);
    }
  };
  rec(0);
}

}  // namespace

TEST_CASE("enumerate_motzkin") {
  CHECK(coords_of(enumerate_motzkin(2)) == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(enumerate_motzkin(4).size() == 9);
  const auto one = enumerate_motzkin(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].coords().empty());
  CHECK(one[0].to_string() == "()");

  for (int n = 1; n <= 12; ++n) {
    const auto paths = enumerate_motzkin(n);
    CHECK(BigInt(paths.size()) == motzkin_number(n));
    CHECK(std::is_sorted(paths.begin(), paths.end()));
  }
}

TEST_CASE("MotzkinPath validation") {
  CHECK(MotzkinPath::is_motzkin(4, std::vector<int>{1, 2, 1}));
  CHECK_FALSE(MotzkinPath::is_motzkin(4, std::vector<int>{2, 1, 0}));
  CHECK_FALSE(MotzkinPath::is_motzkin(4, std::vector<int>{1, 0, 2}));
  CHECK_FALSE(MotzkinPath::is_motzkin(3, std::vector<int>{1}));
  CHECK_THROWS_AS(MotzkinPath(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("enumerate_ptuples") {
  const auto p4 = enumerate_ptuples(4);
  CHECK(p4.size() == 12);
  CHECK(p4.back() == PTuple(4, {1, 2, 1}));
  CHECK(enumerate_ptuples(2) == std::vector<PTuple>{PTuple(2, {0}), PTuple(2, {1})});
  CHECK(enumerate_ptuples(3) ==
        std::vector<PTuple>{PTuple(3, {0, 0}), PTuple(3, {0, 1}), PTuple(3, {1, 0}), PTuple(3, {1, 1})});

  for (int n = 1; n <= 9; ++n) {
    const auto all = enumerate_ptuples(n);
    std::size_t expected = 1;
    for (int k = 1; k < n; ++k) expected *= static_cast<std::size_t>(std::min(k, n - k) + 1);
    CHECK(all.size() == expected);
    CHECK(std::is_sorted(all.begin(), all.end()));
    const std::set<PTuple> as_set(all.begin(), all.end());
    for (const auto& x : enumerate_motzkin(n)) CHECK(as_set.contains(x.as_ptuple()));
  }
}

TEST_CASE("PTuple validation and endpoints") {
  CHECK_THROWS_AS(PTuple(4, {2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PTuple(4, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(PTuple(3, {-1, 0}), std::invalid_argument);
  const PTuple y(4, {1, 2, 1});
  CHECK(y[0] == 0);
  CHECK(y[2] == 2);
  CHECK(y[4] == 0);
  CHECK(y.total() == 4);
  CHECK(y.to_string() == "(1,2,1)");
  CHECK(t0_tuple(5) == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("ptuple_leq") {
  CHECK(ptuple_leq(PTuple(3, {0, 1}), PTuple(3, {1, 1})));
  CHECK_FALSE(ptuple_leq(PTuple(3, {1, 0}), PTuple(3, {0, 1})));
  CHECK(ptuple_leq(PTuple(3, {1, 0}), PTuple(3, {1, 0})));
  CHECK_THROWS_AS(ptuple_leq(PTuple(3, {0, 0}), PTuple(4, {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("path_to_multisegment") {
  const Multisegment m2 = path_to_multisegment(PTuple(2, {1}));
  CHECK(m2.at(1, 1) == 2);
  CHECK(m2.at(1, 2) == 1);
  CHECK(m2.at(2, 2) == 2);
  CHECK(m2.to_string() == "1,1=2;1,2=1;2,2=2");

  const Multisegment m3 = path_to_multisegment(PTuple(3, {0, 0}));
  CHECK(m3.to_string() == "1,1=4;2,2=4;3,3=4");

  const Multisegment m4 = path_to_multisegment(PTuple(4, {1, 2, 1}));
  CHECK(m4.at(1, 1) == 4);
  CHECK(m4.at(2, 2) == 2);
  CHECK(m4.at(3, 3) == 2);
  CHECK(m4.at(4, 4) == 4);
  CHECK(m4.at(1, 2) == 1);
  CHECK(m4.at(2, 3) == 2);
  CHECK(m4.at(3, 4) == 1);
  CHECK(m4.at(1, 3) == 0);
  CHECK(m4.is_near_simple());

  CHECK_THROWS_AS(near_simple_multisegment(2, std::vector<int>{4}), std::invalid_argument);
  CHECK_THROWS_AS(near_simple_multisegment(3, std::vector<int>{-1, 0}), std::invalid_argument);
}

TEST_CASE("multisegment_to_rank") {
  Multisegment m(2);
  m.set(1, 1, 2);
  m.set(1, 2, 1);
  m.set(2, 2, 2);
  const RankTuple r = multisegment_to_rank(m);
  CHECK(r.at(1, 1) == 3);
  CHECK(r.at(1, 2) == 1);
  CHECK(r.at(2, 2) == 3);

  const RankTuple zero = multisegment_to_rank(Multisegment(4));
  CHECK(std::all_of(zero.flat().begin(), zero.flat().end(), [](int v) { return v == 0; }));

  Multisegment whole(5);
  whole.set(1, 5, 1);
  const RankTuple ones = multisegment_to_rank(whole);
  CHECK(std::all_of(ones.flat().begin(), ones.flat().end(), [](int v) { return v == 1; }));
}

TEST_CASE("rank_to_multisegment") {
  CHECK(rank_to_multisegment(RankTuple(3)) == Multisegment(3));

  // Off-diagonal (3,2,3) with diagonal 4 inverts to m11=1, m12=1, m13=2, m22=0, m23=1, m33=1.
  const Multisegment m = rank_to_multisegment(R(3, {3, 2, 3}));
  CHECK(m.to_string() == "1,1=1;1,2=1;1,3=2;2,3=1;3,3=1");

  // x' for x=(1,1) has rank tuple (4,1,0,4,1,4) in (r11,r12,r13,r22,r23,r33) order.
  const Multisegment x11 = path_to_multisegment(PTuple(3, {1, 1}));
  const RankTuple rx = multisegment_to_rank(x11);
  CHECK(rx.flat() == std::vector<int>{4, 1, 0, 4, 1, 4});
  CHECK(rank_to_multisegment(rx) == x11);

  RankTuple bad(2);
  bad.set(1, 1, 1);
  bad.set(1, 2, 2);
  bad.set(2, 2, 1);
  CHECK_THROWS_AS(rank_to_multisegment(bad), std::invalid_argument);
}

TEST_CASE("rank round trip is exhaustive for n <= 4, multiplicities <= 3") {
  for (int n = 1; n <= 3; ++n) {
    for_each_multisegment(n, 3, [](const Multisegment& m) {
      REQUIRE(rank_to_multisegment(multisegment_to_rank(m)) == m);
    });
  }
  // n = 4 has 10 cells; 4^10 is about a million, still fast.
  std::size_t seen = 0;
  for_each_multisegment(4, 3, [&](const Multisegment& m) {
    ++seen;
    if (rank_to_multisegment(multisegment_to_rank(m)) != m) FAIL("round trip failed for " << m.to_string());
  });
  CHECK(seen == 1048576);
}

TEST_CASE("r1_tuple") {
  CHECK(r1_tuple(3) == R(3, {3, 2, 3}));
  CHECK(r1_tuple(4) == R(4, {4, 3, 2, 4, 3, 4}));
  for (int i = 1; i <= 5; ++i) CHECK(r1_tuple(5).at(i, i) == 6);
  CHECK(r1_tuple(3).to_string() == "(3,2,3)");
}

TEST_CASE("rank_from_motzkin") {
  CHECK(rank_from_motzkin(MotzkinPath(3, {1, 1})) == R(3, {3, 2, 3}));
  CHECK(rank_from_motzkin(MotzkinPath(3, {1, 0})) == R(3, {3, 3, 4}));
  CHECK(rank_from_motzkin(MotzkinPath(4, {1, 2, 1})) == R(4, {4, 3, 2, 4, 3, 4}));

  for (int n = 1; n <= 8; ++n) {
    std::set<RankTuple> images;
    for (const auto& x : enumerate_motzkin(n)) {
      const RankTuple r = rank_from_motzkin(x);
      CHECK(geq_r1(r));
      for (int i = 1; i <= n; ++i) CHECK(r.at(i, i) == n + 1);
      images.insert(r);
    }
    // Injective on Motzkin paths.
    CHECK(BigInt(images.size()) == motzkin_number(n));
  }
}

TEST_CASE("hat") {
  CHECK(hat(R(3, {3, 3, 4})) == R(3, {4, 3, 3}));
  CHECK(hat(r1_tuple(6)) == r1_tuple(6));
  for (int n = 2; n <= 6; ++n) {
    for (const auto& x : enumerate_ptuples(n)) {
      const RankTuple r = multisegment_to_rank(path_to_multisegment(x));
      CHECK(hat(hat(r)) == r);
      CHECK(geq_r1(r) == geq_r1(hat(r)));
    }
  }
}

TEST_CASE("geq_r1") {
  CHECK_FALSE(geq_r1(R(4, {4, 2, 2, 3, 3, 5})));
  CHECK(geq_r1(R(4, {4, 4, 4, 5, 4, 4})));
  CHECK(geq_r1(r1_tuple(4)));
  RankTuple low_diag = r1_tuple(3);
  low_diag.set(2, 2, 3);
  CHECK_FALSE(geq_r1(low_diag));
}

TEST_CASE("single-peak paths") {
  CHECK(enumerate_single_peak(1).size() == 1);
  CHECK(enumerate_single_peak(3).size() == 4);
  CHECK(enumerate_single_peak(4).size() == 8);
  CHECK(has_single_peak(MotzkinPath(5, {1, 2, 2, 1})));
  CHECK(has_single_peak(MotzkinPath(5, {0, 1, 1, 0})));
  CHECK_FALSE(has_single_peak(MotzkinPath(5, {1, 0, 1, 0})));
  CHECK_FALSE(has_single_peak(MotzkinPath(5, {1, 1, 0, 1})));
  for (int n = 1; n <= 12; ++n) {
    const auto peaks = enumerate_single_peak(n);
    CHECK(peaks.size() == (std::size_t{1} << (n - 1)));
    CHECK(std::is_sorted(peaks.begin(), peaks.end()));
  }
}

TEST_CASE("PBW locus") {
  const std::vector<RankTuple> expected4 = {
      R(4, {4, 3, 2, 4, 3, 4}), R(4, {4, 4, 3, 5, 4, 4}), R(4, {4, 3, 3, 4, 4, 5}), R(4, {4, 4, 4, 5, 5, 5}),
      R(4, {5, 4, 3, 4, 3, 4}), R(4, {5, 4, 4, 4, 4, 5}), R(4, {5, 5, 4, 5, 4, 4}), R(4, {5, 5, 5, 5, 5, 5}),
  };
  const auto pbw4 = pbw_locus_ranks(4);
  CHECK(std::set<RankTuple>(pbw4.begin(), pbw4.end()) == std::set<RankTuple>(expected4.begin(), expected4.end()));

  const auto pbw3 = pbw_locus_ranks(3);
  const std::set<RankTuple> all3 = {R(3, {3, 2, 3}), R(3, {3, 3, 4}), R(3, {4, 3, 3}), R(3, {4, 4, 4})};
  CHECK(std::set<RankTuple>(pbw3.begin(), pbw3.end()) == all3);

  for (int n = 2; n <= 8; ++n) {
    const auto pbw = pbw_locus_ranks(n);
    CHECK(pbw.size() == (std::size_t{1} << (n - 1)));
    std::set<RankTuple> from_peaks;
    for (const auto& x : enumerate_single_peak(n)) from_peaks.insert(rank_from_motzkin(x));
    CHECK(from_peaks == std::set<RankTuple>(pbw.begin(), pbw.end()));
  }
  CHECK_THROWS_AS(pbw_locus_ranks(1), std::invalid_argument);
}

TEST_CASE("counting sequences") {
  CHECK(motzkin_number(0) == 1);
  CHECK(motzkin_number(2) == 2);
  CHECK(motzkin_number(3) == 4);
  CHECK(motzkin_number(4) == 9);
  CHECK(motzkin_number(10) == 2188);
  CHECK(bell_number(0) == 1);
  CHECK(bell_number(3) == 5);
  CHECK(bell_number(4) == 15);
  for (int n = 0; n <= 9; ++n) CHECK(bell_number(n) == count_set_partitions(n));
  CHECK(bell_number(30) == BigInt("846749014511809332450147"));
}

TEST_CASE("RankTuple off-diagonal order") {
  const RankTuple r = R(4, {1, 2, 3, 4, 5, 6});
  CHECK(r.at(1, 2) == 1);
  CHECK(r.at(1, 4) == 3);
  CHECK(r.at(2, 3) == 4);
  CHECK(r.at(3, 4) == 6);
  CHECK(r.off_diagonal() == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(r.get_or_zero(0, 2) == 0);
  CHECK(r.get_or_zero(3, 2) == 0);
  CHECK(r.get_or_zero(2, 5) == 0);
}
