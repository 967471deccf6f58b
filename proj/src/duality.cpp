#include "lindeg/duality.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace lindeg {
namespace {

void require_interval(int i, int j, int n, const char* what) {
  if (i < 1 || j < i || j > n) {
    throw std::invalid_argument(std::string(what) + ": need 1 <= i <= j <= n");
  }
}

// Fills cells in row-major order; each cell is bounded below by its upper and
// left neighbours, which is exactly monotonicity on the product order.
void extend(MonotoneMap& nu, int i, int j, int n, int cell,
            const std::function<void(const MonotoneMap&)>& visit) {
  const int cols = n - j + 1;
  if (cell == i * cols) {
    visit(nu);
    return;
  }
  const int k = cell / cols + 1;
  const int l = cell % cols + j;
  int lo = i;
  if (k > 1) lo = std::max(lo, nu(k - 1, l));
  if (l > j) lo = std::max(lo, nu(k, l - 1));
  for (int v = lo; v <= j; ++v) {
    nu.set(k, l, v);
    extend(nu, i, j, n, cell + 1, visit);
  }
}

}  // namespace

MonotoneMap::MonotoneMap(int i, int j, int n) : i_(i), j_(j), n_(n) {
  require_interval(i, j, n, "MonotoneMap");
  values_.assign(static_cast<std::size_t>(rows() * cols()), i);
}

bool MonotoneMap::is_monotone() const {
  for (int k = 1; k <= i_; ++k) {
    for (int l = j_; l <= n_; ++l) {
      const int v = (*this)(k, l);
      if (v < i_ || v > j_) return false;
      if (k < i_ && (*this)(k + 1, l) < v) return false;
      if (l < n_ && (*this)(k, l + 1) < v) return false;
    }
  }
  return true;
}

void for_each_monotone_map(int i, int j, int n, const std::function<void(const MonotoneMap&)>& visit) {
  MonotoneMap nu(i, j, n);
  extend(nu, i, j, n, 0, visit);
}

std::uint64_t count_monotone_maps(int i, int j, int n) {
  std::uint64_t count = 0;
  for_each_monotone_map(i, j, n, [&](const MonotoneMap&) { ++count; });
  return count;
}

int kz_rank_general(const Multisegment& m, int i, int j) {
  const int n = m.n();
  require_interval(i, j, n, "kz_rank_general");
  int best = std::numeric_limits<int>::max();
  for_each_monotone_map(i, j, n, [&](const MonotoneMap& nu) {
    int s = 0;
    for (int k = 1; k <= i; ++k)
      for (int l = j; l <= n; ++l) s += m.get_or_zero(nu(k, l) + k - i, nu(k, l) + l - j);
    best = std::min(best, s);
  });
  return best;
}

RankTuple kz_dual_rank_general(const Multisegment& m) {
  RankTuple r(m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i; j <= m.n(); ++j) r.set(i, j, kz_rank_general(m, i, j));
  return r;
}

int kz_rank_near_simple(const Multisegment& m, int i, int j) {
  require_interval(i, j, m.n(), "kz_rank_near_simple");
  if (!m.is_near_simple()) throw std::invalid_argument("kz_rank_near_simple: multisegment is not near-simple");
  int best = std::numeric_limits<int>::max();
  for (int p = i; p <= j; ++p)
    for (int q = p; q <= j; ++q)
      for (int r = q; r <= j; ++r)
        best = std::min(best, m.get_or_zero(p - 1, p) + m.get_or_zero(q, q) + m.get_or_zero(r, r + 1));
  return best;
}

RankTuple kz_dual_rank_near_simple(const Multisegment& m) {
  RankTuple r(m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = i; j <= m.n(); ++j) r.set(i, j, kz_rank_near_simple(m, i, j));
  return r;
}

int kz_rank_simple(const PTuple& x, int i, int j) {
  const int n = x.n();
  require_interval(i, j, n, "kz_rank_simple");
  int best = 0;
  for (int k = i; k <= j; ++k)
    for (int l = k; l <= j; ++l)
      for (int m = l; m <= j; ++m) best = std::max(best, x[l - 1] + x[l] - x[k - 1] - x[m]);
  return n + 1 - best;
}

RankTuple kz_dual_rank_simple(const PTuple& x) {
  RankTuple r(x.n());
  for (int i = 1; i <= x.n(); ++i)
    for (int j = i; j <= x.n(); ++j) r.set(i, j, kz_rank_simple(x, i, j));
  return r;
}

int next_neighbor_rank(const PTuple& x, int i) {
  if (i < 1 || i > x.n() - 1) throw std::invalid_argument("next_neighbor_rank: need 1 <= i <= n-1");
  return x.n() + 1 - std::max({0, x[i] - x[i + 1], x[i] - x[i - 1]});
}

std::optional<PTuple> as_path_multisegment(const Multisegment& m) {
  if (!m.is_near_simple()) return std::nullopt;
  const int n = m.n();
  std::vector<int> x(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) {
    x[static_cast<std::size_t>(k - 1)] = m.at(k, k + 1);
    if (m.at(k, k + 1) > t0_entry(n, k)) return std::nullopt;
  }
  PTuple p(n, std::move(x));
  if (path_to_multisegment(p) != m) return std::nullopt;
  return p;
}

}  // namespace lindeg
