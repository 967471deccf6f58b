#include "lindeg/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace lindeg {
namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

void motzkin_dfs(int n, std::vector<int>& prefix, std::vector<MotzkinPath>& out) {
  const int k = static_cast<int>(prefix.size()) + 1;
  if (k == n) {
    if (prefix.empty() || prefix.back() <= 1) out.emplace_back(n, prefix);
    return;
  }
  const int prev = prefix.empty() ? 0 : prefix.back();
  const int hi = std::min(prev + 1, n - k);
  for (int x = std::max(prev - 1, 0); x <= hi; ++x) {
    prefix.push_back(x);
    motzkin_dfs(n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

int t0_entry(int n, int k) { return std::min(k, n - k); }

std::vector<int> t0_tuple(int n) {
  require_positive(n, "t0_tuple");
  std::vector<int> t(static_cast<std::size_t>(n - 1));
  for (int k = 1; k < n; ++k) t[static_cast<std::size_t>(k - 1)] = t0_entry(n, k);
  return t;
}

PTuple::PTuple(int n, std::vector<int> coords) : n_(n), coords_(std::move(coords)) {
  require_positive(n, "PTuple");
  if (coords_.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("PTuple: expected " + std::to_string(n - 1) + " coordinates");
  }
  for (int k = 1; k < n; ++k) {
    const int y = coords_[static_cast<std::size_t>(k - 1)];
    if (y < 0 || y > t0_entry(n, k)) {
      throw std::invalid_argument("PTuple: coordinate " + std::to_string(k) + " out of range");
    }
  }
}

int PTuple::total() const {
  int s = 0;
  for (int y : coords_) s += y;
  return s;
}

std::string PTuple::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(coords_[k]);
  }
  return s + ")";
}

bool MotzkinPath::is_motzkin(int n, std::span<const int> coords) {
  if (n < 1 || coords.size() != static_cast<std::size_t>(n - 1)) return false;
  int prev = 0;
  for (int x : coords) {
    if (x < 0 || x - prev > 1 || prev - x > 1) return false;
    prev = x;
  }
  return prev <= 1;
}

MotzkinPath::MotzkinPath(int n, std::vector<int> coords)
    : path_(is_motzkin(n, coords) ? PTuple(n, std::move(coords))
                                  : throw std::invalid_argument("MotzkinPath: not a Motzkin path")) {}

namespace detail {

UpperTriangle::UpperTriangle(int n) : n_(n) {
  require_positive(n, "UpperTriangle");
  values_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2, 0);
}

std::size_t UpperTriangle::index(int i, int j) const {
  if (i < 1 || j < i || j > n_) {
    throw std::out_of_range("index (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside 1<=i<=j<=" + std::to_string(n_));
  }
  // Rows 1..i-1 hold n, n-1, ..., n-i+2 entries.
  const std::size_t before = static_cast<std::size_t>((i - 1) * n_ - (i - 1) * (i - 2) / 2);
  return before + static_cast<std::size_t>(j - i);
}

int UpperTriangle::get_or_zero(int i, int j) const {
  if (i < 1 || j < i || j > n_) return 0;
  return at(i, j);
}

}  // namespace detail

bool Multisegment::is_near_simple() const {
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 2; j <= n(); ++j)
      if (at(i, j) != 0) return false;
  return true;
}

std::string Multisegment::to_string() const {
  std::string s;
  for (int i = 1; i <= n(); ++i) {
    for (int j = i; j <= n(); ++j) {
      if (at(i, j) == 0) continue;
      if (!s.empty()) s += ';';
      s += std::to_string(i) + "," + std::to_string(j) + "=" + std::to_string(at(i, j));
    }
  }
  return s;
}

RankTuple RankTuple::from_off_diagonal(int n, std::span<const int> values) {
  RankTuple r(n);
  const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  if (values.size() != expected) {
    throw std::invalid_argument("RankTuple: expected " + std::to_string(expected) + " off-diagonal entries");
  }
  std::size_t idx = 0;
  for (int i = 1; i <= n; ++i) {
    r.set(i, i, n + 1);
    for (int j = i + 1; j <= n; ++j) r.set(i, j, values[idx++]);
  }
  return r;
}

std::vector<int> RankTuple::off_diagonal() const {
  std::vector<int> out;
  for (int i = 1; i <= n(); ++i)
    for (int j = i + 1; j <= n(); ++j) out.push_back(at(i, j));
  return out;
}

std::string RankTuple::to_string() const {
  std::string s = "(";
  bool first = true;
  for (int v : off_diagonal()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(v);
  }
  return s + ")";
}

std::vector<MotzkinPath> enumerate_motzkin(int n) {
  require_positive(n, "enumerate_motzkin");
  std::vector<MotzkinPath> out;
  std::vector<int> prefix;
  motzkin_dfs(n, prefix, out);
  return out;
}

std::vector<PTuple> enumerate_ptuples(int n) {
  require_positive(n, "enumerate_ptuples");
  const std::vector<int> top = t0_tuple(n);
  std::vector<int> cur(top.size(), 0);
  std::vector<PTuple> out;
  while (true) {
    out.emplace_back(n, cur);
    std::size_t k = cur.size();
    while (k > 0 && cur[k - 1] == top[k - 1]) cur[--k] = 0;
    if (k == 0) break;
    ++cur[k - 1];
  }
  return out;
}

bool ptuple_leq(const PTuple& a, const PTuple& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ptuple_leq: mismatched n");
  for (int k = 1; k < a.n(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Multisegment near_simple_multisegment(int n, std::span<const int> x) {
  require_positive(n, "near_simple_multisegment");
  if (x.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("near_simple_multisegment: expected " + std::to_string(n - 1) + " entries");
  }
  auto xs = [&](int k) { return (k <= 0 || k >= n) ? 0 : x[static_cast<std::size_t>(k - 1)]; };
  Multisegment m(n);
  for (int k = 1; k < n; ++k) {
    if (xs(k) < 0) throw std::invalid_argument("near_simple_multisegment: negative entry");
    m.set(k, k + 1, xs(k));
  }
  for (int l = 1; l <= n; ++l) {
    const int a = n + 1 - xs(l) - xs(l - 1);
    if (a < 0) {
      throw std::invalid_argument("near_simple_multisegment: diagonal multiplicity at " +
                                  std::to_string(l) + " would be negative");
    }
    m.set(l, l, a);
  }
  return m;
}

Multisegment path_to_multisegment(const PTuple& x) {
  return near_simple_multisegment(x.n(), x.coords());
}

RankTuple multisegment_to_rank(const Multisegment& m) {
  const int n = m.n();
  RankTuple r(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int s = 0;
      for (int k = 1; k <= i; ++k)
        for (int l = j; l <= n; ++l) s += m.at(k, l);
      r.set(i, j, s);
    }
  }
  return r;
}

Multisegment rank_to_multisegment(const RankTuple& r) {
  const int n = r.n();
  Multisegment m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const int v = r.get_or_zero(i, j) - r.get_or_zero(i - 1, j) - r.get_or_zero(i, j + 1) +
                    r.get_or_zero(i - 1, j + 1);
      if (v < 0) {
        throw std::invalid_argument("rank_to_multisegment: negative multiplicity at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
      m.set(i, j, v);
    }
  }
  return m;
}

RankTuple r1_tuple(int n) {
  RankTuple r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) r.set(i, j, n + 1 + i - j);
  return r;
}

RankTuple rank_from_motzkin(const MotzkinPath& x) {
  const int n = x.n();
  RankTuple r(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int best = 0;  // k = l = m = i
      for (int k = i; k <= j; ++k)
        for (int l = k; l <= j; ++l)
          for (int m = l; m <= j; ++m) best = std::max(best, x[l - 1] + x[l] - x[k - 1] - x[m]);
      r.set(i, j, n + 1 - best);
    }
  }
  return r;
}

RankTuple hat(const RankTuple& r) {
  const int n = r.n();
  RankTuple out(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.set(i, j, r.at(n + 1 - j, n + 1 - i));
  return out;
}

bool geq_r1(const RankTuple& r) {
  const int n = r.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (r.at(i, j) < n + 1 + i - j) return false;
  return true;
}

bool has_single_peak(const MotzkinPath& x) {
  const int n = x.n();
  if (n == 1) return true;
  for (int p = 1; p <= n - 1; ++p) {
    bool ok = true;
    for (int s = 1; s <= p && ok; ++s) ok = x[s - 1] <= x[s];
    for (int t = p; t <= n - 1 && ok; ++t) ok = x[t] >= x[t + 1];
    if (ok) return true;
  }
  return false;
}

std::vector<MotzkinPath> enumerate_single_peak(int n) {
  std::vector<MotzkinPath> out;
  for (auto& x : enumerate_motzkin(n))
    if (has_single_peak(x)) out.push_back(std::move(x));
  return out;
}

std::vector<RankTuple> pbw_locus_ranks(int n) {
  if (n < 2) throw std::invalid_argument("pbw_locus_ranks: n must be >= 2");
  if (n > 30) throw std::invalid_argument("pbw_locus_ranks: n too large");
  std::vector<RankTuple> out;
  const unsigned subsets = 1u << (n - 1);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    // Bit k-1 set <=> r_{k,k+1} = n.
    RankTuple r(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        int drops = 0;
        for (int k = i; k <= j - 1; ++k) drops += (mask >> (k - 1)) & 1u;
        r.set(i, j, n + 1 - drops);
      }
    }
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(),
            [](const RankTuple& a, const RankTuple& b) { return a.off_diagonal() < b.off_diagonal(); });
  return out;
}

BigInt motzkin_number(int n) {
  if (n < 0) throw std::invalid_argument("motzkin_number: n must be >= 0");
  std::vector<BigInt> m{1};
  for (int k = 0; k < n; ++k) {
    // M_{k+1} = M_k + sum_{i=0}^{k-1} M_i M_{k-1-i}
    BigInt next = m[static_cast<std::size_t>(k)];
    for (int i = 0; i <= k - 1; ++i) next += m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(k - 1 - i)];
    m.push_back(std::move(next));
  }
  return m[static_cast<std::size_t>(n)];
}

BigInt bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number: n must be >= 0");
  // Bell triangle: each row starts with the last entry of the previous row;
  // the first entry of row k is B_k.
  std::vector<BigInt> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace lindeg
