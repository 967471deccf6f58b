#include "lindeg/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lindeg {
namespace {

const LaurentPoly& zero_poly() {
  static const LaurentPoly z;
  return z;
}

// Memoised quantum factorials/binomials with top index <= max_k.
class QuantumTable {
 public:
  explicit QuantumTable(int max_k) : max_k_(max_k) {
    for (int k = 0; k <= max_k; ++k) {
      facts_.push_back(qfact(k));
      std::vector<LaurentPoly> row;
      for (int m = 0; m <= k; ++m) row.push_back(qbinom(k, m));
      binoms_.push_back(std::move(row));
    }
  }

  const LaurentPoly& fact(int k) const { return facts_.at(static_cast<std::size_t>(k)); }

  const LaurentPoly& binom(int k, int m) const {
    if (m < 0 || m > k) return zero_poly();
    if (k > max_k_) throw std::out_of_range("QuantumTable: k=" + std::to_string(k));
    return binoms_[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
  }

 private:
  int max_k_;
  std::vector<LaurentPoly> facts_;
  std::vector<std::vector<LaurentPoly>> binoms_;
};

// (v^{-1} - v)^d, cached by d.
class AntiSymmetricPowers {
 public:
  const LaurentPoly& get(int d) {
    static const LaurentPoly base = LaurentPoly::monomial(1, -1) - LaurentPoly::v();
    while (static_cast<int>(powers_.size()) <= d) {
      powers_.push_back(powers_.empty() ? LaurentPoly(1) : powers_.back() * base);
    }
    return powers_[static_cast<std::size_t>(d)];
  }

 private:
  std::vector<LaurentPoly> powers_;
};

LaurentPoly w_coeff_with(const PTuple& x, const PTuple& y, const QuantumTable& q, AntiSymmetricPowers& anti) {
  const int n = x.n();
  if (!ptuple_leq(y, x)) return {};
  auto d = [&](int k) { return x[k] - y[k]; };
  int half_twice = 0;
  int total = 0;
  for (int k = 1; k < n; ++k) {
    half_twice += d(k) * (d(k) - 1);
    total += d(k);
  }
  if (half_twice % 2 != 0) throw std::logic_error("w_coeff: odd exponent numerator");
  LaurentPoly out = anti.get(total).shifted(-half_twice / 2);
  for (int k = 1; k < n; ++k) {
    if (d(k) > 1) out *= q.fact(d(k));
  }
  for (int k = 1; k <= n; ++k) {
    const int a = n + 1 - x[k - 1] - x[k];
    const LaurentPoly& b1 = q.binom(a + d(k) + d(k - 1), d(k));
    const LaurentPoly& b2 = q.binom(a + d(k - 1), d(k - 1));
    if (b1.is_zero() || b2.is_zero()) return {};
    if (b1 != LaurentPoly(1)) out *= b1;
    if (b2 != LaurentPoly(1)) out *= b2;
  }
  return out;
}

LaurentPoly lambda_with(const PTuple& y, const QuantumTable& q) {
  const int n = y.n();
  int exponent = 0;
  for (int k = 1; k < n; ++k) exponent -= (k - y[k]) * (n - k - y[k]);
  LaurentPoly out = LaurentPoly::monomial(1, exponent);
  for (int k = 1; k <= n; ++k) out *= q.binom(n + 1 - y[k - 1] - y[k], k - y[k]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ParameterSet

ParameterSet::ParameterSet(int n) : n_(n), tuples_(enumerate_ptuples(n)) {
  const std::vector<int> top = t0_tuple(n);
  strides_.assign(top.size(), 1);
  for (std::size_t k = top.size(); k-- > 1;) {
    strides_[k - 1] = strides_[k] * static_cast<std::size_t>(top[k] + 1);
  }
  descending_.resize(tuples_.size());
  std::iota(descending_.begin(), descending_.end(), std::size_t{0});
  std::sort(descending_.begin(), descending_.end(), [&](std::size_t a, std::size_t b) {
    const int ta = tuples_[a].total();
    const int tb = tuples_[b].total();
    if (ta != tb) return ta > tb;
    return a > b;
  });
}

std::size_t ParameterSet::index_of(const PTuple& y) const {
  if (y.n() != n_) throw std::invalid_argument("ParameterSet::index_of: mismatched n");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < strides_.size(); ++k) idx += strides_[k] * static_cast<std::size_t>(y.coords()[k]);
  return idx;
}

void ParameterSet::for_each_between(const PTuple& lo, const PTuple& hi,
                                    const std::function<void(std::size_t)>& visit) const {
  if (!ptuple_leq(lo, hi)) return;
  const std::size_t dims = strides_.size();
  std::vector<int> cur = lo.coords();
  std::size_t idx = index_of(lo);
  while (true) {
    visit(idx);
    std::size_t k = dims;
    while (k > 0 && cur[k - 1] == hi.coords()[k - 1]) {
      idx -= strides_[k - 1] * static_cast<std::size_t>(cur[k - 1] - lo.coords()[k - 1]);
      cur[k - 1] = lo.coords()[k - 1];
      --k;
    }
    if (k == 0) return;
    ++cur[k - 1];
    idx += strides_[k - 1];
  }
}

// ---------------------------------------------------------------------------
// Expansion / TransitionMatrix

LaurentPoly Expansion::at(const PTuple& y) const {
  auto it = coeffs_.find(y);
  return it == coeffs_.end() ? LaurentPoly{} : it->second;
}

void Expansion::set(const PTuple& y, LaurentPoly c) {
  if (y.n() != n_) throw std::invalid_argument("Expansion::set: mismatched n");
  if (c.is_zero()) {
    coeffs_.erase(y);
  } else {
    coeffs_.insert_or_assign(y, std::move(c));
  }
}

TransitionMatrix::TransitionMatrix(std::shared_ptr<const ParameterSet> params) : params_(std::move(params)) {
  rows_.resize(params_->size());
  for (std::size_t x = 0; x < params_->size(); ++x) {
    std::size_t box = 1;
    for (int c : (*params_)[x].coords()) box *= static_cast<std::size_t>(c + 1);
    rows_[x].resize(box);
  }
}

std::size_t TransitionMatrix::local_index(std::size_t x, std::size_t y) const {
  const auto& xs = (*params_)[x].coords();
  const auto& ys = (*params_)[y].coords();
  std::size_t idx = 0;
  for (std::size_t k = 0; k < xs.size(); ++k) idx = idx * static_cast<std::size_t>(xs[k] + 1) + static_cast<std::size_t>(ys[k]);
  return idx;
}

const LaurentPoly& TransitionMatrix::at(std::size_t x, std::size_t y) const {
  if (!ptuple_leq((*params_)[y], (*params_)[x])) return zero_poly();
  return rows_[x][local_index(x, y)];
}

const LaurentPoly& TransitionMatrix::at(const PTuple& x, const PTuple& y) const {
  return at(params_->index_of(x), params_->index_of(y));
}

void TransitionMatrix::set(std::size_t x, std::size_t y, LaurentPoly value) {
  if (!ptuple_leq((*params_)[y], (*params_)[x])) {
    throw std::invalid_argument("TransitionMatrix::set: entry outside y <= x");
  }
  rows_[x][local_index(x, y)] = std::move(value);
}

// ---------------------------------------------------------------------------
// PBW expansion

std::map<int, LaurentPoly> rank2_expand(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("rank2_expand: negative exponent");
  std::map<int, LaurentPoly> out;
  for (int r = 0; r <= std::min(b, c); ++r) {
    LaurentPoly coeff = qbinom(a + c - r, a).shifted(-(b - r) * (c - r));
    if (!coeff.is_zero()) out.emplace(r, std::move(coeff));
  }
  return out;
}

std::map<std::vector<int>, LaurentPoly> expand_two_row(const std::vector<int>& e, const std::vector<int>& f) {
  if (e.size() != f.size() || e.empty()) throw std::invalid_argument("expand_two_row: e and f need equal length n >= 1");
  const int n = static_cast<int>(e.size());
  for (int k = 0; k < n; ++k) {
    if (e[static_cast<std::size_t>(k)] < 0 || f[static_cast<std::size_t>(k)] < 0) {
      throw std::invalid_argument("expand_two_row: negative exponent");
    }
  }
  auto E = [&](int i) { return e[static_cast<std::size_t>(i - 1)]; };
  auto F = [&](int i) { return f[static_cast<std::size_t>(i - 1)]; };

  std::vector<int> hi(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) hi[static_cast<std::size_t>(i - 1)] = std::min(E(i), F(i + 1));

  std::map<std::vector<int>, LaurentPoly> out;
  std::vector<int> x(hi.size(), 0);
  while (true) {
    auto X = [&](int i) { return (i <= 0 || i >= n) ? 0 : x[static_cast<std::size_t>(i - 1)]; };
    int exponent = 0;
    for (int i = 1; i < n; ++i) exponent -= (E(i) - X(i)) * (F(i + 1) - X(i));
    LaurentPoly coeff = LaurentPoly::monomial(1, exponent);
    for (int i = 1; i <= n && !coeff.is_zero(); ++i) {
      coeff *= qbinom(E(i) + F(i) - X(i - 1) - X(i), F(i) - X(i - 1));
    }
    if (!coeff.is_zero()) out.emplace(x, std::move(coeff));

    std::size_t k = x.size();
    while (k > 0 && x[k - 1] == hi[k - 1]) x[--k] = 0;
    if (k == 0) break;
    ++x[k - 1];
  }
  return out;
}

LaurentPoly lambda_coeff(const PTuple& y) {
  const QuantumTable q(y.n() + 1);
  return lambda_with(y, q);
}

LaurentPoly w_coeff(const PTuple& x, const PTuple& y) {
  if (x.n() != y.n()) throw std::invalid_argument("w_coeff: mismatched n");
  const QuantumTable q(x.n() + 1);
  AntiSymmetricPowers anti;
  return w_coeff_with(x, y, q, anti);
}

TransitionMatrix w_matrix(int n) { return w_matrix(std::make_shared<const ParameterSet>(n)); }

TransitionMatrix w_matrix(std::shared_ptr<const ParameterSet> params) {
  const ParameterSet& p = *params;
  const QuantumTable q(p.n() + 1);
  AntiSymmetricPowers anti;
  TransitionMatrix w(params);
  for (std::size_t x = 0; x < p.size(); ++x) {
    p.for_each_between(p[0], p[x], [&](std::size_t y) { w.set(x, y, w_coeff_with(p[x], p[y], q, anti)); });
  }
  return w;
}

// ---------------------------------------------------------------------------
// Canonical basis

TransitionMatrix zeta_matrix(int n) { return zeta_matrix(w_matrix(n)); }

TransitionMatrix zeta_matrix(const TransitionMatrix& w) {
  const ParameterSet& p = w.params();
  TransitionMatrix zeta(w.params_ptr());
  // bar(zeta^{x'}_{m'}) for the current row x, indexed like p.
  std::vector<LaurentPoly> barred(p.size());

  std::vector<std::size_t> row;
  for (std::size_t x = 0; x < p.size(); ++x) {
    row.clear();
    p.for_each_between(p[0], p[x], [&](std::size_t s) { row.push_back(s); });
    // Closest to x first: every m strictly between s and x has a larger total.
    std::sort(row.begin(), row.end(), [&](std::size_t a, std::size_t b) {
      const int ta = p[a].total();
      const int tb = p[b].total();
      return ta != tb ? ta > tb : a > b;
    });

    for (std::size_t s : row) {
      if (s == x) {
        zeta.set(x, x, LaurentPoly(1));
        barred[x] = LaurentPoly(1);
        continue;
      }
      LaurentPoly g = w.at(x, s);
      p.for_each_between(p[s], p[x], [&](std::size_t m) {
        if (m == s || m == x) return;
        const LaurentPoly& zb = barred[m];
        if (zb.is_zero()) return;
        const LaurentPoly& wm = w.at(m, s);
        if (!wm.is_zero()) g += zb * wm;
      });
      if (!g.coeff(0).is_zero() || !(g + g.bar()).is_zero()) {
        throw std::logic_error("zeta_matrix: right-hand side not bar-antisymmetric at x=" + p[x].to_string() +
                               " s=" + p[s].to_string());
      }
      LaurentPoly z = g.negative_part();
      barred[s] = z.bar();
      zeta.set(x, s, std::move(z));
    }
  }
  return zeta;
}

Expansion mu_coeffs(int n) { return mu_coeffs(zeta_matrix(n)); }

Expansion mu_coeffs(const TransitionMatrix& zeta) {
  const ParameterSet& p = zeta.params();
  const QuantumTable q(p.n() + 1);
  std::vector<LaurentPoly> mu(p.size());
  for (std::size_t y : p.descending_order()) {
    LaurentPoly acc = lambda_with(p[y], q);
    p.for_each_between(p[y], p.top(), [&](std::size_t x) {
      if (x == y || mu[x].is_zero()) return;
      const LaurentPoly& z = zeta.at(x, y);
      if (!z.is_zero()) acc -= mu[x] * z;
    });
    mu[y] = std::move(acc);
  }
  Expansion out(p.n());
  for (std::size_t y = 0; y < p.size(); ++y) out.set(p[y], std::move(mu[y]));
  return out;
}

int deg_lambda(const PTuple& y) {
  const int n = y.n();
  int d = (1 - y[1]) * n;
  for (int k = 1; k < n; ++k) d += (n - k - y[k]) * (y[k] - y[k + 1] + 1);
  return d;
}

int deg_diff(const PTuple& y, const PTuple& z) {
  if (y.n() != z.n()) throw std::invalid_argument("deg_diff: mismatched n");
  int d = 0;
  for (int k = 1; k < y.n(); ++k) d += (z[k] - y[k]) * (z[k] - z[k + 1] + y[k] - y[k - 1] + 2);
  return d;
}

}  // namespace lindeg
