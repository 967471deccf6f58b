#include "lindeg/laurent.hpp"

#include "lindeg/simd.hpp"

#include <algorithm>
#include <stdexcept>

namespace lindeg {
namespace {

// Dense spans wider than this go through the sparse path instead.
constexpr std::int64_t kMaxDenseSpan = std::int64_t{1} << 20;

std::int64_t span_of(const LaurentPoly& p) {
  return static_cast<std::int64_t>(p.degree()) - p.low_degree() + 1;
}

// Magnitude of the largest coefficient if it fits the kernel bound, else -1.
std::int64_t small_magnitude(const LaurentPoly& p) {
  std::int64_t best = 0;
  for (const auto& [e, c] : p.terms()) {
    if (c > simd::kMaxOperandMagnitude || c < -simd::kMaxOperandMagnitude) return -1;
    const auto m = static_cast<std::int64_t>(c < 0 ? -c : c);
    best = std::max(best, m);
  }
  return best;
}

std::vector<std::int64_t> densify_i64(const LaurentPoly& p) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(span_of(p)), 0);
  const int low = p.low_degree();
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - low)] = static_cast<std::int64_t>(c);
  return out;
}

std::vector<BigInt> densify(const LaurentPoly& p) {
  std::vector<BigInt> out(static_cast<std::size_t>(span_of(p)));
  const int low = p.low_degree();
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

LaurentPoly mul_sparse(const LaurentPoly& a, const LaurentPoly& b) {
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) raw.emplace_back(ea + eb, ca * cb);
  return LaurentPoly::from_terms(std::move(raw));
}

LaurentPoly mul_dense_bigint(const LaurentPoly& a, const LaurentPoly& b) {
  const int low = a.low_degree() + b.low_degree();
  const std::vector<BigInt> da = densify(a);
  std::vector<BigInt> out(static_cast<std::size_t>(span_of(a) + span_of(b) - 1));
  for (const auto& [eb, cb] : b.terms()) {
    const std::size_t off = static_cast<std::size_t>(eb - b.low_degree());
    for (std::size_t i = 0; i < da.size(); ++i) {
      if (!da[i].is_zero()) out[off + i] += da[i] * cb;
    }
  }
  return LaurentPoly::from_dense(low, out);
}

}  // namespace

LaurentPoly::LaurentPoly(BigInt constant) {
  if (!constant.is_zero()) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt c, int e) {
  std::vector<Term> t;
  if (!c.is_zero()) t.emplace_back(e, std::move(c));
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::from_dense(int low, const std::vector<BigInt>& coeffs) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out.emplace_back(low + static_cast<int>(i), coeffs[i]);
  }
  return LaurentPoly(std::move(out));
}

BigInt LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::bar() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(-it->first, it->second);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::negative_part() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.first >= 0) break;
    out.push_back(t);
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int e) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.first += e;
  return LaurentPoly(std::move(out));
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("LaurentPoly::exact_div: division by zero");
  if (is_zero()) return LaurentPoly{};
  // Strip the v-power from both sides; the remaining polynomials have nonzero
  // constant terms, so divisibility in Z[v^{+-1}] equals divisibility in Z[v].
  std::vector<BigInt> rem = densify(*this);
  const std::vector<BigInt> den = densify(divisor);
  const std::size_t dr = rem.size() - 1;
  const std::size_t dd = den.size() - 1;
  if (dr < dd) return std::nullopt;
  const BigInt& lead = den.back();
  std::vector<BigInt> quot(dr - dd + 1);
  for (std::size_t k = dr - dd + 1; k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top.is_zero()) continue;
    if (BigInt(top % lead) != 0) return std::nullopt;
    BigInt q = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (!den[j].is_zero()) rem[k + j] -= q * den[j];
    }
    quot[k] = std::move(q);
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (!rem[j].is_zero()) return std::nullopt;
  }
  return from_dense(low_degree() - divisor.low_degree(), quot);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      BigInt s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  return *this += a * b;
}

LaurentPoly operator-(const LaurentPoly& a) {
  std::vector<LaurentPoly::Term> out = a.terms_;
  for (auto& t : out) t.second = -t.second;
  return LaurentPoly(std::move(out));
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
  if (b.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);

  const std::int64_t span = span_of(a) + span_of(b);
  if (span > kMaxDenseSpan) return mul_sparse(a, b);

  const std::int64_t ma = small_magnitude(a);
  const std::int64_t mb = small_magnitude(b);
  if (ma >= 0 && mb >= 0 && simd::convolution_fits_i64(ma, mb, std::min(a.size(), b.size()))) {
    const std::vector<std::int64_t> da = densify_i64(a);
    const std::vector<std::int64_t> db = densify_i64(b);
    std::vector<std::int64_t> out(da.size() + db.size() - 1, 0);
    simd::convolve(da, db, out);
    std::vector<LaurentPoly::Term> terms;
    const int low = a.low_degree() + b.low_degree();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i] != 0) terms.emplace_back(low + static_cast<int>(i), BigInt(out[i]));
    }
    return LaurentPoly(std::move(terms));
  }
  return mul_dense_bigint(a, b);
}

LaurentPoly mul_bigint_reference(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return mul_sparse(a, b);
}

LaurentPoly pow(const LaurentPoly& p, int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly qint(int k) {
  if (k < 0) throw std::invalid_argument("qint: k must be nonnegative");
  std::vector<LaurentPoly::Term> t;
  t.reserve(static_cast<std::size_t>(k));
  for (int e = 1 - k; e <= k - 1; e += 2) t.emplace_back(e, 1);
  return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly qfact(int k) {
  if (k < 0) throw std::invalid_argument("qfact: k must be nonnegative");
  LaurentPoly out(1);
  for (int i = 2; i <= k; ++i) out *= qint(i);
  return out;
}

LaurentPoly qbinom(int k, int m) {
  if (m < 0 || m > k) return {};
  if (m == 0 || m == k) return 1;
  // [k]!/([m]![k-m]!) = ([k][k-1]...[k-m'+1]) / [m']! with m' = min(m, k-m).
  const int mm = std::min(m, k - m);
  LaurentPoly num(1);
  for (int i = k - mm + 1; i <= k; ++i) num *= qint(i);
  auto q = num.exact_div(qfact(mm));
  if (!q) throw std::logic_error("qbinom: inexact division for k=" + std::to_string(k));
  return *std::move(q);
}

std::string to_string(const LaurentPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += var;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace lindeg
